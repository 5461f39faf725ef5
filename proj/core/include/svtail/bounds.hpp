#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "svtail/matrix.hpp"

namespace svtail {

/// Which closed-form tail bound a LogProbBound came from.
enum class BoundTag { Net31, Series33, RectSeries34, Entrywise35, Refined36, Toeplitz43 };

std::string_view to_string(BoundTag tag);
BoundTag bound_tag_from_string(std::string_view name);  // throws UnknownTagError

/// Parameters a bound was evaluated with; unused fields stay 0 / NaN.
struct BoundParams {
    int m = 0;
    int n = 0;
    int d = 0;
    double b = std::numeric_limits<double>::quiet_NaN();
    double c = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
    double theta_star = std::numeric_limits<double>::quiet_NaN();  // optimizer of the series mgf
    double crossover = std::numeric_limits<double>::quiet_NaN();   // piecewise switch point
};

/// A tail-bound value kept in natural-log space. log_value may exceed 0
/// when the raw bound exceeds 1; the linear-scale report is always clamped
/// to 1 (probability()), so clamped is true for every bound produced here.
struct LogProbBound {
    double log_value;
    BoundTag tag;
    BoundParams params;
    bool clamped = true;

    double probability() const;   // min(exp(log_value), 1)
    double log10_value() const;
};

/// P(|B| > t) <= 2 * 5^(m+n) * exp(-c t^2), evaluated as
/// ln 2 + (m+n) ln 5 - c t^2 so huge shapes stay finite.
LogProbBound net_bound(int m, int n, double c, double t);

/// P(lambda_max(sum_k x_k H_k) >= t) <= d * exp(-t^2 / (2 b^2 rho)).
/// The optimal Chernoff parameter t / (b^2 rho) is exposed as theta_star.
LogProbBound series_bound(int d, double b, double rho, double t);

/// Rectangular series: (m+n) * exp(-t^2 / (2 b^2 rho)).
LogProbBound rect_series_bound(int m, int n, double b, double rho, double t);

/// Entrywise decomposition of an m x n matrix: (m+n) * exp(-t^2 / (2 b^2 m)).
/// Uses rho = m in the exponent as stated; the Gram sums of the entrywise
/// basis actually give max(m, n) (see variance_param_rect), and verification
/// reports surface the gap rather than correcting it.
LogProbBound entrywise_bound(int m, int n, double b, double t);

/// The t where net_bound and entrywise_bound agree in log-space:
/// sqrt([ln(m+n) - ln 2 - (m+n) ln 5] * 2 b^2 m / (1 - 2 b^2 m c)).
/// Absent when 2 b^2 m c = 1 or the radicand is nonpositive.
std::optional<double> refined_crossover(int m, int n, double b, double c);

/// Piecewise-refined bound: pointwise minimum of net_bound and
/// entrywise_bound. When the crossover exists and 2 b^2 m c > 1 this equals
/// the piecewise form (entrywise up to t*, net beyond); the min is defined
/// in every parameter regime.
LogProbBound refined_bound(int m, int n, double b, double c, double t);

/// Gaussian Toeplitz tail: pointwise min of 2d * exp(-t^2/(2d)) and
/// 2 * 5^d * exp(-t^2/2); the stated threshold formula is exposed in
/// params.crossover for reporting.
LogProbBound toeplitz_bound(int d, double t);

/// sqrt((2d / (1 - 2d)) * ln(2d / (2 * 5^d))), the stated switch point of
/// toeplitz_bound. For d = 1 both branches share the same exponent and the
/// value is reporting metadata only.
double toeplitz_threshold(int d);

/// dim * ln(1 + 2/epsilon): log of the epsilon-net cardinality bound for the
/// unit sphere in dimension dim. At epsilon = 1/2 this is dim * ln 5.
double covering_cardinality_log(int dim, double epsilon);

struct VarianceParam {
    double rho;
};

/// rho = |sum_k H_k^2| for a Hermitian series (PSD, so the operator norm is
/// the top eigenvalue).
VarianceParam variance_param_hermitian(std::span<const SymmetricMatrix> terms);

/// rho = max(|sum_k D_k D_k^T|, |sum_k D_k^T D_k|) for a rectangular series.
VarianceParam variance_param_rect(std::span<const DenseMatrix> terms);

}  // namespace svtail
