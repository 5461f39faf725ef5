#include "svtail/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "svtail/errors.hpp"
#include "svtail/spectra.hpp"

namespace svtail {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLn5 = std::log(5.0);

void require_dim(const char* op, const char* name, int value) {
    if (value < 1) {
        throw InvalidParamError(std::string(op) + ": " + name + " must be a positive integer, got " +
                                std::to_string(value));
    }
}

void require_positive(const char* op, const char* name, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidParamError(std::string(op) + ": " + name + " must be a positive real");
    }
}

void require_t(const char* op, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw InvalidParamError(std::string(op) + ": t must be a nonnegative real");
    }
}

}  // namespace

std::string_view to_string(BoundTag tag) {
    switch (tag) {
        case BoundTag::Net31: return "net";
        case BoundTag::Series33: return "series";
        case BoundTag::RectSeries34: return "rect_series";
        case BoundTag::Entrywise35: return "entrywise";
        case BoundTag::Refined36: return "refined";
        case BoundTag::Toeplitz43: return "toeplitz";
    }
    return "?";
}

BoundTag bound_tag_from_string(std::string_view name) {
    if (name == "net") return BoundTag::Net31;
    if (name == "series") return BoundTag::Series33;
    if (name == "rect_series") return BoundTag::RectSeries34;
    if (name == "entrywise") return BoundTag::Entrywise35;
    if (name == "refined") return BoundTag::Refined36;
    if (name == "toeplitz") return BoundTag::Toeplitz43;
    throw UnknownTagError("unknown bound tag '" + std::string(name) +
                          "' (expected net, series, rect_series, entrywise, refined, toeplitz)");
}

double LogProbBound::probability() const { return std::min(std::exp(log_value), 1.0); }

double LogProbBound::log10_value() const { return log_value / std::numbers::ln10; }

LogProbBound net_bound(int m, int n, double c, double t) {
    require_dim("net_bound", "m", m);
    require_dim("net_bound", "n", n);
    require_positive("net_bound", "c", c);
    require_t("net_bound", t);
    LogProbBound bound;
    bound.log_value = kLn2 + static_cast<double>(m + n) * kLn5 - c * t * t;
    bound.tag = BoundTag::Net31;
    bound.params.m = m;
    bound.params.n = n;
    bound.params.c = c;
    bound.params.t = t;
    return bound;
}

LogProbBound series_bound(int d, double b, double rho, double t) {
    require_dim("series_bound", "d", d);
    require_positive("series_bound", "b", b);
    require_positive("series_bound", "rho", rho);
    require_t("series_bound", t);
    LogProbBound bound;
    bound.log_value = std::log(static_cast<double>(d)) - t * t / (2.0 * b * b * rho);
    bound.tag = BoundTag::Series33;
    bound.params.d = d;
    bound.params.b = b;
    bound.params.rho = rho;
    bound.params.t = t;
    bound.params.theta_star = t / (b * b * rho);
    return bound;
}

LogProbBound rect_series_bound(int m, int n, double b, double rho, double t) {
    require_dim("rect_series_bound", "m", m);
    require_dim("rect_series_bound", "n", n);
    require_positive("rect_series_bound", "b", b);
    require_positive("rect_series_bound", "rho", rho);
    require_t("rect_series_bound", t);
    LogProbBound bound;
    bound.log_value = std::log(static_cast<double>(m + n)) - t * t / (2.0 * b * b * rho);
    bound.tag = BoundTag::RectSeries34;
    bound.params.m = m;
    bound.params.n = n;
    bound.params.b = b;
    bound.params.rho = rho;
    bound.params.t = t;
    bound.params.theta_star = t / (b * b * rho);
    return bound;
}

LogProbBound entrywise_bound(int m, int n, double b, double t) {
    require_dim("entrywise_bound", "m", m);
    require_dim("entrywise_bound", "n", n);
    require_positive("entrywise_bound", "b", b);
    require_t("entrywise_bound", t);
    LogProbBound bound;
    bound.log_value =
        std::log(static_cast<double>(m + n)) - t * t / (2.0 * b * b * static_cast<double>(m));
    bound.tag = BoundTag::Entrywise35;
    bound.params.m = m;
    bound.params.n = n;
    bound.params.b = b;
    bound.params.rho = static_cast<double>(m);
    bound.params.t = t;
    return bound;
}

std::optional<double> refined_crossover(int m, int n, double b, double c) {
    require_dim("refined_crossover", "m", m);
    require_dim("refined_crossover", "n", n);
    require_positive("refined_crossover", "b", b);
    require_positive("refined_crossover", "c", c);
    // always negative: m + n < 2 * 5^(m+n)
    const double log_ratio = std::log(static_cast<double>(m + n)) - kLn2 -
                             static_cast<double>(m + n) * kLn5;
    const double denom = 1.0 - 2.0 * b * b * static_cast<double>(m) * c;
    if (denom == 0.0) return std::nullopt;
    const double radicand = log_ratio * 2.0 * b * b * static_cast<double>(m) / denom;
    if (!(radicand > 0.0)) return std::nullopt;
    return std::sqrt(radicand);
}

LogProbBound refined_bound(int m, int n, double b, double c, double t) {
    const LogProbBound net = net_bound(m, n, c, t);
    const LogProbBound entry = entrywise_bound(m, n, b, t);
    LogProbBound bound;
    bound.log_value = std::min(net.log_value, entry.log_value);
    bound.tag = BoundTag::Refined36;
    bound.params.m = m;
    bound.params.n = n;
    bound.params.b = b;
    bound.params.c = c;
    bound.params.t = t;
    if (const auto crossover = refined_crossover(m, n, b, c)) bound.params.crossover = *crossover;
    return bound;
}

double toeplitz_threshold(int d) {
    require_dim("toeplitz_threshold", "d", d);
    const double dd = static_cast<double>(d);
    const double log_ratio = std::log(2.0 * dd) - kLn2 - dd * kLn5;  // ln(2d / (2*5^d)) < 0
    return std::sqrt(2.0 * dd / (1.0 - 2.0 * dd) * log_ratio);
}

LogProbBound toeplitz_bound(int d, double t) {
    require_dim("toeplitz_bound", "d", d);
    require_t("toeplitz_bound", t);
    const double dd = static_cast<double>(d);
    const double series_branch = std::log(2.0 * dd) - t * t / (2.0 * dd);
    const double net_branch = kLn2 + dd * kLn5 - t * t / 2.0;
    LogProbBound bound;
    bound.log_value = std::min(series_branch, net_branch);
    bound.tag = BoundTag::Toeplitz43;
    bound.params.d = d;
    bound.params.b = 1.0;
    bound.params.c = 0.5;
    bound.params.rho = dd;
    bound.params.t = t;
    bound.params.crossover = toeplitz_threshold(d);
    return bound;
}

double covering_cardinality_log(int dim, double epsilon) {
    require_dim("covering_cardinality_log", "dim", dim);
    if (!(epsilon > 0.0) || !(epsilon <= 1.0)) {
        throw InvalidParamError("covering_cardinality_log: epsilon must lie in (0, 1]");
    }
    return static_cast<double>(dim) * std::log(1.0 + 2.0 / epsilon);
}

VarianceParam variance_param_hermitian(std::span<const SymmetricMatrix> terms) {
    if (terms.empty()) throw EmptyListError("variance_param_hermitian: empty series");
    const int dim = terms.front().dim();
    SymmetricMatrix sum(dim);
    for (const auto& h : terms) {
        if (h.dim() != dim) {
            throw DimensionMismatchError("variance_param_hermitian: mixed dimensions");
        }
        sum = sum + symmetric_square(h);
    }
    return {lambda_max(sum)};
}

VarianceParam variance_param_rect(std::span<const DenseMatrix> terms) {
    if (terms.empty()) throw EmptyListError("variance_param_rect: empty series");
    const int m = terms.front().rows();
    const int n = terms.front().cols();
    SymmetricMatrix left(m);
    SymmetricMatrix right(n);
    for (const auto& d : terms) {
        if (d.rows() != m || d.cols() != n) {
            throw DimensionMismatchError("variance_param_rect: mixed shapes");
        }
        left = left + gram_left(d);
        right = right + gram_right(d);
    }
    return {std::max(lambda_max(left), lambda_max(right))};
}

}  // namespace svtail
