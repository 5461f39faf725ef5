#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svtail/rng.hpp"

namespace svtail {

enum class ModelKind { StandardGaussian, Rademacher, UniformSymmetric, Custom };

/// A samplable centered sub-Gaussian distribution together with its two
/// constants: tail_c with P(|x| > t) <= 2 exp(-c t^2), and mgf_b with
/// E exp(theta x) <= exp(b^2 theta^2 / 2). The constants are stored, not
/// derived; for custom models their validity is the caller's claim
/// (checkable with empirical_mgf_check).
class SubGaussianModel {
public:
    SubGaussianModel() : SubGaussianModel(standard_gaussian()) {}

    static SubGaussianModel standard_gaussian();        // c = 1/2, b = 1
    static SubGaussianModel rademacher();               // c = 1/2, b = 1
    static SubGaussianModel uniform_symmetric(double half_width);  // c = 1/(2a^2), b = a
    static SubGaussianModel custom(double tail_c, double mgf_b, std::string name,
                                   std::function<double(Rng&)> sampler);

    double sample(Rng& rng) const;

    ModelKind kind() const { return kind_; }
    double tail_c() const { return tail_c_; }
    double mgf_b() const { return mgf_b_; }
    double half_width() const { return half_width_; }
    const std::string& name() const { return name_; }

private:
    SubGaussianModel(ModelKind kind, double tail_c, double mgf_b, double half_width,
                     std::string name);

    ModelKind kind_;
    double tail_c_;
    double mgf_b_;
    double half_width_ = 0.0;
    std::string name_;
    std::function<double(Rng&)> sampler_;
};

/// The three built-ins: gaussian, rademacher, uniform_symmetric(1).
std::vector<SubGaussianModel> standard_models();

/// Config-key lookup: "gaussian", "rademacher", "uniform:<a>".
SubGaussianModel model_from_key(std::string_view key);

struct MgfCheckPoint {
    double theta;
    double estimate;    // Monte Carlo mean of exp(theta x)
    double std_error;
    double bound;       // exp(b^2 theta^2 / 2)
    bool flagged;       // estimate exceeds bound by more than 3 standard errors
};

/// Monte Carlo check of the mgf inequality on a theta grid.
/// Requires n_samples >= 10^4; throws OverflowAtThetaError if exp(theta x)
/// overflows for a sampled x.
std::vector<MgfCheckPoint> empirical_mgf_check(const SubGaussianModel& model,
                                               std::span<const double> theta_grid,
                                               long n_samples, Rng& rng);

}  // namespace svtail
