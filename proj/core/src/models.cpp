#include "svtail/models.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "svtail/errors.hpp"

namespace svtail {

SubGaussianModel::SubGaussianModel(ModelKind kind, double tail_c, double mgf_b,
                                   double half_width, std::string name)
    : kind_(kind), tail_c_(tail_c), mgf_b_(mgf_b), half_width_(half_width),
      name_(std::move(name)) {}

SubGaussianModel SubGaussianModel::standard_gaussian() {
    return {ModelKind::StandardGaussian, 0.5, 1.0, 0.0, "gaussian"};
}

SubGaussianModel SubGaussianModel::rademacher() {
    return {ModelKind::Rademacher, 0.5, 1.0, 0.0, "rademacher"};
}

SubGaussianModel SubGaussianModel::uniform_symmetric(double half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw InvalidParamError("uniform_symmetric: half_width must be a positive real");
    }
    char key[48];
    std::snprintf(key, sizeof(key), "uniform:%g", half_width);
    return {ModelKind::UniformSymmetric, 1.0 / (2.0 * half_width * half_width), half_width,
            half_width, key};
}

SubGaussianModel SubGaussianModel::custom(double tail_c, double mgf_b, std::string name,
                                          std::function<double(Rng&)> sampler) {
    if (!(tail_c > 0.0) || !(mgf_b > 0.0)) {
        throw InvalidParamError("custom model: tail_c and mgf_b must be positive");
    }
    if (!sampler) throw InvalidParamError("custom model: sampler is required");
    SubGaussianModel m(ModelKind::Custom, tail_c, mgf_b, 0.0, std::move(name));
    m.sampler_ = std::move(sampler);
    return m;
}

double SubGaussianModel::sample(Rng& rng) const {
    switch (kind_) {
        case ModelKind::StandardGaussian: return rng.gaussian();
        case ModelKind::Rademacher: return rng.rademacher_sign();
        case ModelKind::UniformSymmetric: return rng.uniform_symmetric(half_width_);
        case ModelKind::Custom: return sampler_(rng);
    }
    return 0.0;  // unreachable
}

std::vector<SubGaussianModel> standard_models() {
    return {SubGaussianModel::standard_gaussian(), SubGaussianModel::rademacher(),
            SubGaussianModel::uniform_symmetric(1.0)};
}

SubGaussianModel model_from_key(std::string_view key) {
    if (key == "gaussian") return SubGaussianModel::standard_gaussian();
    if (key == "rademacher") return SubGaussianModel::rademacher();
    if (key.starts_with("uniform:")) {
        const std::string_view arg = key.substr(8);
        double a = 0.0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), a);
        if (ec != std::errc() || ptr != arg.data() + arg.size()) {
            throw InvalidParamError("model key 'uniform:<a>' needs a numeric half-width, got '" +
                                    std::string(key) + "'");
        }
        return SubGaussianModel::uniform_symmetric(a);
    }
    throw InvalidParamError("unknown model key '" + std::string(key) +
                            "' (expected gaussian, rademacher, or uniform:<a>)");
}

std::vector<MgfCheckPoint> empirical_mgf_check(const SubGaussianModel& model,
                                               std::span<const double> theta_grid,
                                               long n_samples, Rng& rng) {
    if (n_samples < 10000) {
        throw InvalidParamError("empirical_mgf_check: n_samples must be >= 10^4");
    }
    std::vector<MgfCheckPoint> report;
    report.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (long i = 0; i < n_samples; ++i) {
            const double x = model.sample(rng);
            const double v = std::exp(theta * x);
            if (!std::isfinite(v)) {
                throw OverflowAtThetaError(theta, "empirical_mgf_check: exp(theta*x) overflowed at theta=" +
                                                      std::to_string(theta));
            }
            sum += v;
            sum_sq += v * v;
        }
        const double n = static_cast<double>(n_samples);
        const double mean = sum / n;
        const double variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        const double se = std::sqrt(variance / n);
        const double bound = std::exp(0.5 * model.mgf_b() * model.mgf_b() * theta * theta);
        report.push_back({theta, mean, se, bound, mean > bound + 3.0 * se});
    }
    return report;
}

}  // namespace svtail
