#include "svtail/stats.hpp"

#include <cmath>
#include <string>

#include "svtail/errors.hpp"

namespace svtail {

namespace {

// Continued fraction for I_x(a,b) by the modified Lentz method:
//   I_x(a,b) = x^a (1-x)^b / (a B(a,b)) * 1 / (1 + d_1/(1 + d_2/(1 + ...)))
// with d_{2m}   =  m (b-m) x / ((a+2m-1)(a+2m))
//      d_{2m+1} = -(a+m)(a+b+m) x / ((a+2m)(a+2m+1)).
// Converges fast for x < (a+1)/(a+b+2); the caller flips by symmetry.
double beta_continued_fraction(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-16;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double f = d;
    for (int m = 1; m <= 500; ++m) {
        const double dm = static_cast<double>(m);
        // even step
        double numerator = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + numerator * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + numerator / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        f *= d * c;
        // odd step
        numerator = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + numerator * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + numerator / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::abs(delta - 1.0) < eps) break;
    }
    return f;
}

}  // namespace

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw InvalidParamError("regularized_incomplete_beta: a and b must be positive");
    }
    if (std::isnan(x)) throw InvalidParamError("regularized_incomplete_beta: x is NaN");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - std::log(a) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x);
    }
    const double front_flipped =
        std::exp(b * std::log1p(-x) + a * std::log(x) - std::log(b) - log_beta(a, b));
    return 1.0 - front_flipped * beta_continued_fraction(b, a, 1.0 - x);
}

double beta_quantile(double p, double a, double b) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw InvalidParamError("beta_quantile: p must lie in [0, 1]");
    }
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (regularized_incomplete_beta(a, b, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

Interval clopper_pearson(long successes, long trials, double confidence) {
    if (trials < 1) throw InvalidParamError("clopper_pearson: trials must be >= 1");
    if (successes < 0 || successes > trials) {
        throw InvalidParamError("clopper_pearson: successes must lie in [0, trials]");
    }
    if (!(confidence > 0.0) || !(confidence < 1.0)) {
        throw InvalidParamError("clopper_pearson: confidence must lie in (0, 1)");
    }
    const double alpha = 1.0 - confidence;
    const double k = static_cast<double>(successes);
    const double n = static_cast<double>(trials);
    Interval ci;
    ci.low = (successes == 0) ? 0.0 : beta_quantile(alpha / 2.0, k, n - k + 1.0);
    ci.high = (successes == trials) ? 1.0 : beta_quantile(1.0 - alpha / 2.0, k + 1.0, n - k);
    return ci;
}

double standard_normal_tail(double t) { return std::erfc(t / std::sqrt(2.0)); }

}  // namespace svtail
