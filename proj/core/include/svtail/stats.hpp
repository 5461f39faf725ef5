#pragma once

namespace svtail {

double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// Quantile of the Beta(a, b) distribution by bisection on I_x.
double beta_quantile(double p, double a, double b);

struct Interval {
    double low;
    double high;
};

/// Exact Clopper-Pearson two-sided interval for a binomial proportion at the
/// given confidence level.
Interval clopper_pearson(long successes, long trials, double confidence);

/// Two-sided standard normal tail P(|x| > t) = erfc(t / sqrt(2)).
double standard_normal_tail(double t);

}  // namespace svtail
