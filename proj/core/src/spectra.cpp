#include "svtail/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "svtail/errors.hpp"

namespace svtail {

namespace {

void require_finite(const DenseMatrix& m, const char* op) {
    if (!m.all_finite()) throw NonFiniteError(std::string(op) + ": matrix has NaN/Inf entries");
}

void require_tol(double tol, const char* op) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidParamError(std::string(op) + ": tol must be a positive real");
    }
}

// One cyclic Jacobi sweep over the strict upper triangle of a (copy of a)
// symmetric matrix held in a, accumulating rotations into v.
void jacobi_sweep(DenseMatrix& a, DenseMatrix& v, double threshold) {
    const int n = a.rows();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a(p, q);
            if (std::abs(apq) <= threshold) continue;
            const double app = a(p, p);
            const double aqq = a(q, q);
            const double theta = (aqq - app) / (2.0 * apq);
            double t;
            if (std::isinf(theta)) {
                t = 0.0;
            } else {
                t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
            }
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            a(p, p) = app - t * apq;
            a(q, q) = aqq + t * apq;
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double akp = a(k, p);
                const double akq = a(k, q);
                a(k, p) = akp - s * (akq + tau * akp);
                a(p, k) = a(k, p);
                a(k, q) = akq + s * (akp - tau * akq);
                a(q, k) = a(k, q);
            }
            for (int k = 0; k < n; ++k) {
                const double vkp = v(k, p);
                const double vkq = v(k, q);
                v(k, p) = vkp - s * (vkq + tau * vkp);
                v(k, q) = vkq + s * (vkp - tau * vkq);
            }
        }
    }
}

double off_diagonal_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(sum);
}

// Rayleigh-quotient power iteration on a symmetric operator given by
// matvec y = A x. Deterministic start vectors: all-ones, then a ramp, then
// e_1; the ladder only advances if an iterate lands exactly in the kernel.
template <typename MatVec, typename Rayleigh>
double rayleigh_power_iteration(int n, MatVec&& apply, Rayleigh&& rayleigh, double tol,
                                int max_iterations, const char* op) {
    std::vector<double> v(n), w(n);
    int restart = 0;
    auto load_start = [&](int which) {
        if (which == 0) {
            std::fill(v.begin(), v.end(), 1.0);
        } else if (which == 1) {
            std::iota(v.begin(), v.end(), 1.0);
        } else {
            std::fill(v.begin(), v.end(), 0.0);
            v[0] = 1.0;
        }
        double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (double& x : v) x /= norm;
    };
    load_start(restart);

    double prev = rayleigh(v);
    for (int iter = 1; iter <= max_iterations; ++iter) {
        apply(v, w);
        const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        if (norm == 0.0) {
            // exact kernel vector; try the next deterministic start
            if (++restart > 2) return prev;
            load_start(restart);
            prev = rayleigh(v);
            continue;
        }
        for (int k = 0; k < n; ++k) v[k] = w[k] / norm;
        const double current = rayleigh(v);
        if (std::abs(current - prev) <= tol * std::max(1.0, std::abs(current))) {
            return current;
        }
        prev = current;
    }
    throw NoConvergenceError(std::string(op) + ": power iteration hit the cap of " +
                             std::to_string(max_iterations) + " iterations");
}

double jacobi_lambda_max(const SymmetricMatrix& h) {
    EigenSystem es = symmetric_eigensystem(h);
    return es.values.back();
}

double jacobi_lambda_min(const SymmetricMatrix& h) {
    EigenSystem es = symmetric_eigensystem(h);
    return es.values.front();
}

}  // namespace

EigenSystem symmetric_eigensystem(const SymmetricMatrix& h) {
    if (!h.all_finite()) throw NonFiniteError("symmetric_eigensystem: NaN/Inf entries");
    const int n = h.dim();
    DenseMatrix a = h.dense();
    DenseMatrix v = DenseMatrix::identity(n);

    const double scale = a.frobenius_norm();
    if (scale == 0.0) {
        EigenSystem es;
        es.values.assign(n, 0.0);
        es.vectors = v;
        return es;
    }

    const double target = 1e-15 * scale;
    const int max_sweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > max_sweeps) {
            throw NoConvergenceError("symmetric_eigensystem: Jacobi sweeps exceeded cap");
        }
        jacobi_sweep(a, v, 0.0);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = DenseMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        es.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
    }
    return es;
}

double power_largest_singular_value(const DenseMatrix& b, double tol, int max_iterations) {
    require_finite(b, "largest_singular_value");
    require_tol(tol, "largest_singular_value");
    if (b.frobenius_norm() == 0.0) return 0.0;

    const SymmetricMatrix gram = (b.rows() <= b.cols()) ? gram_left(b) : gram_right(b);
    const int n = gram.dim();
    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < n; ++i) {
            double sum = 0.0;
            for (int j = 0; j < n; ++j) sum += gram(i, j) * x[j];
            y[i] = sum;
        }
    };
    auto rayleigh = [&](const std::vector<double>& x) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += gram(i, j) * x[j];
            sum += x[i] * row;
        }
        return sum;
    };
    const double lam = rayleigh_power_iteration(n, apply, rayleigh, tol, max_iterations,
                                                "largest_singular_value");
    return std::sqrt(std::max(lam, 0.0));
}

double power_lambda_max(const SymmetricMatrix& h, double tol, int max_iterations) {
    require_finite(h.dense(), "lambda_max");
    require_tol(tol, "lambda_max");
    const int n = h.dim();
    const double shift = h.dense().one_norm();
    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < n; ++i) {
            double sum = shift * x[i];
            for (int j = 0; j < n; ++j) sum += h(i, j) * x[j];
            y[i] = sum;
        }
    };
    auto rayleigh = [&](const std::vector<double>& x) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += h(i, j) * x[j];
            sum += x[i] * row;
        }
        return sum;
    };
    return rayleigh_power_iteration(n, apply, rayleigh, tol, max_iterations, "lambda_max");
}

double largest_singular_value(const DenseMatrix& b, double tol) {
    require_finite(b, "largest_singular_value");
    require_tol(tol, "largest_singular_value");
    if (std::min(b.rows(), b.cols()) > kFullEigenMaxDim) {
        return power_largest_singular_value(b, tol, kPowerIterationCap);
    }
    if (b.frobenius_norm() == 0.0) return 0.0;
    const SymmetricMatrix gram = (b.rows() <= b.cols()) ? gram_left(b) : gram_right(b);
    return std::sqrt(std::max(jacobi_lambda_max(gram), 0.0));
}

double lambda_max(const SymmetricMatrix& h, double tol) {
    require_tol(tol, "lambda_max");
    if (h.dim() > kFullEigenMaxDim) return power_lambda_max(h, tol, kPowerIterationCap);
    if (!h.all_finite()) throw NonFiniteError("lambda_max: NaN/Inf entries");
    return jacobi_lambda_max(h);
}

double lambda_min(const SymmetricMatrix& h, double tol) {
    require_tol(tol, "lambda_min");
    if (h.dim() > kFullEigenMaxDim) {
        const double value = power_lambda_max(-1.0 * h, tol, kPowerIterationCap);
        return -value;
    }
    if (!h.all_finite()) throw NonFiniteError("lambda_min: NaN/Inf entries");
    return jacobi_lambda_min(h);
}

SymmetricMatrix matrix_exp(const SymmetricMatrix& h) {
    EigenSystem es = symmetric_eigensystem(h);
    const int n = h.dim();
    std::vector<double> expvals(n);
    for (int i = 0; i < n; ++i) {
        expvals[i] = std::exp(es.values[i]);
        if (!std::isfinite(expvals[i])) {
            throw NonFiniteError("matrix_exp: exp(" + std::to_string(es.values[i]) +
                                 ") overflowed");
        }
    }
    SymmetricMatrix result(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k) sum += es.vectors(i, k) * expvals[k] * es.vectors(j, k);
            result.set(i, j, sum);
        }
    }
    return result;
}

bool psd_order_leq(const SymmetricMatrix& a, const SymmetricMatrix& b, double tol) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("psd_order_leq: dimension mismatch");
    if (tol < 0.0 || !std::isfinite(tol)) {
        throw InvalidParamError("psd_order_leq: tol must be a nonnegative real");
    }
    return lambda_min(b - a) >= -tol;
}

}  // namespace svtail
