#pragma once

#include <vector>

#include "svtail/matrix.hpp"

namespace svtail {

/// Dimension up to which the dense Jacobi eigensolver is used; larger
/// problems fall back to the power-iteration kernels.
inline constexpr int kFullEigenMaxDim = 512;

/// Iteration cap shared by every power-iteration kernel.
inline constexpr int kPowerIterationCap = 10000;

inline constexpr double kDefaultSpectralTol = 1e-10;

/// Eigenvalues in ascending order; vectors holds the matching eigenvectors
/// as columns.
struct EigenSystem {
    std::vector<double> values;
    DenseMatrix vectors;
};

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Deterministic; accurate to machine precision.
EigenSystem symmetric_eigensystem(const SymmetricMatrix& h);

/// Largest singular value s_max(B) = sup_{|x|=1} |Bx|.
/// Returns exactly 0 for the zero matrix. Relative accuracy tol.
double largest_singular_value(const DenseMatrix& b, double tol = kDefaultSpectralTol);

/// Largest / smallest eigenvalue of a real symmetric matrix.
double lambda_max(const SymmetricMatrix& h, double tol = kDefaultSpectralTol);
double lambda_min(const SymmetricMatrix& h, double tol = kDefaultSpectralTol);

/// e^H by symmetric eigendecomposition: exponentiate the eigenvalues and
/// reassemble. Throws NonFiniteError if any exp(lambda) overflows.
SymmetricMatrix matrix_exp(const SymmetricMatrix& h);

/// Loewner order test: true iff lambda_min(B - A) >= -tol.
bool psd_order_leq(const SymmetricMatrix& a, const SymmetricMatrix& b, double tol);

// Power-iteration kernels. Deterministic all-ones start vector,
// Rayleigh-quotient convergence test, NoConvergenceError at the cap.
// largest_singular_value / lambda_max dispatch to these above
// kFullEigenMaxDim; they are exposed for direct use and testing.

/// Power iteration on the smaller of B^T B and B B^T.
double power_largest_singular_value(const DenseMatrix& b, double tol = kDefaultSpectralTol,
                                    int max_iterations = kPowerIterationCap);

/// Power iteration on H + |H|_1 * I so the algebraically largest eigenvalue
/// dominates.
double power_lambda_max(const SymmetricMatrix& h, double tol = kDefaultSpectralTol,
                        int max_iterations = kPowerIterationCap);

}  // namespace svtail
