#pragma once

#include <vector>

#include "svtail/matrix.hpp"
#include "svtail/models.hpp"
#include "svtail/rng.hpp"

namespace svtail {

/// Coefficients of a d x d Toeplitz matrix: gamma_{-(d-1)}, ..., gamma_{d-1}
/// stored ascending by diagonal offset; entry (i, j) of the realized matrix
/// is gamma_{j-i}.
struct ToeplitzSpec {
    int d = 0;
    std::vector<double> coefficients;  // size 2d - 1, index k + d - 1 holds gamma_k

    double gamma(int k) const { return coefficients[static_cast<size_t>(k + d - 1)]; }
    double& gamma(int k) { return coefficients[static_cast<size_t>(k + d - 1)]; }
};

DenseMatrix realize(const ToeplitzSpec& spec);

/// Fixed matrices weighted by iid draws from one sub-Gaussian model.
struct MatrixSeries {
    std::vector<DenseMatrix> terms;
    SubGaussianModel model;
};

/// m x n matrix of independent draws, filled row-major from the generator.
DenseMatrix sample_iid_matrix(int m, int n, const SubGaussianModel& model, Rng& rng);

/// d x d matrix with ones on the first superdiagonal; C^d = 0.
DenseMatrix shift_matrix(int d);

/// The 2d-1 fixed terms of the Toeplitz series in canonical order:
/// I, C, ..., C^(d-1), C^T, ..., (C^(d-1))^T — i.e. the gamma_0 term first,
/// positive offsets ascending, then negative offsets ascending. Coefficients
/// are standard normal.
MatrixSeries toeplitz_series_terms(int d);

/// Draws the 2d-1 coefficients in the canonical order (gamma_0,
/// gamma_1..gamma_{d-1}, gamma_{-1}..gamma_{-(d-1)}).
ToeplitzSpec sample_toeplitz_spec(int d, Rng& rng);

/// sample_toeplitz_spec + realize.
DenseMatrix sample_toeplitz(int d, Rng& rng);

/// The mn basis matrices E_ij in row-major order, weighted by the model.
MatrixSeries entrywise_basis_series(int m, int n, const SubGaussianModel& model);

/// One draw of sum_k x_k T_k, coefficients drawn in term order.
DenseMatrix sample_series(const MatrixSeries& series, Rng& rng);

}  // namespace svtail
