#include "svtail/ensembles.hpp"

#include <string>

#include "svtail/errors.hpp"

namespace svtail {

namespace {

void require_dim(const char* op, const char* name, int value) {
    if (value < 1) {
        throw InvalidParamError(std::string(op) + ": " + name + " must be a positive integer");
    }
}

}  // namespace

DenseMatrix realize(const ToeplitzSpec& spec) {
    require_dim("realize", "d", spec.d);
    if (spec.coefficients.size() != static_cast<size_t>(2 * spec.d - 1)) {
        throw InvalidParamError("realize: Toeplitz spec needs 2d-1 coefficients");
    }
    DenseMatrix t(spec.d, spec.d);
    for (int i = 0; i < spec.d; ++i)
        for (int j = 0; j < spec.d; ++j) t(i, j) = spec.gamma(j - i);
    return t;
}

DenseMatrix sample_iid_matrix(int m, int n, const SubGaussianModel& model, Rng& rng) {
    require_dim("sample_iid_matrix", "m", m);
    require_dim("sample_iid_matrix", "n", n);
    DenseMatrix b(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = model.sample(rng);
    return b;
}

DenseMatrix shift_matrix(int d) {
    require_dim("shift_matrix", "d", d);
    DenseMatrix c(d, d);
    for (int i = 0; i + 1 < d; ++i) c(i, i + 1) = 1.0;
    return c;
}

MatrixSeries toeplitz_series_terms(int d) {
    require_dim("toeplitz_series_terms", "d", d);
    MatrixSeries series;
    series.model = SubGaussianModel::standard_gaussian();
    series.terms.reserve(static_cast<size_t>(2 * d - 1));
    series.terms.push_back(DenseMatrix::identity(d));
    const DenseMatrix c = shift_matrix(d);
    DenseMatrix power = DenseMatrix::identity(d);
    for (int j = 1; j < d; ++j) {
        power = power * c;  // entries stay exactly 0/1
        series.terms.push_back(power);
    }
    for (int j = 1; j < d; ++j) {
        series.terms.push_back(series.terms[static_cast<size_t>(j)].transposed());
    }
    return series;
}

ToeplitzSpec sample_toeplitz_spec(int d, Rng& rng) {
    require_dim("sample_toeplitz_spec", "d", d);
    ToeplitzSpec spec;
    spec.d = d;
    spec.coefficients.assign(static_cast<size_t>(2 * d - 1), 0.0);
    spec.gamma(0) = rng.gaussian();
    for (int j = 1; j < d; ++j) spec.gamma(j) = rng.gaussian();
    for (int j = 1; j < d; ++j) spec.gamma(-j) = rng.gaussian();
    return spec;
}

DenseMatrix sample_toeplitz(int d, Rng& rng) { return realize(sample_toeplitz_spec(d, rng)); }

MatrixSeries entrywise_basis_series(int m, int n, const SubGaussianModel& model) {
    require_dim("entrywise_basis_series", "m", m);
    require_dim("entrywise_basis_series", "n", n);
    MatrixSeries series;
    series.model = model;
    series.terms.reserve(static_cast<size_t>(m) * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            DenseMatrix e(m, n);
            e(i, j) = 1.0;
            series.terms.push_back(std::move(e));
        }
    }
    return series;
}

DenseMatrix sample_series(const MatrixSeries& series, Rng& rng) {
    if (series.terms.empty()) throw EmptyListError("sample_series: empty series");
    DenseMatrix sum(series.terms.front().rows(), series.terms.front().cols());
    for (const auto& term : series.terms) {
        if (term.rows() != sum.rows() || term.cols() != sum.cols()) {
            throw DimensionMismatchError("sample_series: mixed term shapes");
        }
        const double x = series.model.sample(rng);
        for (int i = 0; i < sum.rows(); ++i)
            for (int j = 0; j < sum.cols(); ++j) sum(i, j) += x * term(i, j);
    }
    return sum;
}

}  // namespace svtail
