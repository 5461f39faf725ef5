#include "svtail/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "svtail/errors.hpp"

namespace svtail {

namespace {

void require_shape(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw InvalidParamError("matrix shape must be positive, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
    }
}

}  // namespace

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require_shape(rows, cols);
    data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_shape(rows, cols);
    if (data_.size() != static_cast<size_t>(rows) * cols) {
        throw InvalidParamError("entry count " + std::to_string(data_.size()) +
                                " does not match shape " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double DenseMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
}

double DenseMatrix::one_norm() const {
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
        double col = 0.0;
        for (int i = 0; i < rows_; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatchError("matrix addition shape mismatch");
    }
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double scalar) {
    for (double& v : data_) v *= scalar;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a += b;
    return a;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix subtraction shape mismatch");
    }
    DenseMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

DenseMatrix operator*(double scalar, DenseMatrix m) {
    m *= scalar;
    return m;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

SymmetricMatrix::SymmetricMatrix(int dim) : dense_(dim, dim) {}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
    SymmetricMatrix m(static_cast<int>(values.size()));
    for (int i = 0; i < m.dim(); ++i) m.set(i, i, values[i]);
    return m;
}

SymmetricMatrix SymmetricMatrix::from_dense(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("symmetric matrix must be square");
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) {
                throw InvalidParamError("matrix is not exactly symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    SymmetricMatrix s;
    s.dense_ = m;
    return s;
}

void SymmetricMatrix::set(int i, int j, double value) {
    dense_(i, j) = value;
    dense_(j, i) = value;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("symmetric addition shape mismatch");
    SymmetricMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) + b(i, j));
    return c;
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("symmetric subtraction shape mismatch");
    SymmetricMatrix c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) - b(i, j));
    return c;
}

SymmetricMatrix operator*(double scalar, const SymmetricMatrix& m) {
    SymmetricMatrix c(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j) c.set(i, j, scalar * m(i, j));
    return c;
}

SymmetricMatrix symmetric_square(const SymmetricMatrix& h) {
    const int n = h.dim();
    SymmetricMatrix s(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k) sum += h(i, k) * h(k, j);
            s.set(i, j, sum);
        }
    }
    return s;
}

SymmetricMatrix gram_left(const DenseMatrix& b) {
    const int m = b.rows();
    SymmetricMatrix g(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            double sum = 0.0;
            for (int k = 0; k < b.cols(); ++k) sum += b(i, k) * b(j, k);
            g.set(i, j, sum);
        }
    }
    return g;
}

SymmetricMatrix gram_right(const DenseMatrix& b) {
    const int n = b.cols();
    SymmetricMatrix g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < b.rows(); ++k) sum += b(k, i) * b(k, j);
            g.set(i, j, sum);
        }
    }
    return g;
}

SymmetricMatrix hermitian_dilation(const DenseMatrix& b) {
    if (!b.all_finite()) throw NonFiniteError("hermitian_dilation: matrix has NaN/Inf entries");
    const int m = b.rows();
    const int n = b.cols();
    SymmetricMatrix h(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) h.set(i, m + j, b(i, j));
    return h;
}

}  // namespace svtail
