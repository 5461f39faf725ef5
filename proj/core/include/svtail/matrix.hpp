#pragma once

#include <span>
#include <vector>

namespace svtail {

/// Dense real matrix, row-major storage, value semantics.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);  // zero-filled
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const double> entries() const { return data_; }
    std::span<double> entries() { return data_; }

    bool all_finite() const;
    DenseMatrix transposed() const;
    double frobenius_norm() const;
    double one_norm() const;  // max absolute column sum

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator*=(double scalar);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double scalar, DenseMatrix m);
bool operator==(const DenseMatrix& a, const DenseMatrix& b);  // exact, entrywise

/// Real symmetric matrix. Symmetry holds exactly by construction: every
/// mutation writes both triangles, and from_dense rejects any input whose
/// (i,j) and (j,i) entries differ at all.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(int dim);  // zero-filled

    static SymmetricMatrix identity(int n);
    static SymmetricMatrix diagonal(std::span<const double> values);
    static SymmetricMatrix from_dense(const DenseMatrix& m);  // throws on asymmetry

    int dim() const { return dense_.rows(); }
    double operator()(int i, int j) const { return dense_(i, j); }
    void set(int i, int j, double value);

    const DenseMatrix& dense() const { return dense_; }
    bool all_finite() const { return dense_.all_finite(); }

private:
    DenseMatrix dense_;
};

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double scalar, const SymmetricMatrix& m);

/// Symmetric square of a symmetric matrix, mirrored exactly.
SymmetricMatrix symmetric_square(const SymmetricMatrix& h);

/// Gram products B^T B and B B^T, mirrored exactly.
SymmetricMatrix gram_left(const DenseMatrix& b);   // B B^T   (rows x rows)
SymmetricMatrix gram_right(const DenseMatrix& b);  // B^T B   (cols x cols)

/// The (m+n) x (m+n) block matrix [[0, B], [B^T, 0]].
SymmetricMatrix hermitian_dilation(const DenseMatrix& b);

}  // namespace svtail
