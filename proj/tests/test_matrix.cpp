#include <doctest.h>

#include <cmath>
#include <limits>

#include "svtail/errors.hpp"
#include "svtail/matrix.hpp"

#include "support/test_support.hpp"

using namespace svtail;

TEST_CASE("dense matrix basics") {
    DenseMatrix a(2, 3);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    for (double v : a.entries()) CHECK(v == 0.0);

    DenseMatrix b(2, 2, {1.0, 2.0, 3.0, 4.0});
    CHECK(b(0, 1) == 2.0);
    CHECK(b(1, 0) == 3.0);
    CHECK(b.transposed()(0, 1) == 3.0);

    CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0}), InvalidParamError);
    CHECK_THROWS_AS(DenseMatrix(0, 2), InvalidParamError);
}

TEST_CASE("dense matrix product and identity") {
    const DenseMatrix a(2, 2, {1.0, 1.0, 0.0, 1.0});
    const DenseMatrix i = DenseMatrix::identity(2);
    CHECK(a * i == a);
    CHECK(i * a == a);
    const DenseMatrix sq = a * a;
    CHECK(sq(0, 1) == 2.0);
    CHECK_THROWS_AS(a * DenseMatrix(3, 3), DimensionMismatchError);
}

TEST_CASE("finiteness detection") {
    DenseMatrix a(2, 2);
    CHECK(a.all_finite());
    a(1, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(a.all_finite());
    a(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_FALSE(a.all_finite());
}

TEST_CASE("symmetric matrix construction enforces exact symmetry") {
    DenseMatrix d(2, 2, {1.0, 2.0, 2.0, 5.0});
    const SymmetricMatrix s = SymmetricMatrix::from_dense(d);
    CHECK(s(0, 1) == 2.0);

    d(1, 0) = 2.0 + 1e-15;
    CHECK_THROWS_AS(SymmetricMatrix::from_dense(d), InvalidParamError);
    CHECK_THROWS_AS(SymmetricMatrix::from_dense(DenseMatrix(2, 3)), DimensionMismatchError);

    SymmetricMatrix t(3);
    t.set(0, 2, 7.0);
    CHECK(t(2, 0) == 7.0);
}

TEST_CASE("hermitian dilation layout") {
    SUBCASE("1x1") {
        const DenseMatrix b(1, 1, {3.5});
        const SymmetricMatrix h = hermitian_dilation(b);
        CHECK(h.dim() == 2);
        CHECK(h(0, 0) == 0.0);
        CHECK(h(1, 1) == 0.0);
        CHECK(h(0, 1) == 3.5);
        CHECK(h(1, 0) == 3.5);
    }
    SUBCASE("2x3 blocks") {
        const DenseMatrix b = svtail::testing::random_dense(2, 3, 11);
        const SymmetricMatrix h = hermitian_dilation(b);
        CHECK(h.dim() == 5);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 3; ++j) {
                CHECK(h(i, 2 + j) == b(i, j));
                CHECK(h(2 + j, i) == b(i, j));
            }
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(h(i, j) == 0.0);
        for (int i = 2; i < 5; ++i)
            for (int j = 2; j < 5; ++j) CHECK(h(i, j) == 0.0);
    }
    SUBCASE("rejects non-finite input") {
        DenseMatrix b(1, 2);
        b(0, 1) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(hermitian_dilation(b), NonFiniteError);
    }
}

TEST_CASE("gram products are exactly symmetric and match the transpose route") {
    const DenseMatrix b = svtail::testing::random_dense(4, 7, 23);
    const SymmetricMatrix left = gram_left(b);
    const SymmetricMatrix right = gram_right(b);
    CHECK(left.dim() == 4);
    CHECK(right.dim() == 7);
    const DenseMatrix bbt = b * b.transposed();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(left(i, j) == doctest::Approx(bbt(i, j)).epsilon(1e-14));
}
