#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "projhom/matrix.hpp"
#include "test_util.hpp"

using namespace projhom;

TEST_CASE("scalar arithmetic over Q and F_p") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(1, 6);
    CHECK((a + b) == Scalar::rational(1, 2));
    CHECK((a - a).is_zero());
    CHECK(a.inverse() == Scalar::rational(3));
    CHECK(Scalar::rational(-2, -4) == Scalar::rational(1, 2)); // canonical form

    Scalar x = Scalar::residue(3, 5);
    Scalar y = Scalar::residue(4, 5);
    CHECK((x + y) == Scalar::residue(2, 5));
    CHECK((x * y) == Scalar::residue(2, 5));
    CHECK(x.inverse() == Scalar::residue(2, 5));
    CHECK((-x) == Scalar::residue(2, 5));

    CHECK_THROWS_AS((void)(a + x), FieldMismatch);
    CHECK_THROWS_AS((void)Scalar::residue(1, 6), Error);
}

TEST_CASE("rref on identity and zero") {
    auto id = Matrix::identity(2, 0);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.transform == id);
    CHECK(r.rank == 2);

    Matrix z(2, 3, 0);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.transform == Matrix::identity(2, 0));
    CHECK(rz.rank == 0);
}

TEST_CASE("rref of a rank-1 matrix, hand-reduced") {
    // [[1,2],[2,4]]: subtracting twice row 1 from row 2 leaves [[1,2],[0,0]]
    auto m = Matrix::from_rows({{1, 2}, {2, 4}});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(r.transform * m == r.reduced);
    CHECK_NOTHROW((void)inverse(r.transform));
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix::identity(3, 0)).cols() == 0);

    // kernel of [1 2] is spanned by (-2, 1); normalized form has leading 1
    auto k = kernel_basis(Matrix::from_rows({{1, 2}}));
    REQUIRE(k.cols() == 1);
    CHECK((Matrix::from_rows({{1, 2}}) * k).is_zero());
    CHECK(k.at(0, 0) == Scalar::rational(1));
    CHECK(k.at(1, 0) == Scalar::rational(-1, 2));

    Matrix z(2, 2, 0);
    auto kz = kernel_basis(z);
    CHECK(kz == Matrix::identity(2, 0));
}

TEST_CASE("image_basis examples") {
    CHECK(image_basis(Matrix::identity(2, 0)) == Matrix::identity(2, 0));

    auto im = image_basis(Matrix::from_rows({{1, 1}, {0, 0}}));
    REQUIRE(im.cols() == 1);
    CHECK(im.at(0, 0) == Scalar::rational(1));
    CHECK(im.at(1, 0) == Scalar::rational(0));

    CHECK(image_basis(Matrix(3, 2, 0)).cols() == 0);
}

TEST_CASE("solve_factor examples") {
    auto b = Matrix::from_rows({{3, 1}, {7, 2}});
    auto x = solve_factor(Matrix::identity(2, 0), b, SolveSide::right);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto a1 = Matrix::from_rows({{1}, {1}});
    auto b1 = Matrix::from_rows({{2}, {2}});
    auto x1 = solve_factor(a1, b1, SolveSide::right);
    REQUIRE(x1.has_value());
    CHECK(a1 * *x1 == b1);
    CHECK(x1->at(0, 0) == Scalar::rational(2));

    // second row forces 0 = 1
    auto x2 = solve_factor(Matrix::from_rows({{1}, {0}}), Matrix::from_rows({{0}, {1}}),
                           SolveSide::right);
    CHECK(!x2.has_value());
}

TEST_CASE("solve_factor left side") {
    auto a = Matrix::from_rows({{1, 2}, {0, 1}});
    auto b = Matrix::from_rows({{1, 4}});
    auto x = solve_factor(a, b, SolveSide::left);
    REQUIRE(x.has_value());
    CHECK(*x * a == b);
}

TEST_CASE("split_idempotent_matrix examples") {
    auto e = Matrix::from_rows({{1, 0}, {0, 0}});
    auto s = split_idempotent_matrix(e);
    CHECK(s.f == Matrix::from_rows({{1}, {0}}));
    CHECK(s.g == Matrix::from_rows({{1, 0}}));

    auto z = Matrix(3, 3, 0);
    auto sz = split_idempotent_matrix(z);
    CHECK(sz.f.cols() == 0);
    CHECK(sz.g.rows() == 0);

    auto e2 = Matrix::from_rows({{1, 1}, {0, 0}});
    auto s2 = split_idempotent_matrix(e2);
    CHECK(s2.f == Matrix::from_rows({{1}, {0}}));
    CHECK(s2.g == Matrix::from_rows({{1, 1}}));
    CHECK(s2.f * s2.g == e2);
    CHECK(s2.g * s2.f == Matrix::identity(1, 0));

    CHECK_THROWS_AS((void)split_idempotent_matrix(Matrix::from_rows({{1, 1}, {0, 1}})),
                    NotIdempotent);
}

TEST_CASE("degenerate shapes are first-class") {
    Matrix a(0, 3, 0);
    Matrix b(3, 2, 0);
    CHECK((a * b).rows() == 0);
    CHECK((a * b).cols() == 2);
    CHECK(rref(a).rank == 0);
    CHECK(kernel_basis(a) == Matrix::identity(3, 0)); // everything is in the kernel
    CHECK(kernel_basis(Matrix(3, 0, 0)).cols() == 0);
    CHECK(image_basis(a).rows() == 0);

    // solving with an empty lhs succeeds only against zero
    auto s = solve_factor(Matrix(2, 0, 0), Matrix(2, 1, 0), SolveSide::right);
    REQUIRE(s.has_value());
    CHECK(s->rows() == 0);
    auto s2 = solve_factor(Matrix(2, 0, 0), Matrix::from_rows({{1}, {0}}), SolveSide::right);
    CHECK(!s2.has_value());
}

TEST_CASE("rref properties on random matrices") {
    for (long ch : {0L, 5L}) {
        TestRng rng(42 + ch);
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t rows = rng.in_range(0, 5);
            std::size_t cols = rng.in_range(0, 5);
            Matrix m = random_matrix(rng, rows, cols, ch);
            auto r = rref(m);
            CHECK(r.transform * m == r.reduced);
            CHECK_NOTHROW((void)inverse(r.transform));
            CHECK(rref(r.reduced).reduced == r.reduced); // rref is idempotent
            CHECK(r.rank + kernel_basis(m).cols() == cols);
            CHECK(image_basis(m).cols() == r.rank);
            CHECK((m * kernel_basis(m)).is_zero());
        }
    }
}

TEST_CASE("solve_factor consistency characterization") {
    for (long ch : {0L, 5L}) {
        TestRng rng(99 + ch);
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t rows = rng.in_range(1, 4);
            std::size_t acols = rng.in_range(0, 4);
            std::size_t bcols = rng.in_range(1, 3);
            Matrix a = random_matrix(rng, rows, acols, ch);
            Matrix b = random_matrix(rng, rows, bcols, ch);
            auto x = solve_factor(a, b, SolveSide::right);
            if (x) {
                CHECK(a * *x == b);
            } else {
                // appending b must strictly grow the column span
                CHECK(rank(hstack(a, b)) > rank(a));
            }
        }
    }
}

TEST_CASE("idempotent splitting on random conjugated projections") {
    for (long ch : {0L, 5L}) {
        TestRng rng(7 + ch);
        for (int rep = 0; rep < 30; ++rep) {
            std::size_t n = rng.in_range(1, 5);
            std::size_t r = rng.in_range(0, n);
            // e = t * diag(1..1,0..0) * t^{-1} for a random invertible t
            Matrix t(0, 0, ch);
            while (true) {
                t = random_matrix(rng, n, n, ch);
                if (rank(t) == n)
                    break;
            }
            Matrix d(n, n, ch);
            for (std::size_t i = 0; i < r; ++i)
                d.set(i, i, Scalar::one(ch));
            Matrix e = t * d * inverse(t);
            auto s = split_idempotent_matrix(e);
            CHECK(s.f.cols() == r);
            CHECK(s.f * s.g == e);
            CHECK(s.g * s.f == Matrix::identity(r, ch));
        }
    }
}
