#include <doctest.h>

#include "pentachain/dual.hpp"
#include "pentachain/matrix.hpp"
#include "pentachain/rng.hpp"
#include "pentachain/scalar.hpp"

using namespace pentachain;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

Matrix<Rational> rq(Sampler& rng, std::size_t rows, std::size_t cols, long long bound = 9) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(bound);
    return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(q(3, 2)) == "3/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(rational_from_string("6/4") == q(3, 2));
    CHECK(rational_from_string("-7") == q(-7));
    CHECK(rational_from_string("+7/3") == q(7, 3));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
}

TEST_CASE("gaussian rationals form a field") {
    const GaussianRational i{q(0), q(1)};
    CHECK(i * i == GaussianRational(q(-1)));
    const GaussianRational x{q(3, 2), q(-1, 3)};
    const GaussianRational y{q(-2), q(5, 7)};
    CHECK((x / y) * y == x);
    CHECK(to_string(x) == "3/2-1/3*i");
    CHECK(gaussian_from_string("3/2-1/3*i") == x);
    CHECK(gaussian_from_string("-5/4") == GaussianRational(q(-5, 4)));
    CHECK(gaussian_from_string("0+1*i") == i);
    CHECK(canonical_abs(GaussianRational{q(-1), q(2)}) == GaussianRational{q(1), q(-2)});
}

TEST_CASE("determinant basic cases") {
    CHECK(Matrix<Rational>::identity(3).det() == q(1));
    Matrix<Rational> m{{q(1), q(2)}, {q(3), q(4)}};
    CHECK(m.det() == q(-2));
    // This block reappears in the torsion of the one-tetrahedron complex.
    Matrix<Rational> t{{q(1), q(-1)}, {q(-2), q(3, 2)}};
    CHECK(t.det() == q(-1, 2));
    CHECK(Matrix<Rational>(0, 0).det() == q(1));
    CHECK_THROWS(Matrix<Rational>(2, 3).det());
}

TEST_CASE("inverse") {
    CHECK(Matrix<Rational>::identity(4).inverse() == Matrix<Rational>::identity(4));
    Matrix<Rational> s{{q(2)}};
    CHECK(s.inverse() == Matrix<Rational>{{q(1, 2)}});
    Sampler rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> m = rq(rng, 3, 3);
        if (m.det() == q(0)) continue;
        CHECK(m * m.inverse() == Matrix<Rational>::identity(3));
    }
    Matrix<Rational> sing{{q(1), q(2)}, {q(2), q(4)}};
    CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
}

TEST_CASE("rank") {
    CHECK(Matrix<Rational>(2, 3).rank() == 0);
    CHECK(Matrix<Rational>::identity(4).rank() == 4);
    Matrix<Rational> m{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(0), q(1), q(1)}};
    CHECK(m.rank() == 2);
}

TEST_CASE("rank properties: transpose and elimination row count") {
    Sampler rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        Matrix<Rational> m = rq(rng, 4, 6, 4);
        CHECK(m.rank() == m.transpose().rank());
        CHECK(m.echelon().rank == m.rank());
        CHECK(m.echelon().pivot_rows.size() == m.rank());
    }
}

TEST_CASE("det is multiplicative up to 6x6") {
    Sampler rng(37);
    for (std::size_t n = 1; n <= 6; ++n) {
        Matrix<Rational> a = rq(rng, n, n, 5);
        Matrix<Rational> b = rq(rng, n, n, 5);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("submatrix") {
    Matrix<Rational> m{{q(1), q(2), q(3)}, {q(4), q(5), q(6)}};
    CHECK(m.submatrix({0, 1}, {0, 1, 2}) == m);
    CHECK(m.submatrix({1}, {2}) == Matrix<Rational>{{q(6)}});
    CHECK_THROWS(m.submatrix({0}, {3}));
    CHECK_THROWS(m.submatrix({1, 0}, {0}));
    // Corner extraction from the one-tetrahedron block at zeta = 0,1,2,3.
    Matrix<Rational> block{{q(1), q(-1), q(1), q(0)}, {q(-2), q(3, 2), q(0), q(-1)}};
    CHECK(block.submatrix({0, 1}, {0, 3}) ==
          Matrix<Rational>{{q(1), q(0)}, {q(-2), q(-1)}});
}

TEST_CASE("solve") {
    Matrix<Rational> a{{q(1), q(1)}, {q(1), q(-1)}};
    Matrix<Rational> b{{q(3)}, {q(1)}};
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    Matrix<Rational> sing{{q(1), q(1)}, {q(1), q(1)}};
    Matrix<Rational> inconsistent{{q(0)}, {q(1)}};
    CHECK(!sing.solve(inconsistent).has_value());
}

TEST_CASE("matrices over gaussian rationals") {
    Matrix<GaussianRational> m{{GaussianRational{q(1), q(1)}, GaussianRational{q(0), q(0)}},
                               {GaussianRational{q(2), q(0)}, GaussianRational{q(0), q(-1)}}};
    CHECK(m.det() == GaussianRational{q(1), q(1)} * GaussianRational{q(0), q(-1)});
    CHECK(m * m.inverse() == Matrix<GaussianRational>::identity(2));
    CHECK(m.rank() == 2);
}

TEST_CASE("dual matrices: product rule and inverse round trip") {
    Sampler rng(53);
    ExactMatrix a = rng.matrix(3, 3, 6);
    ExactMatrix da = rng.matrix(3, 3, 6);
    ExactMatrix b = rng.matrix(3, 3, 6);
    ExactMatrix db = rng.matrix(3, 3, 6);
    DualMatrix x(a, da), y(b, db);
    DualMatrix p = x * y;
    CHECK(p.value == a * b);
    CHECK(p.diff == da * b + a * db);

    ExactMatrix inv_a = rng.invertible_matrix(3, 6);
    DualMatrix z(inv_a, da);
    DualMatrix r = z * z.inverse();
    CHECK(r.value == ExactMatrix::identity(3));
    CHECK(r.diff.is_zero());
}

TEST_CASE("dual chain rule: differential of the inverse") {
    Sampler rng(59);
    for (int trial = 0; trial < 8; ++trial) {
        ExactMatrix a = rng.invertible_matrix(3, 5);
        ExactMatrix da = rng.matrix(3, 3, 5);
        DualMatrix x(a, da);
        const ExactMatrix ai = a.inverse();
        CHECK(x.inverse().diff == -(ai * da * ai));
    }
}
