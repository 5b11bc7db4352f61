#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "stokes/sym_matrix.hpp"
#include "support.hpp"

using namespace stokes;

namespace {

const Unknown x01 = Unknown::x(0, 1);
const Unknown x21 = Unknown::x(2, 1);

SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
{
    SymMatrix m(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m.set(static_cast<int>(i), static_cast<int>(j), SymExpr(Cyclotomic(rows[i][j])));
        }
    }
    return m;
}

std::vector<std::vector<Rational>> random_rows(int n)
{
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (auto& r : rows) {
        for (auto& v : r) {
            v = testing::random_rational(5);
        }
    }
    return rows;
}

SymMatrix permutation(const std::vector<int>& sigma)
{
    SymMatrix p(static_cast<int>(sigma.size()));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        p.set(sigma[i], static_cast<int>(i), SymExpr(1));
    }
    return p;
}

}  // namespace

TEST_CASE("sym_expr arithmetic")
{
    CHECK(SymExpr(x01) + SymExpr(0) == SymExpr(x01));
    const SymExpr prod = SymExpr(x21) * SymExpr(Unknown::y(1));
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms().begin()->first.size() == 2);
    CHECK(prod.terms().begin()->second == Cyclotomic(1));
    CHECK((SymExpr(1) + SymExpr(x01)) * (SymExpr(1) - SymExpr(x01)) == SymExpr(1) - SymExpr(x01) * SymExpr(x01));
    CHECK(prod.degree() == 2);
    CHECK(SymExpr().degree() == -1);
    CHECK((SymExpr(x01) - SymExpr(x01)).is_zero());
    CHECK((SymExpr(x01) * Cyclotomic(3) + SymExpr(2)).constant_term() == Cyclotomic(2));
    CHECK(SymExpr(x01).str() == "x_{0,1}");
    CHECK(Unknown::y(2).str() == "y_2");
    CHECK(Unknown::z(1).str() == "z_1");
}

TEST_CASE("substitution")
{
    CHECK(SymExpr(x01).substitute({{x01, Cyclotomic(3)}}) == SymExpr(3));
    const SymExpr xz = SymExpr(x01) * SymExpr(Unknown::z(1));
    CHECK(xz.substitute({{x01, Cyclotomic(-5)}}) == SymExpr(Unknown::z(1)) * Cyclotomic(-5));
    const SymExpr e = SymExpr(1) + SymExpr(x01) + SymExpr(x01) * SymExpr(x21);
    CHECK(e.substitute({{x01, Cyclotomic(3)}, {x21, Cyclotomic(-3)}}) == SymExpr(-5));
    CHECK(e.unknowns().size() == 2);
}

TEST_CASE("matrix products of unit matrices")
{
    const int n = 4;
    SymMatrix a(n);
    a.set(0, 1, SymExpr(x01));
    a.set(3, 3, SymExpr(2));
    CHECK(SymMatrix::identity(n) * a == a);
    CHECK(SymMatrix::unit(n, 0, 1) * SymMatrix::unit(n, 1, 3) == SymMatrix::unit(n, 0, 3));
    CHECK(SymMatrix::unit(n, 0, 1) * SymMatrix::unit(n, 2, 3) == SymMatrix(n));
    CHECK_THROWS_AS(SymMatrix(2) * SymMatrix(3), DimensionMismatch);
    CHECK_THROWS(a.set(4, 0, SymExpr(1)));
    CHECK(a.transposed().at(1, 0) == SymExpr(x01));
}

TEST_CASE("char_poly examples")
{
    CHECK(char_poly(SymMatrix::identity(3)) ==
          LambdaPoly::from_polynomial(pow(Polynomial::linear_root(Rational(1)), 3).scaled(Rational(-1))));

    SymMatrix gamma(3);
    gamma.set(1, 0, SymExpr(1));
    gamma.set(2, 1, SymExpr(1));
    gamma.set(0, 2, SymExpr(1));
    CHECK(char_poly(gamma) == LambdaPoly({SymExpr(1), SymExpr(), SymExpr(), SymExpr(-1)}));

    SymMatrix st14 = SymMatrix::identity(3);
    st14.set(0, 1, SymExpr(x01));
    SymMatrix st34 = SymMatrix::identity(3);
    st34.set(2, 1, SymExpr(x21));
    const LambdaPoly p3 = char_poly(gamma * st34 * st14);
    CHECK(p3 == LambdaPoly({SymExpr(1), SymExpr(x21), SymExpr(x01), SymExpr(-1)}));
    CHECK(p3.str() == "-λ^3 + x_{0,1}*λ^2 + x_{2,1}*λ + 1");
}

TEST_CASE("char_poly of a diagonal matrix")
{
    SymMatrix d(4);
    Polynomial expected = Polynomial::constant(Rational(1));
    for (int i = 0; i < 4; ++i) {
        const Rational v = testing::random_rational();
        d.set(i, i, SymExpr(Cyclotomic(v)));
        expected = expected * (Polynomial::constant(v) - Polynomial::monomial(Rational(1), 1));
    }
    CHECK(char_poly(d) == LambdaPoly::from_polynomial(expected));
}

TEST_CASE("char_poly is invariant under permutation similarity on random 5x5 matrices")
{
    std::vector<int> sigma(5);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int trial = 0; trial < 15; ++trial) {
        const SymMatrix a = from_rows(random_rows(5));
        std::shuffle(sigma.begin(), sigma.end(), testing::rng());
        const SymMatrix p = permutation(sigma);
        CHECK(char_poly(p.transposed() * a * p) == char_poly(a));
    }
}

TEST_CASE("char_poly is invariant under unipotent similarity on random 5x5 matrices")
{
    for (int trial = 0; trial < 15; ++trial) {
        const SymMatrix a = from_rows(random_rows(5));
        SymMatrix u = SymMatrix::identity(5);
        SymMatrix u_inv = SymMatrix::identity(5);
        const Cyclotomic c(testing::random_nonzero_rational());
        u.set(0, 3, SymExpr(c));
        u_inv.set(0, 3, SymExpr(-c));
        REQUIRE(u * u_inv == SymMatrix::identity(5));
        CHECK(char_poly(u * a * u_inv) == char_poly(a));
    }
}

TEST_CASE("symbolic char_poly is invariant under similarity")
{
    SymMatrix a(3);
    a.set(0, 1, SymExpr(x01));
    a.set(2, 1, SymExpr(x21));
    a.set(1, 0, SymExpr(1));
    a.set(0, 2, SymExpr(Unknown::z(1)));
    const SymMatrix p = permutation({2, 0, 1});
    CHECK(char_poly(p.transposed() * a * p) == char_poly(a));
}

TEST_CASE("determinant agrees with fraction-free elimination")
{
    for (int n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto rows = random_rows(n);
            const SymExpr det = determinant(from_rows(rows));
            CHECK(det == SymExpr(Cyclotomic(testing::bareiss_det(rows))));
            CHECK(char_poly(from_rows(rows)).coeff(0) == det);
        }
    }
}

TEST_CASE("dimension limit")
{
    CHECK_THROWS_AS(char_poly(SymMatrix::identity(17)), DimensionLimitExceeded);
    CharPolyStats stats;
    CHECK(char_poly(SymMatrix::identity(17), 20, &stats).degree() == 17);
    CHECK(stats.states > 0);
    CHECK(char_poly(SymMatrix::identity(3), 100).degree() == 3);
}
