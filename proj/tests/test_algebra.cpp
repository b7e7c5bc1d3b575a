#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seglie/matrix.hpp"
#include "seglie/printer.hpp"
#include "seglie/series.hpp"
#include "test_util.hpp"

using namespace seglie;

namespace {

ContextPtr ctx2() { return make_context({"x1", "x2"}); }
ContextPtr ctx_xu() { return make_context({"x1", "u1"}); }

Polynomial var(const ContextPtr& c, int i) { return Polynomial::variable(c, i); }

}  // namespace

TEST_CASE("poly_mul basics") {
    auto c = ctx2();
    Polynomial x1 = var(c, 0), x2 = var(c, 1);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    auto cu = ctx_xu();
    testutil::Rng rng(7);
    Polynomial p = testutil::random_polynomial(rng, cu, 3, 5);
    CHECK(p * Polynomial::constant(cu, 1) == p);

    Polynomial q = var(cu, 0).scaled(Rational(1, 2)) + var(cu, 1);  // 1/2 x1 + u1
    Polynomial sq = q * q;
    Polynomial expect = var(cu, 0) * var(cu, 0).scaled(Rational(1, 4)) + var(cu, 0) * var(cu, 1) +
                        var(cu, 1) * var(cu, 1);
    CHECK(sq == expect);
}

TEST_CASE("poly_mul context mismatch is an error") {
    Polynomial a = var(ctx2(), 0);
    Polynomial b = var(make_context({"y1"}), 0);
    CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
}

TEST_CASE("poly_diff basics") {
    auto c = ctx_xu();
    Polynomial x = var(c, 0), u = var(c, 1);
    CHECK((x * x * u).diff(0) == (x * u).scaled(2));  // d/dx1 x1^2 u1 = 2 x1 u1
    CHECK(x.diff(1).is_zero());
    CHECK((x * x * x).scaled(Rational(1, 3)).diff(0) == x * x);
    CHECK_THROWS_AS(x.diff(5), std::invalid_argument);
}

TEST_CASE("ring axioms and Leibniz on random triples") {
    testutil::Rng rng(0x5EC4E);
    auto c = make_context({"x1", "x2", "u1"});
    for (int i = 0; i < 100; ++i) {
        Polynomial a = testutil::random_polynomial(rng, c, 3, 4);
        Polynomial b = testutil::random_polynomial(rng, c, 3, 4);
        Polynomial d = testutil::random_polynomial(rng, c, 3, 4);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        int v = static_cast<int>(rng.pick(0, 2));
        CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
    }
}

TEST_CASE("series_substitute worked examples") {
    auto cu = make_context({"x", "u"});
    auto cx = make_context({"x"});
    Series u = Series::variable(cu, 1);
    Series usq = u * u;

    // u -> x + x^2 into u^2 at cap 3 gives x^2 + 2x^3
    Series img = Series::variable(cx, 0) + Series::variable(cx, 0) * Series::variable(cx, 0);
    Series got = series_substitute(usq, {{1, img}}, cx, 3u);
    Series expect = Series(Polynomial::monomial(cx, MultiIndex({2}), 1) +
                               Polynomial::monomial(cx, MultiIndex({3}), 2),
                           3u);
    CHECK(got == expect);

    // identity assignment
    testutil::Rng rng(3);
    Series poly = Series(testutil::random_polynomial(rng, cu, 3, 4));
    CHECK(series_substitute(poly, {}, cu, std::nullopt) == poly);

    // all variables -> 0 keeps the constant term
    Series p1 = poly + Series::constant(cu, Rational(7));
    Series z = Series::zero(cu);
    Series c0 = series_substitute(p1, {{0, z}, {1, z}}, cu, std::nullopt);
    CHECK(c0 == Series::constant(cu, p1.constant_term()));
}

TEST_CASE("substitution soundness rule") {
    auto cu = make_context({"x", "u"});
    Series capped = Series(Polynomial::variable(cu, 1), 4u);  // truncated source
    Series with_const = Series::constant(cu, 1) + Series::variable(cu, 0);
    // nonzero constant term into a truncated source: rejected
    CHECK_THROWS_AS(series_substitute(capped, {{1, with_const}}, cu, 4u), std::invalid_argument);
    // same image into an exact polynomial source: fine
    Series exact = Series(Polynomial::variable(cu, 1));
    CHECK(series_substitute(exact, {{1, with_const}}, cu, std::nullopt) == with_const);
}

TEST_CASE("implicit_solve: u - x - u^2 = 0") {
    // Oracle (documented): fixed-point iteration u <- x + u^2 by hand:
    //   u0 = 0, u1 = x, u2 = x + x^2, u3 = x + x^2 + 2x^3 (mod degree 4).
    auto c = make_context({"x", "u"});
    Series eq = Series::variable(c, 1) - Series::variable(c, 0) - Series::variable(c, 1) * Series::variable(c, 1);
    auto phi = implicit_solve({eq}, {1}, 3);
    auto cx = implicit_param_context(c, {1});
    Series expect = Series(Polynomial::monomial(cx, MultiIndex({1}), 1) +
                               Polynomial::monomial(cx, MultiIndex({2}), 1) +
                               Polynomial::monomial(cx, MultiIndex({3}), 2),
                           3u);
    CHECK(phi[0] == expect);
}

TEST_CASE("implicit_solve: linear and geometric examples") {
    auto c = make_context({"x", "u"});
    Series u = Series::variable(c, 1), x = Series::variable(c, 0);
    auto lin = implicit_solve({u - x.scaled(2)}, {1}, 4);
    auto cx = implicit_param_context(c, {1});
    CHECK(lin[0] == Series(Polynomial::monomial(cx, MultiIndex({1}), 2), 4u));

    // u - x - x*u = 0  =>  u = x/(1-x) = x + x^2 + x^3 + ... (geometric oracle)
    auto geo = implicit_solve({u - x - x * u}, {1}, 3);
    Series expect = Series(Polynomial::monomial(cx, MultiIndex({1}), 1) +
                               Polynomial::monomial(cx, MultiIndex({2}), 1) +
                               Polynomial::monomial(cx, MultiIndex({3}), 1),
                           3u);
    CHECK(geo[0] == expect);
}

TEST_CASE("implicit_solve error paths") {
    auto c = make_context({"x", "u"});
    Series x = Series::variable(c, 0), u = Series::variable(c, 1);
    // singular linear part: no linear u term
    CHECK_THROWS_WITH_AS(implicit_solve({x + u * u}, {1}, 3), doctest::Contains("singular linear part"),
                         std::invalid_argument);
    // non-square
    CHECK_THROWS_WITH_AS(implicit_solve({u - x, u - x}, {1}, 3), doctest::Contains("non-square"),
                         std::invalid_argument);
    // nonvanishing at origin
    CHECK_THROWS_AS(implicit_solve({u - x + Series::constant(c, 1)}, {1}, 3), std::invalid_argument);
}

TEST_CASE("implicit_solve round-trip on random solvable instances") {
    testutil::Rng rng(0x11);
    auto c = make_context({"x", "p"});
    auto cx = implicit_param_context(c, {1});
    for (int t = 0; t < 20; ++t) {
        // p - a*x - (higher order in (x,p)) with a != 0: always solvable
        Series eq = Series::variable(c, 1) - Series::variable(c, 0).scaled(rng.rational() + Rational(7));
        Polynomial tail(c);
        for (int k = 0; k < 3; ++k) {
            std::vector<unsigned> e = {static_cast<unsigned>(rng.pick(0, 2)), static_cast<unsigned>(rng.pick(0, 2))};
            if (e[0] + e[1] < 2) e[0] += 2;
            tail.add_term(MultiIndex{e}, rng.rational());
        }
        eq = eq + Series(tail);
        auto phi = implicit_solve({eq}, {1}, 5);
        Series residual = series_substitute(eq, {{1, phi[0]}}, cx, 5u);
        CHECK(residual.is_zero());
    }
}

TEST_CASE("rref on identity and proportional rows") {
    ExactMatrix id3 = ExactMatrix::identity(3);
    auto r = rref_rank_nullspace(id3);
    CHECK(r.rank == 3);
    CHECK(r.nullspace.empty());

    ExactMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    auto r2 = rref_rank_nullspace(m);
    CHECK(r2.rank == 1);
    REQUIRE(r2.nullspace.size() == 1);
    // nullspace must be the line spanned by (2, -1)
    const auto& v = r2.nullspace[0];
    CHECK(v[0] * Rational(-1) == v[1] * Rational(2));
    CHECK(!(v[0] == 0 && v[1] == 0));
}

TEST_CASE("flat-ODE symbol matrix: rank 4, nullity 2") {
    // Coordinates (v1_11, v1_12, v1_22, v2_11, v2_12, v2_22); rows are the
    // order-2 parts of eta_xx, 2eta_xu - th_xx, eta_uu - 2th_xu, th_uu.
    ExactMatrix m(4, 6);
    m.at(0, 3) = 1;                    // v2_11
    m.at(1, 4) = 2, m.at(1, 0) = -1;   // 2 v2_12 - v1_11
    m.at(2, 5) = 1, m.at(2, 1) = -2;   // v2_22 - 2 v1_12
    m.at(3, 2) = 1;                    // v1_22
    auto r = rref_rank_nullspace(m);
    CHECK(r.rank == 4);
    CHECK(r.nullspace.size() == 2);
}

TEST_CASE("rref idempotence and row-permutation invariance") {
    testutil::Rng rng(0x22);
    for (int t = 0; t < 25; ++t) {
        int rows = static_cast<int>(rng.pick(1, 5)), cols = static_cast<int>(rng.pick(1, 5));
        ExactMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational();
        auto r1 = rref_rank_nullspace(m);
        auto r2 = rref_rank_nullspace(r1.rref);
        CHECK(r1.rref == r2.rref);
        // permute rows: reverse order
        ExactMatrix p(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) p.at(i, j) = m.at(rows - 1 - i, j);
        CHECK(rref_rank_nullspace(p).rank == r1.rank);
    }
}

TEST_CASE("graded-lex printing is canonical") {
    auto c = make_context({"x1", "u1"});
    Polynomial p = Polynomial::monomial(c, MultiIndex({2, 0}), Rational(1, 4)) +
                   Polynomial::monomial(c, MultiIndex({1, 1}), 1) + Polynomial::monomial(c, MultiIndex({0, 2}), 1);
    CHECK(to_string(p) == "1/4*x1^2 + x1*u1 + u1^2");
    CHECK(to_string(Polynomial::zero(c)) == "0");
}
