#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seglie/lintype.hpp"
#include "seglie/parser.hpp"
#include "test_util.hpp"

using namespace seglie;

namespace {

constexpr std::uint64_t kSeed = 0x5EC4E;

LinearPDESystem system_of(int nvars, int unknowns, const std::vector<std::string>& eqs) {
    std::vector<std::string> names;
    for (int v = 1; v <= nvars; ++v) names.push_back("z" + std::to_string(v));
    LinearPDESystem R;
    R.zctx = make_context(std::move(names));
    R.unknown_count = unknowns;
    for (const auto& s : eqs) R.eqs.push_back(eval_linear(parse_expression(s), R.zctx, unknowns));
    return R;
}

LinearPDESystem flat_ode_system() {
    return system_of(2, 2, {"t2_11", "2*t2_12 - t1_11", "t2_22 - 2*t1_12", "t1_22"});
}

std::vector<Rational> origin(const LinearPDESystem& R) {
    return std::vector<Rational>(static_cast<size_t>(R.zctx->size()), Rational(0));
}

// residual of a coefficient tuple against every equation of R
bool solves(const LinearPDESystem& R, const std::vector<Series>& tuple) {
    for (const auto& e : R.eqs)
        if (!e.substitute_unknowns(tuple).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("completion lifts lower-order equations") {
    // {tau_z1 = 0} completed to order 2 adds tau_z1z1 and tau_z1z2
    LinearPDESystem R = system_of(2, 1, {"t1_1"});
    LinearPDESystem C = complete(R, 2);
    CHECK(C.eqs.size() == 3);
    LinearPDESystem expect = system_of(2, 1, {"t1_1", "t1_11", "t1_12"});
    CHECK(row_space_equal(C, expect, kSeed));

    // a pure top-order system is unchanged
    LinearPDESystem top = flat_ode_system();
    CHECK(complete(top).eqs.size() == top.eqs.size());
}

TEST_CASE("linear prolongation") {
    LinearPDESystem R = system_of(1, 1, {"t1_1"});
    CHECK(prolong_linear(R, 0).eqs.size() == 1);
    LinearPDESystem P = prolong_linear(R, 1);
    LinearPDESystem expect = system_of(1, 1, {"t1_1", "t1_11"});
    CHECK(row_space_equal(P, expect, kSeed));
}

TEST_CASE("symbol of the flat-ODE system") {
    LinearPDESystem R = flat_ode_system();
    SymbolSpace G2 = symbol_at(R, origin(R), 2);
    CHECK(G2.coords.size() == 6);
    CHECK(G2.rank == 4);
    CHECK(G2.dim() == 2);

    // empty system: full symbol space
    LinearPDESystem empty = system_of(2, 1, {});
    CHECK(symbol_at(empty, origin(empty), 2).dim() == 3);

    // {tau_z1z1 = 0} in one variable: trivial symbol
    LinearPDESystem single = system_of(1, 1, {"t1_11"});
    CHECK(symbol_at(single, origin(single), 2).dim() == 0);
}

TEST_CASE("finite type of the flat ODE is 1 with G'_3 = 0") {
    LinearPDESystem R = flat_ode_system();
    TypeReport tr = finite_type(R, origin(R), 6);
    CHECK(tr.decided);
    CHECK(tr.finite);
    CHECK(tr.type == 1);
    REQUIRE(tr.symbol_dims.size() == 2);
    CHECK(tr.symbol_dims[0] == 2);
    CHECK(tr.symbol_dims[1] == 0);

    // the 1-prolongation's order-3 symbol block lives inside C^8 and vanishes
    LinearPDESystem P = prolong_linear(complete(R), 1);
    SymbolSpace G3 = symbol_at(P, origin(R), 3);
    CHECK(G3.coords.size() == 8);
    CHECK(G3.dim() == 0);
}

TEST_CASE("harmonic equation is not decided within rmax") {
    LinearPDESystem R = system_of(2, 1, {"t1_11 + t1_22"});
    TypeReport tr = finite_type(R, origin(R), 6);
    CHECK(!tr.decided);
    // harmonic-polynomial count: two independent harmonics in every degree
    for (size_t i = 1; i < tr.symbol_dims.size(); ++i) CHECK(tr.symbol_dims[i] == 2);
    CHECK_THROWS_AS(dim_bound(R, origin(R), 6), std::runtime_error);
}

TEST_CASE("dimension bound of the flat ODE: 12 jets - rank 4 = 8") {
    LinearPDESystem R = flat_ode_system();
    DimBoundReport rep = dim_bound(R, origin(R), 6);
    CHECK(rep.jet_count == 12);
    CHECK(rep.algebraic_rank == 4);
    CHECK(rep.parametric_count == 8);
    CHECK(rep.bound == 8);
    CHECK(rep.parametric_labels.size() == 8);
}

TEST_CASE("polynomial solutions of the flat ODE stabilize at 8") {
    LinearPDESystem R = flat_ode_system();
    CHECK(polynomial_solutions(R, 1).dimension == 6);
    PolySolutions d2 = polynomial_solutions(R, 2);
    CHECK(d2.dimension == 8);
    CHECK(polynomial_solutions(R, 3).dimension == 8);

    ContextPtr z = R.zctx;
    Series x = Series::variable(z, 0), u = Series::variable(z, 1);
    CHECK(solves(R, {x * x, x * u}));
    for (const auto& tuple : d2.basis) CHECK(solves(R, tuple));
}

TEST_CASE("solution preservation under completion and prolongation") {
    LinearPDESystem R = flat_ode_system();
    PolySolutions sols = polynomial_solutions(R, 3);
    LinearPDESystem C = complete(R);
    LinearPDESystem P1 = prolong_linear(R, 1);
    LinearPDESystem P2 = prolong_linear(R, 2);
    for (const auto& tuple : sols.basis) {
        CHECK(solves(C, tuple));
        CHECK(solves(P1, tuple));
        CHECK(solves(P2, tuple));
    }
}

TEST_CASE("rank of the evaluated system is monotone in the jet order") {
    LinearPDESystem R = flat_ode_system();
    LinearPDESystem full = prolong_linear(complete(R), 2);
    auto y0 = origin(R);
    int prev = 0;
    for (int k = 0; k <= 4; ++k) {
        auto jets = multiindices_up_to(R.zctx->size(), k);
        std::vector<UnknownSym> cols;
        for (const auto& g : jets)
            for (int tau = 0; tau < R.unknown_count; ++tau) cols.push_back(UnknownSym{tau, g});
        RowSpace space(static_cast<int>(cols.size()));
        for (const auto& e : full.eqs)
            if (e.order() <= k) space.insert(e.eval_row(cols, y0));
        CHECK(space.rank() >= prev);
        prev = space.rank();
    }
}

TEST_CASE("constant-coefficient V_s spaces") {
    LinearPDESystem R = flat_ode_system();
    CHECK(constant_coeff_Vs(R, 2).dim() == 2);  // equals the symbol
    CHECK(constant_coeff_Vs(R, 3).dim() == 0);  // type 1, quadratic solutions

    // V_3 = 0 forces stabilization of the oracle at degree 2
    CHECK(polynomial_solutions(R, 2).dimension == polynomial_solutions(R, 5).dimension);

    // preconditions
    LinearPDESystem mixed = system_of(2, 1, {"t1_11 + t1_1"});
    CHECK_THROWS_AS(constant_coeff_Vs(mixed, 2), std::invalid_argument);
    LinearPDESystem varying = system_of(2, 1, {"z1*t1_11"});
    CHECK_THROWS_AS(constant_coeff_Vs(varying, 2), std::invalid_argument);
}

TEST_CASE("characteristic matrix of the flat ODE") {
    LinearPDESystem R = flat_ode_system();
    auto y0 = origin(R);
    CharacteristicReport c1 = characteristic_matrix(R, y0, {Rational(1), Rational(0)});
    CHECK(c1.injective);
    CharacteristicReport c0 = characteristic_matrix(R, y0, {Rational(0), Rational(0)});
    CHECK(!c0.injective);

    auto pts = seeded_points(2, 5, kSeed);
    for (const auto& lam : pts) {
        if (lam[0] == 0 && lam[1] == 0) continue;
        CHECK(characteristic_matrix(R, y0, lam).injective);
    }
}

TEST_CASE("deformation monotonicity on simple families") {
    LinearPDESystem R = flat_ode_system();
    std::vector<std::pair<Rational, LinearPDESystem>> constant_family = {
        {Rational(0), R}, {Rational(1, 8), R}, {Rational(1, 4), R}};
    DeformReport rep = deformation_monotonicity_check(constant_family, origin(R), 6);
    CHECK(rep.monotone);
    for (const auto& s : rep.samples) {
        CHECK(s.type.type == rep.base.type.type);
        CHECK(s.bound.bound == rep.base.bound.bound);
    }
}

TEST_CASE("flat n=m=2 family A(eps) = diag(1, -1+eps) keeps type 1") {
    std::vector<std::pair<Rational, LinearPDESystem>> family;
    for (const Rational& eps : {Rational(0), Rational(1, 8), Rational(1, 4)}) {
        PDESystemS S = PDESystemS::flat(
            2, 2, {{{Rational(1), Rational(0)}, {Rational(0), Rational(-1) + eps}}});
        family.emplace_back(eps, generate_lie_equations(S));
    }
    DeformReport rep = deformation_monotonicity_check(family, {0, 0, 0, 0}, 6);
    CHECK(rep.decided);
    CHECK(rep.monotone);
    CHECK(rep.base.type.type == 1);
    for (const auto& s : rep.samples) CHECK(s.type.type == 1);
}

TEST_CASE("degenerate relations A = Id leave V_s nontrivial for all s <= 6") {
    // {Id, Id} dependent: the symmetry algebra is infinite dimensional and
    // the constant-coefficient spaces never collapse.
    PDESystemS S = PDESystemS::flat(2, 2, {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}});
    LinearPDESystem R = generate_lie_equations(S);
    for (int s = 2; s <= 6; ++s) CHECK(constant_coeff_Vs(R, s).dim() > 0);
}
