#pragma once

#include <cstdint>

#include "seglie/fields.hpp"
#include "seglie/systems.hpp"

namespace seglie {

// Homogeneous linear PDE system for the unknown coefficient functions
// tau = (theta_1..theta_n, eta^1..eta^m) of z = (x, u); also the generic
// container lintype operates on. Unknown slot j corresponds to tau_{j+1}.
struct LinearPDESystem {
    ContextPtr zctx;
    int unknown_count = 0;
    std::vector<LinearForm> eqs;
    std::optional<unsigned> cap;
    int noetherian_cutoff = -1;  // w-monomial degree kept by the generator, -1 if not generated
    std::vector<std::string> warnings;

    int order() const;  // max equation order, 0 for empty
    std::vector<UnknownSym> symbol_union() const;
    std::vector<UnknownSym> symbol_union_with(const std::vector<LinearForm>& extra) const;
};

struct GenOptions {
    std::uint64_t seed = 0x5EC4E;
    int nw_start = 4;  // initial w-monomial degree for the Noetherian cutoff
};

// The united determining system: tangency of the second prolongation on (S2)
// plus first-order tangency of the relations, expanded in w^(1) monomials.
LinearPDESystem generate_lie_equations(const PDESystemS& S, const GenOptions& opt = {});

// Substitutes a concrete field's coefficients into every equation; the field
// is an infinitesimal symmetry through the cap iff all residuals vanish.
std::vector<Series> residual_of_field(const LinearPDESystem& R, const ConcreteVectorField& X);

// Row-space comparisons at seeded rational points (necessary conditions that
// are exact for constant-coefficient systems).
std::vector<std::vector<Rational>> seeded_points(int nvars, int count, std::uint64_t seed);
bool row_space_contains(const LinearPDESystem& R, const LinearForm& eq, std::uint64_t seed, int npoints = 5);
bool row_space_equal(const LinearPDESystem& A, const LinearPDESystem& B, std::uint64_t seed, int npoints = 5);

// Generic rank over the seeded points (maximum across points).
int generic_rank(const std::vector<LinearForm>& eqs, const std::vector<UnknownSym>& symbols,
                 const std::vector<std::vector<Rational>>& points);

}  // namespace seglie
