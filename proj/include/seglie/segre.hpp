#pragma once

#include "seglie/matrix.hpp"
#include "seglie/systems.hpp"

namespace seglie {

// Holomorphized defining data of a Levi-nondegenerate submanifold at a base
// point: w_k + omega_k = <L^k(x), zeta> + R^k(x, zeta, omega) with R^k free of
// terms of total degree <= 2. Remainders live over (x1..xn, z1..zn, o1..om),
// z for zeta and o for omega.
struct SegreDefining {
    int n = 1, m = 1;
    std::vector<ExactMatrix> L;  // m hermitian-part matrices, n x n
    std::vector<Series> R;       // m remainder series over remainder_context(n, m)

    static ContextPtr remainder_context(int n, int m);
    void validate() const;  // L1 invertible, every R^k of lowest degree >= 3
};

// Exact (cap-free) Segre system of the quadric <L^k>: u^1_{x_ix_j} = 0 with
// relations u^k_x = A^k u^1_x obtained by linear elimination of zeta.
PDESystemS quadric_system(int n, int m, const std::vector<ExactMatrix>& L);

// The relation matrices A^k of the quadric model.
std::vector<ExactMatrix> quadric_relations(int n, int m, const std::vector<ExactMatrix>& L);

// Segre-family PDE system of the full defining data: eliminates (zeta, omega)
// by the implicit function theorem and substitutes into the derived first and
// second order equations. `cap` bounds the retained w^(1)-degree; series are
// computed through total degree 2*cap so every monomial with jet degree and
// base degree at most cap is exact.
PDESystemS derive_segre_system(const SegreDefining& D, unsigned cap);

// z = eps z', w = eps^2 w' rescaling: R^k -> eps^{-2} R^k(eps x, eps zeta,
// eps^2 omega); at eps = 0 only the quadric part survives.
SegreDefining scale_deform(const SegreDefining& D, const Rational& eps);

// True iff Id, A^2, ..., A^m are linearly independent over the rationals.
bool flat_nondegenerate_check(int n, const std::vector<ExactMatrix>& A_rest);

// Cartan majoration line for reports.
std::string aut_bound_line(long complex_dim_bound);

}  // namespace seglie
