#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seglie/series.hpp"

namespace seglie {

// The system class (S0): second-order equations for w = u^1 plus first-order
// relations for v^k = u^k, k >= 2. Right sides are series on the first-order
// graph coordinates (x, u, w^(1)); the chart context names the w-jets u1_j.
class PDESystemS {
  public:
    PDESystemS(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    const ContextPtr& gctx() const { return gctx_; }

    int x_var(int i) const;   // i in 1..n
    int u_var(int k) const;   // k in 1..m
    int w_var(int j) const;   // j in 1..n, the jet u1_j

    void set_F(int i, int j, Series f);       // stored symmetrized, i <= j
    void set_G(int k, int j, Series g);       // k >= 2
    const Series& F(int i, int j) const;
    const Series& G(int k, int j) const;

    // Flat model with relations: F = 0, G^k = A^k w_x (A has m-1 blocks).
    static PDESystemS flat(int n, int m, const std::vector<std::vector<std::vector<Rational>>>& A);

    std::optional<unsigned> min_series_cap() const;

  private:
    int n_, m_;
    ContextPtr gctx_;
    std::map<std::pair<int, int>, Series> F_;  // key (i,j) with i <= j
    std::map<std::pair<int, int>, Series> G_;  // key (k,j), k >= 2
};

// d/dx_i along the solution graphs: D_i followed by w_ij -> F_ij and
// v^k_j -> G^k_j, so expressions stay on (x, u, w^(1)).
Series restricted_total_derivative(const PDESystemS& S, const Series& e, int i);

// Full second-order right sides: F^1 = F and F^k_{ij} = Dhat_j G^k_i.
struct DerivedSystem {
    std::map<std::pair<int, int>, std::map<int, Series>> F2;  // (i<=j) -> k -> series
    const Series& at(int k, int i, int j) const;
};

DerivedSystem derive_full_second_order(const PDESystemS& S);

struct Residual {
    std::string label;
    Series value;
};

struct InvolutivityReport {
    bool involutive = true;
    std::optional<unsigned> checked_cap;  // degree through which vanishing is certified
    std::vector<Residual> residuals;      // every cross-derivative compatibility expression
    std::vector<std::string> nonzero;     // labels of residuals that failed
};

// Frobenius compatibility as cross-derivative conditions:
// Dhat_l F_ij - Dhat_j F_il and Dhat_i G^k_j - Dhat_j G^k_i.
InvolutivityReport involutivity_residuals(const PDESystemS& S);

}  // namespace seglie
