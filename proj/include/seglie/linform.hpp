#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "seglie/series.hpp"

namespace seglie {

// A formal derivative symbol d^gamma tau_j of one of the unknown coefficient
// functions. tau is a 0-based slot into the owning system's unknown list
// (theta_1..theta_n, eta^1..eta^m for Lie equations); gamma is a multi-index
// over the base variables z.
struct UnknownSym {
    int tau = 0;
    MultiIndex gamma;
    bool operator<(const UnknownSym& o) const {
        if (gamma.degree() != o.gamma.degree()) return gamma.degree() < o.gamma.degree();
        if (tau != o.tau) return tau < o.tau;
        return gamma < o.gamma;
    }
    bool operator==(const UnknownSym& o) const { return tau == o.tau && gamma == o.gamma; }
    int order() const { return static_cast<int>(gamma.degree()); }
};

// Homogeneous linear combination of UnknownSyms with series coefficients in
// the base variables. This is the value type of every generated determining
// equation and of symbolic prolongation coefficients.
class LinearForm {
  public:
    explicit LinearForm(ContextPtr zctx) : zctx_(std::move(zctx)) {}

    static LinearForm zero(ContextPtr zctx) { return LinearForm(std::move(zctx)); }
    static LinearForm symbol(ContextPtr zctx, int tau, MultiIndex gamma);

    const ContextPtr& zctx() const { return zctx_; }
    const std::map<UnknownSym, Series>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;  // max symbol order present; -1 when zero

    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator-() const;
    LinearForm scaled(const Rational& c) const;
    LinearForm scaled_series(const Series& s) const;
    // Derivation with respect to base variable l: product rule on coefficients
    // plus bumping the symbol's derivative index.
    LinearForm dz(int l) const;

    void add(const UnknownSym& s, const Series& coeff);

    // Replace each symbol by the corresponding derivative of concrete
    // coefficient functions (one series per tau slot).
    Series substitute_unknowns(const std::vector<Series>& unknown_values) const;

    // Coefficient row at a base point, over the given symbol ordering.
    std::vector<Rational> eval_row(const std::vector<UnknownSym>& symbols,
                                   const std::vector<Rational>& point) const;
    // Same, restricted to symbols of exactly the given order; other symbols
    // are ignored by the caller's choice of `symbols`.
    bool operator==(const LinearForm& o) const;

  private:
    ContextPtr zctx_;
    std::map<UnknownSym, Series> terms_;
};

}  // namespace seglie
