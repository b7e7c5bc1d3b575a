#pragma once

#include <optional>

#include "seglie/polynomial.hpp"

namespace seglie {

// Polynomial plus an optional total-degree cap. A missing cap means the value
// is an exact polynomial, not a truncation of anything; capped arithmetic
// carries the minimum cap of its operands and differentiation lowers the cap
// by one (a truncation at degree d only determines its derivative through
// degree d-1). Exact values never lose information.
class Series {
  public:
    explicit Series(Polynomial p, std::optional<unsigned> cap = std::nullopt);

    static Series zero(ContextPtr ctx, std::optional<unsigned> cap = std::nullopt);
    static Series constant(ContextPtr ctx, const Rational& c, std::optional<unsigned> cap = std::nullopt);
    static Series variable(ContextPtr ctx, int i, std::optional<unsigned> cap = std::nullopt);

    const Polynomial& poly() const { return p_; }
    const ContextPtr& context() const { return p_.context(); }
    const std::optional<unsigned>& cap() const { return cap_; }
    bool is_exact() const { return !cap_.has_value(); }
    bool is_zero() const { return p_.is_zero(); }
    Rational constant_term() const { return p_.constant_term(); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(const Rational& c) const;
    Series diff(int v) const;
    Series truncated(unsigned cap) const;
    Series with_cap(std::optional<unsigned> cap) const;  // metadata only; keeps terms within cap
    Series extended_to(const ContextPtr& bigger) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Identical terms and identical cap.
    bool operator==(const Series& o) const { return cap_ == o.cap_ && p_ == o.p_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    // Terms of total degree <= d, as an exact polynomial.
    Polynomial truncation_poly(unsigned d) const;

  private:
    Polynomial p_;
    std::optional<unsigned> cap_;
    void enforce();
};

std::optional<unsigned> min_cap(const std::optional<unsigned>& a, const std::optional<unsigned>& b);

// Composition: replace variables of `src` by series over `target`. Sound iff
// every replaced variable's image has zero constant term, or `src` is exact
// (finite polynomial); anything else throws rather than silently truncating.
Series series_substitute(const Series& src, const std::map<int, Series>& images, const ContextPtr& target,
                         std::optional<unsigned> out_cap);

// Degree-by-degree Newton recursion for the implicit function theorem.
// `eqs` live over a context whose variables split into parameters and the
// unknowns listed in `unknown_vars`; all equations must vanish at the origin
// and the linear part with respect to the unknowns must be invertible there.
// Returns, for each unknown, a series over `param_ctx` (the context of the
// remaining variables in their original order) with zero constant term,
// satisfying the equations through the cap.
std::vector<Series> implicit_solve(const std::vector<Series>& eqs, const std::vector<int>& unknown_vars,
                                   unsigned cap);

// The parameter context implicit_solve reports its solutions over.
ContextPtr implicit_param_context(const ContextPtr& full, const std::vector<int>& unknown_vars);

}  // namespace seglie
