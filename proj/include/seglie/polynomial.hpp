#pragma once

#include <map>
#include <vector>

#include "seglie/context.hpp"
#include "seglie/rational.hpp"

namespace seglie {

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in graded-lex order; zero coefficients are never stored.
class Polynomial {
  public:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(ContextPtr ctx, std::map<MultiIndex, Rational> terms);

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Rational& c);
    static Polynomial variable(ContextPtr ctx, int i);
    static Polynomial monomial(ContextPtr ctx, const MultiIndex& m, const Rational& c);

    const ContextPtr& context() const { return ctx_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const MultiIndex& m) const;
    unsigned degree() const;  // 0 for the zero polynomial
    unsigned low_degree() const;  // smallest term degree; 0 for zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact partial derivative with respect to variable index v.
    Polynomial diff(int v) const;

    // Exact evaluation at a full point.
    Rational eval(const std::vector<Rational>& point) const;

    // Substitute variables by polynomials (possibly over a different context).
    // Entries absent from `images` keep the variable, which then must exist in
    // the target context under the same name.
    Polynomial substitute(const std::map<int, Polynomial>& images, const ContextPtr& target) const;

    // Reinterpret over a context that this one is a prefix of.
    Polynomial extended_to(const ContextPtr& bigger) const;

    void add_term(const MultiIndex& m, const Rational& c);

  private:
    ContextPtr ctx_;
    std::map<MultiIndex, Rational> terms_;
};

void require_same_context(const Polynomial& a, const Polynomial& b, const char* what);

}  // namespace seglie
