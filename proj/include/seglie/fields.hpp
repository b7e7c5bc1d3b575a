#pragma once

#include <functional>

#include "seglie/jets.hpp"
#include "seglie/linform.hpp"

namespace seglie {

// ---------------------------------------------------------------------------
// Vector fields on the base space z = (x, u).
// ---------------------------------------------------------------------------

// Generic field with opaque coefficient functions theta_1..theta_n,
// eta^1..eta^m; prolongation produces linear forms in their derivatives.
// tau slot convention: theta_j -> j-1, eta^k -> n+k-1.
struct SymbolicVectorField {
    int n = 1, m = 1;
};

// Field with explicit series coefficients. The context must start with
// x1..xn, u1..um; any further variables are inert parameters (used by the
// parametric flow below), never differentiated along the field.
struct ConcreteVectorField {
    int n = 1, m = 1;
    ContextPtr zctx;
    std::vector<Series> theta;  // size n
    std::vector<Series> eta;    // size m

    static ConcreteVectorField zero(int n, int m);
    static ContextPtr base_context(int n, int m);
    ConcreteVectorField scaled(const Rational& c) const;
    ConcreteVectorField operator+(const ConcreteVectorField& o) const;
};

// Applies the field as a derivation to a function of z.
Series apply_field(const ConcreteVectorField& X, const Series& f);

// ---------------------------------------------------------------------------
// Coefficient algebra abstraction: the prolongation recursion is written once
// over an abstract derivation-equipped value type V. V = Series gives the
// concrete path, V = LinearForm the symbolic one; both provide dz().
// ---------------------------------------------------------------------------

inline Series value_dz(const Series& s, int l) { return s.diff(l); }
inline LinearForm value_dz(const LinearForm& f, int l) { return f.dz(l); }
inline Series value_zero(const Series& like) { return Series::zero(like.context(), like.cap()); }
inline LinearForm value_zero(const LinearForm& like) { return LinearForm::zero(like.zctx()); }

template <class V>
struct CoeffAlgebra {
    int n = 1, m = 1;
    ContextPtr zctx;  // x1..xn, u1..um
    std::function<V(int j, const MultiIndex& gamma)> theta;  // j 1-based
    std::function<V(int k, const MultiIndex& gamma)> eta;    // k 1-based
    V zero() const { return value_zero(theta(1, MultiIndex::zero(zctx->size()))); }
};

CoeffAlgebra<LinearForm> symbolic_algebra(const SymbolicVectorField& X);
CoeffAlgebra<Series> concrete_algebra(const ConcreteVectorField& X);

// Polynomial in the fiber variables of a jet chart with V-valued coefficients
// (functions of z). Base slots of the monomials are always zero; the base
// dependence lives inside V.
template <class V>
class JetPoly {
  public:
    JetPoly(JetContextPtr jc, V zero) : jc_(std::move(jc)), zero_(std::move(zero)) {}

    static JetPoly term(JetContextPtr jc, const MultiIndex& mono, V val) {
        JetPoly p(std::move(jc), value_zero(val));
        if (!val.is_zero()) p.terms_.emplace(mono, std::move(val));
        return p;
    }

    const JetContextPtr& jet_context() const { return jc_; }
    const std::map<MultiIndex, V>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const MultiIndex& mono, const V& val) {
        if (val.is_zero()) return;
        auto [it, fresh] = terms_.emplace(mono, val);
        if (!fresh) {
            it->second = it->second + val;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    JetPoly operator+(const JetPoly& o) const {
        JetPoly r = promote(o.jc_);
        JetPoly q = o.promote(jc_);
        for (const auto& [m, v] : q.terms_) r.add(m, v);
        return r;
    }
    JetPoly operator-(const JetPoly& o) const { return *this + (-o); }
    JetPoly operator-() const {
        JetPoly r(jc_, zero_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, -v);
        return r;
    }
    JetPoly scaled(const Rational& c) const {
        JetPoly r(jc_, zero_);
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v.scaled(c));
        return r;
    }
    // Multiply by a single fiber monomial.
    JetPoly times_mono(const MultiIndex& mono) const {
        JetPoly r(jc_, zero_);
        for (const auto& [m, v] : terms_) r.terms_.emplace(m + mono, v);
        return r;
    }

    // Lift to a higher-order jet context (prefix extension).
    JetPoly promote(const JetContextPtr& big) const {
        if (big->vars()->size() == jc_->vars()->size()) return *this;
        const JetContextPtr& target = big->vars()->size() > jc_->vars()->size() ? big : jc_;
        if (target == jc_) return *this;
        JetPoly r(target, zero_);
        for (const auto& [m, v] : terms_) {
            std::vector<unsigned> e = m.exponents();
            e.resize(static_cast<size_t>(target->vars()->size()), 0);
            r.terms_.emplace(MultiIndex(std::move(e)), v);
        }
        return r;
    }

    // Total derivative D_i; result lives one jet order up.
    JetPoly total_derivative(int i, const CoeffAlgebra<V>& alg) const {
        JetContextPtr up = jc_->extended(jc_->order() + 1);
        JetPoly r = JetPoly(up, zero_);
        const int n = alg.n, m = alg.m;
        for (const auto& [mono, v] : terms_) {
            std::vector<unsigned> e = mono.exponents();
            e.resize(static_cast<size_t>(up->vars()->size()), 0);
            MultiIndex lifted{e};
            // d/dx_i acting on the coefficient
            r.add(lifted, value_dz(v, i - 1));
            // u^k_i d/du^k acting on the coefficient
            for (int k = 1; k <= m; ++k) {
                V dv = value_dz(v, n + k - 1);
                if (dv.is_zero()) continue;
                r.add(lifted.bumped(up->fiber_index(k, {i})), dv);
            }
            // chain rule through the fiber variables of the monomial
            for (int var = n; var < jc_->vars()->size(); ++var) {
                unsigned exp = mono[var];
                if (exp == 0) continue;
                FiberVar f = jc_->fiber_of(var);
                std::vector<int> alpha = f.alpha;
                alpha.push_back(i);
                MultiIndex bumped = lifted.lowered(var).bumped(up->fiber_index(f.k, std::move(alpha)));
                r.add(bumped, v.scaled(Rational(exp)));
            }
        }
        return r;
    }

    // Terms whose monomial touches a fiber variable of order >= 2: the
    // Lambda block of a second-prolongation coefficient.
    JetPoly second_jet_part() const {
        JetPoly r(jc_, zero_);
        for (const auto& [mono, v] : terms_) {
            bool high = false;
            for (int var = jc_->n(); var < jc_->vars()->size(); ++var)
                if (mono[var] > 0 && jc_->fiber_of(var).order() >= 2) high = true;
            if (high) r.terms_.emplace(mono, v);
        }
        return r;
    }

    bool operator==(const JetPoly& o) const {
        return jc_->vars()->size() == o.jc_->vars()->size() && terms_ == o.terms_;
    }

  private:
    JetContextPtr jc_;
    V zero_;
    std::map<MultiIndex, V> terms_;
};

// Prolongation coefficient table: one JetPoly per fiber coordinate u^mu_alpha
// with 1 <= |alpha| <= order (all entries promoted to the order-r context).
template <class V>
struct Prolonged {
    int order = 0;
    JetContextPtr jc;
    CoeffAlgebra<V> alg;
    std::map<FiberVar, JetPoly<V>> coeff;

    const JetPoly<V>& at(int mu, std::vector<int> alpha) const {
        auto it = coeff.find(FiberVar{mu, sorted_tuple(std::move(alpha))});
        if (it == coeff.end()) throw std::invalid_argument("prolongation coefficient not present");
        return it->second;
    }
};

// Classical recursion eta^mu_{alpha,i} = D_i eta^mu_alpha - sum_j (D_i theta^j) u^mu_{alpha j}.
template <class V>
Prolonged<V> prolong_recursive(const CoeffAlgebra<V>& alg, int r);

// Closed formulas for the second prolongation, including the Lambda terms.
template <class V>
Prolonged<V> prolong2_closed(const CoeffAlgebra<V>& alg);

Prolonged<LinearForm> prolong_recursive(const SymbolicVectorField& X, int r);
Prolonged<LinearForm> prolong2_closed(const SymbolicVectorField& X);
Prolonged<Series> prolong_recursive(const ConcreteVectorField& X, int r);
Prolonged<Series> prolong2_closed(const ConcreteVectorField& X);

extern template Prolonged<LinearForm> prolong_recursive<LinearForm>(const CoeffAlgebra<LinearForm>&, int);
extern template Prolonged<Series> prolong_recursive<Series>(const CoeffAlgebra<Series>&, int);
extern template Prolonged<LinearForm> prolong2_closed<LinearForm>(const CoeffAlgebra<LinearForm>&);
extern template Prolonged<Series> prolong2_closed<Series>(const CoeffAlgebra<Series>&);

// ---------------------------------------------------------------------------
// Truncated exponential map x* = x + tXx + (t^2/2)X^2x + ...
// ---------------------------------------------------------------------------

// Image series for every variable of X's context, summed through order `cap`.
std::vector<Series> lie_series_flow(const ConcreteVectorField& X, const Rational& t, unsigned cap);

// Same with the flow parameter kept symbolic: `tvar` is a context slot of X
// (beyond the first n+m), so group-law and mapping identities can be checked
// as exact coefficient identities.
std::vector<Series> lie_series_flow_param(const ConcreteVectorField& X, int tvar, unsigned cap);

}  // namespace seglie
