#include "seglie/fields.hpp"

#include <stdexcept>

namespace seglie {

ContextPtr ConcreteVectorField::base_context(int n, int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int k = 1; k <= m; ++k) names.push_back("u" + std::to_string(k));
    return make_context(std::move(names));
}

ConcreteVectorField ConcreteVectorField::zero(int n, int m) {
    ConcreteVectorField X;
    X.n = n;
    X.m = m;
    X.zctx = base_context(n, m);
    X.theta.assign(static_cast<size_t>(n), Series::zero(X.zctx));
    X.eta.assign(static_cast<size_t>(m), Series::zero(X.zctx));
    return X;
}

ConcreteVectorField ConcreteVectorField::scaled(const Rational& c) const {
    ConcreteVectorField r = *this;
    for (auto& s : r.theta) s = s.scaled(c);
    for (auto& s : r.eta) s = s.scaled(c);
    return r;
}

ConcreteVectorField ConcreteVectorField::operator+(const ConcreteVectorField& o) const {
    if (n != o.n || m != o.m || !same_context(zctx, o.zctx))
        throw std::invalid_argument("field sum: shape mismatch");
    ConcreteVectorField r = *this;
    for (int j = 0; j < n; ++j) r.theta[static_cast<size_t>(j)] = theta[static_cast<size_t>(j)] + o.theta[static_cast<size_t>(j)];
    for (int k = 0; k < m; ++k) r.eta[static_cast<size_t>(k)] = eta[static_cast<size_t>(k)] + o.eta[static_cast<size_t>(k)];
    return r;
}

Series apply_field(const ConcreteVectorField& X, const Series& f) {
    if (!same_context(f.context(), X.zctx)) throw std::invalid_argument("apply_field: context mismatch");
    Series acc = Series::zero(X.zctx, f.cap());
    for (int j = 0; j < X.n; ++j) acc = acc + X.theta[static_cast<size_t>(j)] * f.diff(j);
    for (int k = 0; k < X.m; ++k) acc = acc + X.eta[static_cast<size_t>(k)] * f.diff(X.n + k);
    return acc;
}

CoeffAlgebra<LinearForm> symbolic_algebra(const SymbolicVectorField& X) {
    CoeffAlgebra<LinearForm> alg;
    alg.n = X.n;
    alg.m = X.m;
    alg.zctx = ConcreteVectorField::base_context(X.n, X.m);
    ContextPtr z = alg.zctx;
    int n = X.n;
    alg.theta = [z, n](int j, const MultiIndex& gamma) { return LinearForm::symbol(z, j - 1, gamma); };
    alg.eta = [z, n](int k, const MultiIndex& gamma) { return LinearForm::symbol(z, n + k - 1, gamma); };
    return alg;
}

CoeffAlgebra<Series> concrete_algebra(const ConcreteVectorField& X) {
    if (X.zctx->size() != X.n + X.m)
        throw std::invalid_argument("prolongation needs a bare (x,u) context without parameters");
    CoeffAlgebra<Series> alg;
    alg.n = X.n;
    alg.m = X.m;
    alg.zctx = X.zctx;
    auto derive = [](Series s, const MultiIndex& gamma) {
        for (int l = 0; l < gamma.nvars(); ++l)
            for (unsigned e = 0; e < gamma[l]; ++e) s = s.diff(l);
        return s;
    };
    std::vector<Series> th = X.theta, et = X.eta;
    alg.theta = [th, derive](int j, const MultiIndex& gamma) { return derive(th.at(static_cast<size_t>(j - 1)), gamma); };
    alg.eta = [et, derive](int k, const MultiIndex& gamma) { return derive(et.at(static_cast<size_t>(k - 1)), gamma); };
    return alg;
}

template <class V>
Prolonged<V> prolong_recursive(const CoeffAlgebra<V>& alg, int r) {
    if (r < 1) throw std::invalid_argument("prolongation order must be >= 1");
    const int n = alg.n, m = alg.m;
    Prolonged<V> out;
    out.order = r;
    out.jc = JetContext::make(n, m, r);
    out.alg = alg;

    MultiIndex g0 = MultiIndex::zero(alg.zctx->size());
    JetContextPtr jc0 = JetContext::make(n, m, 0);

    // D_i theta^j, needed at every step (they live on the order-1 chart).
    std::vector<std::vector<JetPoly<V>>> dtheta(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            JetPoly<V> th = JetPoly<V>::term(jc0, MultiIndex::zero(jc0->vars()->size()), alg.theta(j, g0));
            dtheta[static_cast<size_t>(i - 1)].push_back(th.total_derivative(i, alg));
        }

    // Order-by-order recursion over sorted tuples; the last (largest) entry
    // plays the role of the final differentiation index.
    std::map<FiberVar, JetPoly<V>> table;
    for (int mu = 1; mu <= m; ++mu)
        table.emplace(FiberVar{mu, {}},
                      JetPoly<V>::term(jc0, MultiIndex::zero(jc0->vars()->size()), alg.eta(mu, g0)));

    for (int s = 1; s <= r; ++s) {
        JetContextPtr jcs = JetContext::make(n, m, s);
        for (int mu = 1; mu <= m; ++mu) {
            for (const auto& alpha : JetContext::tuples(n, s)) {
                std::vector<int> beta(alpha.begin(), alpha.end() - 1);
                int ir = alpha.back();
                const JetPoly<V>& prev = table.at(FiberVar{mu, beta});
                JetPoly<V> val = prev.total_derivative(ir, alg).promote(jcs);
                for (int j = 1; j <= n; ++j) {
                    std::vector<int> idx = beta;
                    idx.push_back(j);
                    MultiIndex mono =
                        MultiIndex::unit(jcs->vars()->size(), jcs->fiber_index(mu, std::move(idx)));
                    val = val - dtheta[static_cast<size_t>(ir - 1)][static_cast<size_t>(j - 1)]
                                    .promote(jcs)
                                    .times_mono(mono);
                }
                table.emplace(FiberVar{mu, alpha}, std::move(val));
            }
        }
    }

    for (auto& [fv, poly] : table)
        if (fv.order() >= 1) out.coeff.emplace(fv, poly.promote(out.jc));
    return out;
}

namespace {

// Helper assembling the closed formulas; gamma indices are built over z.
template <class V>
class Closed2 {
  public:
    explicit Closed2(const CoeffAlgebra<V>& alg)
        : alg_(alg), jc_(JetContext::make(alg.n, alg.m, 2)), nz_(alg.zctx->size()) {}

    JetContextPtr jc() const { return jc_; }

    // derivative-index helpers over z = (x1..xn, u1..um)
    MultiIndex gx(int i) const { return MultiIndex::unit(nz_, i - 1); }
    MultiIndex gu(int k) const { return MultiIndex::unit(nz_, alg_.n + k - 1); }
    MultiIndex gxx(int i, int j) const { return gx(i) + gx(j); }
    MultiIndex gxu(int i, int k) const { return gx(i) + gu(k); }
    MultiIndex guu(int k, int l) const { return gu(k) + gu(l); }

    V theta(int j, const MultiIndex& g) const { return alg_.theta(j, g); }
    V eta(int k, const MultiIndex& g) const { return alg_.eta(k, g); }

    MultiIndex mono1() const { return MultiIndex::zero(jc_->vars()->size()); }
    MultiIndex fib(int k, std::vector<int> a) const {
        return MultiIndex::unit(jc_->vars()->size(), jc_->fiber_index(k, std::move(a)));
    }

    JetPoly<V> poly() const { return JetPoly<V>(jc_, alg_.zero()); }

    // eta^mu_i = eta_{x_i} + sum_k u^k_i eta_{u^k} - sum_j u^mu_j theta^j_{x_i}
    //           - sum_{j,k} u^k_i u^mu_j theta^j_{u^k}
    JetPoly<V> first(int mu, int i) const {
        const int n = alg_.n, m = alg_.m;
        JetPoly<V> p = poly();
        p.add(mono1(), eta(mu, gx(i)));
        for (int k = 1; k <= m; ++k) p.add(fib(k, {i}), eta(mu, gu(k)));
        for (int j = 1; j <= n; ++j) p.add(fib(mu, {j}), -theta(j, gx(i)));
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= m; ++k) p.add(fib(k, {i}) + fib(mu, {j}), -theta(j, gu(k)));
        return p;
    }

    JetPoly<V> lambda(int mu, int i1, int i2) const {
        const int n = alg_.n, m = alg_.m;
        JetPoly<V> p = poly();
        for (int s = 1; s <= m; ++s) p.add(fib(s, {i2, i1}), eta(mu, gu(s)));
        for (int q = 1; q <= n; ++q) p.add(fib(mu, {i2, q}), -theta(q, gx(i1)));
        for (int j = 1; j <= n; ++j) p.add(fib(mu, {i1, j}), -theta(j, gx(i2)));
        for (int q = 1; q <= n; ++q)
            for (int s = 1; s <= m; ++s) p.add(fib(s, {i2, i1}) + fib(mu, {q}), -theta(q, gu(s)));
        for (int q = 1; q <= n; ++q)
            for (int s = 1; s <= m; ++s) p.add(fib(mu, {i2, q}) + fib(s, {i1}), -theta(q, gu(s)));
        for (int j = 1; j <= n; ++j)
            for (int s = 1; s <= m; ++s) p.add(fib(mu, {i1, j}) + fib(s, {i2}), -theta(j, gu(s)));
        return p;
    }

    // Mixed second coefficient, i1 != i2, transcribed from the displayed
    // formula (verified term-by-term against the recursion in the tests).
    JetPoly<V> second_mixed(int mu, int i1, int i2) const {
        const int n = alg_.n, m = alg_.m;
        JetPoly<V> p = poly();
        p.add(mono1(), eta(mu, gxx(i2, i1)));
        p.add(fib(mu, {i1}), eta(mu, gxu(i2, mu)) - theta(i1, gxx(i2, i1)));
        p.add(fib(mu, {i2}), eta(mu, gxu(i1, mu)) - theta(i2, gxx(i2, i1)));
        for (int k = 1; k <= m; ++k)
            if (k != mu) p.add(fib(k, {i1}), eta(mu, gxu(i2, k)));
        for (int k = 1; k <= m; ++k)
            if (k != mu) p.add(fib(k, {i2}), eta(mu, gxu(i1, k)));
        for (int k = 1; k <= n; ++k)
            if (k != i1 && k != i2) p.add(fib(mu, {k}), -theta(k, gxx(i2, i1)));
        for (int k = 1; k <= m; ++k)
            for (int j = 1; j <= n; ++j)
                if (j != i2) p.add(fib(k, {i1}) + fib(mu, {j}), -theta(j, gxu(i2, k)));
        for (int k = 1; k <= m; ++k)
            for (int s = 1; s <= n; ++s)
                if (s != i1) p.add(fib(k, {i2}) + fib(mu, {s}), -theta(s, gxu(i1, k)));
        for (int rr = 1; rr <= m; ++rr)
            for (int pp = 1; pp <= m; ++pp)
                if (rr != mu && pp != mu) p.add(fib(rr, {i2}) + fib(pp, {i1}), eta(mu, guu(rr, pp)));
        for (int t = 1; t <= m; ++t)
            if (t != mu)
                p.add(fib(t, {i1}) + fib(mu, {i2}), eta(mu, guu(mu, t)) - theta(i2, gxu(i2, t)));
        for (int q = 1; q <= m; ++q)
            if (q != mu)
                p.add(fib(q, {i2}) + fib(mu, {i1}), eta(mu, guu(q, mu)) - theta(i1, gxu(i1, q)));
        p.add(fib(mu, {i1}) + fib(mu, {i2}),
              eta(mu, guu(mu, mu)) - theta(i2, gxu(i2, mu)) - theta(i1, gxu(i1, mu)));
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                for (int s = 1; s <= n; ++s)
                    p.add(fib(a, {i2}) + fib(b, {i1}) + fib(mu, {s}), -theta(s, guu(a, b)));
        return p + lambda(mu, i1, i2);
    }

    JetPoly<V> second_diag(int mu, int i) const {
        const int n = alg_.n, m = alg_.m;
        JetPoly<V> p = poly();
        p.add(mono1(), eta(mu, gxx(i, i)));
        p.add(fib(mu, {i}), eta(mu, gxu(i, mu)).scaled(2) - theta(i, gxx(i, i)));
        for (int k = 1; k <= m; ++k)
            if (k != mu) p.add(fib(k, {i}), eta(mu, gxu(i, k)).scaled(2));
        for (int k = 1; k <= n; ++k)
            if (k != i) p.add(fib(mu, {k}), -theta(k, gxx(i, i)));
        for (int k = 1; k <= m; ++k)
            for (int j = 1; j <= n; ++j)
                if (j != i) p.add(fib(k, {i}) + fib(mu, {j}), -theta(j, gxu(i, k)).scaled(2));
        for (int rr = 1; rr <= m; ++rr)
            for (int pp = 1; pp <= m; ++pp)
                if (rr != mu && pp != mu) p.add(fib(rr, {i}) + fib(pp, {i}), eta(mu, guu(rr, pp)));
        for (int t = 1; t <= m; ++t)
            if (t != mu) p.add(fib(t, {i}) + fib(mu, {i}), eta(mu, guu(mu, t)) - theta(i, gxu(i, t)));
        for (int q = 1; q <= m; ++q)
            if (q != mu) p.add(fib(q, {i}) + fib(mu, {i}), eta(mu, guu(q, mu)) - theta(i, gxu(i, q)));
        p.add(fib(mu, {i}) + fib(mu, {i}), eta(mu, guu(mu, mu)) - theta(i, gxu(i, mu)).scaled(2));
        for (int a = 1; a <= m; ++a)
            for (int b = 1; b <= m; ++b)
                for (int s = 1; s <= n; ++s)
                    p.add(fib(a, {i}) + fib(b, {i}) + fib(mu, {s}), -theta(s, guu(a, b)));
        return p + lambda(mu, i, i);
    }

  private:
    const CoeffAlgebra<V>& alg_;
    JetContextPtr jc_;
    int nz_;
};

}  // namespace

template <class V>
Prolonged<V> prolong2_closed(const CoeffAlgebra<V>& alg) {
    Closed2<V> c(alg);
    Prolonged<V> out;
    out.order = 2;
    out.jc = c.jc();
    out.alg = alg;
    for (int mu = 1; mu <= alg.m; ++mu) {
        for (int i = 1; i <= alg.n; ++i) out.coeff.emplace(FiberVar{mu, {i}}, c.first(mu, i).promote(out.jc));
        for (int i1 = 1; i1 <= alg.n; ++i1)
            for (int i2 = i1; i2 <= alg.n; ++i2) {
                JetPoly<V> v = (i1 == i2) ? c.second_diag(mu, i1) : c.second_mixed(mu, i1, i2);
                out.coeff.emplace(FiberVar{mu, {i1, i2}}, v.promote(out.jc));
            }
    }
    return out;
}

template Prolonged<LinearForm> prolong_recursive<LinearForm>(const CoeffAlgebra<LinearForm>&, int);
template Prolonged<Series> prolong_recursive<Series>(const CoeffAlgebra<Series>&, int);
template Prolonged<LinearForm> prolong2_closed<LinearForm>(const CoeffAlgebra<LinearForm>&);
template Prolonged<Series> prolong2_closed<Series>(const CoeffAlgebra<Series>&);

Prolonged<LinearForm> prolong_recursive(const SymbolicVectorField& X, int r) {
    return prolong_recursive(symbolic_algebra(X), r);
}
Prolonged<LinearForm> prolong2_closed(const SymbolicVectorField& X) {
    return prolong2_closed(symbolic_algebra(X));
}
Prolonged<Series> prolong_recursive(const ConcreteVectorField& X, int r) {
    return prolong_recursive(concrete_algebra(X), r);
}
Prolonged<Series> prolong2_closed(const ConcreteVectorField& X) {
    return prolong2_closed(concrete_algebra(X));
}

static std::vector<Series> flow_impl(const ConcreteVectorField& X, const Series& tfactor, unsigned cap) {
    for (const auto& s : X.theta)
        if (!s.is_exact()) throw std::invalid_argument("lie_series_flow needs polynomial coefficients");
    for (const auto& s : X.eta)
        if (!s.is_exact()) throw std::invalid_argument("lie_series_flow needs polynomial coefficients");
    // Summation order is bounded by the cap; all arithmetic is exact and the
    // result is truncated once at the end.
    std::vector<Series> out;
    for (int c = 0; c < X.zctx->size(); ++c) {
        Series term = Series::variable(X.zctx, c);
        Series acc = term;
        Rational factorial(1);
        Series tpow = Series::constant(X.zctx, 1);
        for (unsigned k = 1; k <= cap; ++k) {
            term = apply_field(X, term);
            factorial *= Rational(k);
            tpow = tpow * tfactor;
            acc = acc + (term * tpow).scaled(Rational(1) / factorial);
        }
        out.push_back(acc.truncated(cap));
    }
    return out;
}

std::vector<Series> lie_series_flow(const ConcreteVectorField& X, const Rational& t, unsigned cap) {
    return flow_impl(X, Series::constant(X.zctx, t), cap);
}

std::vector<Series> lie_series_flow_param(const ConcreteVectorField& X, int tvar, unsigned cap) {
    if (tvar < X.n + X.m || tvar >= X.zctx->size())
        throw std::invalid_argument("flow parameter must be an extra context slot");
    return flow_impl(X, Series::variable(X.zctx, tvar), cap);
}

}  // namespace seglie
