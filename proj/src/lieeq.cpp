#include "seglie/lieeq.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "seglie/matrix.hpp"

namespace seglie {

int LinearPDESystem::order() const {
    int o = 0;
    for (const auto& e : eqs) o = std::max(o, e.order());
    return o;
}

std::vector<UnknownSym> LinearPDESystem::symbol_union() const { return symbol_union_with({}); }

std::vector<UnknownSym> LinearPDESystem::symbol_union_with(const std::vector<LinearForm>& extra) const {
    std::set<UnknownSym> syms;
    for (const auto& e : eqs)
        for (const auto& [s, c] : e.terms()) syms.insert(s);
    for (const auto& e : extra)
        for (const auto& [s, c] : e.terms()) syms.insert(s);
    return std::vector<UnknownSym>(syms.begin(), syms.end());
}

std::vector<std::vector<Rational>> seeded_points(int nvars, int count, std::uint64_t seed) {
    // Deterministic across platforms: raw engine output only, no distributions.
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> pts;
    for (int p = 0; p < count; ++p) {
        std::vector<Rational> pt;
        for (int v = 0; v < nvars; ++v) {
            long num = static_cast<long>(rng() % 13) - 6;  // -6..6
            long den = static_cast<long>(rng() % 3) + 1;   // 1..3
            pt.push_back(Rational(num, den));
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

int generic_rank(const std::vector<LinearForm>& eqs, const std::vector<UnknownSym>& symbols,
                 const std::vector<std::vector<Rational>>& points) {
    int best = 0;
    for (const auto& pt : points) {
        RowSpace space(static_cast<int>(symbols.size()));
        for (const auto& e : eqs) space.insert(e.eval_row(symbols, pt));
        best = std::max(best, space.rank());
    }
    return best;
}

bool row_space_contains(const LinearPDESystem& R, const LinearForm& eq, std::uint64_t seed, int npoints) {
    auto symbols = R.symbol_union_with({eq});
    auto pts = seeded_points(R.zctx->size(), npoints, seed);
    for (const auto& pt : pts) {
        RowSpace space(static_cast<int>(symbols.size()));
        for (const auto& e : R.eqs) space.insert(e.eval_row(symbols, pt));
        if (!space.contains(eq.eval_row(symbols, pt))) return false;
    }
    return true;
}

bool row_space_equal(const LinearPDESystem& A, const LinearPDESystem& B, std::uint64_t seed, int npoints) {
    if (!same_context(A.zctx, B.zctx)) return false;
    auto symbols = A.symbol_union_with(B.eqs);
    auto pts = seeded_points(A.zctx->size(), npoints, seed);
    for (const auto& pt : pts) {
        RowSpace sa(static_cast<int>(symbols.size()));
        for (const auto& e : A.eqs) sa.insert(e.eval_row(symbols, pt));
        RowSpace sb(static_cast<int>(symbols.size()));
        for (const auto& e : B.eqs) sb.insert(e.eval_row(symbols, pt));
        if (sa.rank() != sb.rank()) return false;
        for (const auto& row : sb.canonical_rows())
            if (!sa.contains(row)) return false;
    }
    return true;
}

namespace {

// Linear form whose coefficients are series on the graph coordinates
// (x, u, w^(1)); symbol derivative indices stay over z = (x, u).
struct GammaLin {
    ContextPtr gctx;
    std::map<UnknownSym, Series> terms;

    explicit GammaLin(ContextPtr g) : gctx(std::move(g)) {}
    void add(const UnknownSym& s, const Series& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(s, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    GammaLin operator-(const GammaLin& o) const {
        GammaLin r = *this;
        for (const auto& [s, c] : o.terms) r.add(s, -c);
        return r;
    }
    GammaLin scaled_series(const Series& s) const {
        GammaLin r(gctx);
        for (const auto& [sym, c] : terms) r.add(sym, c * s);
        return r;
    }
};

// Substitution of the jet-fiber monomials by their values on (S2):
// u^1_p -> w_p, u^k_p -> G^k_p, u^k_{ij} -> F^k_{ij}.
class GammaCollapse {
  public:
    GammaCollapse(const PDESystemS& S, const DerivedSystem& D, const JetContextPtr& jc)
        : S_(S), jc_(jc) {
        const ContextPtr& g = S.gctx();
        for (int var = jc->n(); var < jc->vars()->size(); ++var) {
            FiberVar f = jc->fiber_of(var);
            Series img = Series::zero(g);
            if (f.order() == 0) {
                img = Series::variable(g, S.u_var(f.k));
            } else if (f.order() == 1) {
                img = (f.k == 1) ? Series::variable(g, S.w_var(f.alpha[0])) : S.G(f.k, f.alpha[0]);
            } else if (f.order() == 2) {
                img = D.at(f.k, f.alpha[0], f.alpha[1]);
            } else {
                throw std::logic_error("collapse beyond order 2");
            }
            images_.emplace(var, std::move(img));
        }
    }

    Series mono_value(const MultiIndex& mono) const {
        Series acc = Series::constant(S_.gctx(), 1);
        for (int var = 0; var < mono.nvars(); ++var) {
            if (mono[var] == 0) continue;
            const Series& img = var < jc_->n()
                                    ? x_image(var)
                                    : images_.at(var);
            for (unsigned e = 0; e < mono[var]; ++e) acc = acc * img;
        }
        return acc;
    }

    GammaLin collapse(const JetPoly<LinearForm>& p) const {
        GammaLin out(S_.gctx());
        for (const auto& [mono, form] : p.terms()) {
            Series factor = mono_value(mono);
            if (factor.is_zero()) continue;
            for (const auto& [sym, coeff] : form.terms())
                out.add(sym, coeff.extended_to(S_.gctx()) * factor);
        }
        return out;
    }

  private:
    const PDESystemS& S_;
    JetContextPtr jc_;
    std::map<int, Series> images_;
    Series x_image(int var) const { return Series::variable(S_.gctx(), var); }
};

}  // namespace

LinearPDESystem generate_lie_equations(const PDESystemS& S, const GenOptions& opt) {
    const int n = S.n(), m = S.m();
    LinearPDESystem out;
    out.zctx = ConcreteVectorField::base_context(n, m);
    out.unknown_count = n + m;
    out.cap = S.min_series_cap();

    InvolutivityReport inv = involutivity_residuals(S);
    if (!inv.involutive)
        out.warnings.push_back("input system is not involutive to cap; generated equations lack the symmetry "
                               "interpretation");

    DerivedSystem D = derive_full_second_order(S);
    SymbolicVectorField X{n, m};
    Prolonged<LinearForm> P = prolong_recursive(X, 2);
    GammaCollapse collapse(S, D, P.jc);

    const ContextPtr& g = S.gctx();
    const ContextPtr& z = out.zctx;
    MultiIndex g0 = MultiIndex::zero(z->size());

    // Restrictions of the first-prolongation coefficients eta^1_p to (S2).
    std::vector<GammaLin> eta1(static_cast<size_t>(n), GammaLin(g));
    for (int p = 1; p <= n; ++p) eta1[static_cast<size_t>(p - 1)] = collapse.collapse(P.at(1, {p}));

    auto x1_applied = [&](const Series& f) {
        // X^(1) f for f = f(x, u, w^(1)), as a GammaLin.
        GammaLin acc(g);
        for (int j = 1; j <= n; ++j) {
            Series part = f.diff(S.x_var(j));
            if (!part.is_zero()) acc.add(UnknownSym{j - 1, g0}, part);
        }
        for (int k = 1; k <= m; ++k) {
            Series part = f.diff(S.u_var(k));
            if (!part.is_zero()) acc.add(UnknownSym{n + k - 1, g0}, part);
        }
        for (int p = 1; p <= n; ++p) {
            Series part = f.diff(S.w_var(p));
            if (part.is_zero()) continue;
            GammaLin scaled = eta1[static_cast<size_t>(p - 1)].scaled_series(part);
            for (const auto& [s, c] : scaled.terms) acc.add(s, c);
        }
        return acc;
    };

    // Tangency conditions on (S2), prior to w-monomial collection.
    std::vector<GammaLin> raw;
    for (int mu = 1; mu <= m; ++mu)
        for (int i1 = 1; i1 <= n; ++i1)
            for (int i2 = i1; i2 <= n; ++i2)
                raw.push_back(collapse.collapse(P.at(mu, {i1, i2})) - x1_applied(D.at(mu, i1, i2)));
    for (int mu = 2; mu <= m; ++mu)
        for (int i = 1; i <= n; ++i) raw.push_back(collapse.collapse(P.at(mu, {i})) - x1_applied(S.G(mu, i)));

    // Split each condition into coefficients of w^(1)-monomials. Coefficient
    // series sound through degree C give w^beta coefficients sound through
    // C - |beta| in z.
    struct Candidate {
        unsigned wdeg;
        LinearForm eq;
    };
    std::vector<Candidate> candidates;
    unsigned max_beta = 0;
    for (const auto& cond : raw) {
        std::map<MultiIndex, LinearForm> by_beta;  // multi-index over the n w-slots
        for (const auto& [sym, coeff] : cond.terms) {
            for (const auto& [mono, val] : coeff.poly().terms()) {
                std::vector<unsigned> ze(static_cast<size_t>(z->size()), 0);
                std::vector<unsigned> we(static_cast<size_t>(n), 0);
                for (int v = 0; v < z->size(); ++v) ze[static_cast<size_t>(v)] = mono[v];
                for (int j = 0; j < n; ++j) we[static_cast<size_t>(j)] = mono[z->size() + j];
                MultiIndex beta{we};
                auto [it, fresh] = by_beta.emplace(beta, LinearForm::zero(z));
                std::optional<unsigned> zcap;
                if (coeff.cap()) zcap = *coeff.cap() >= beta.degree() ? *coeff.cap() - beta.degree() : 0u;
                it->second.add(sym, Series(Polynomial::monomial(z, MultiIndex{ze}, val), zcap));
            }
        }
        for (auto& [beta, form] : by_beta) {
            if (form.is_zero()) continue;
            max_beta = std::max(max_beta, beta.degree());
            candidates.push_back(Candidate{beta.degree(), form});
        }
    }

    // Noetherian cutoff: keep w-degrees <= N, raising N from nw_start until
    // the generic row rank is unchanged by the next level.
    std::vector<UnknownSym> symbols;
    {
        std::set<UnknownSym> syms;
        for (const auto& c : candidates)
            for (const auto& [s, v] : c.eq.terms()) syms.insert(s);
        symbols.assign(syms.begin(), syms.end());
    }
    auto pts = seeded_points(z->size(), 5, opt.seed);
    auto rank_upto = [&](unsigned N) {
        std::vector<LinearForm> eqs;
        for (const auto& c : candidates)
            if (c.wdeg <= N) eqs.push_back(c.eq);
        return generic_rank(eqs, symbols, pts);
    };
    unsigned N = static_cast<unsigned>(opt.nw_start);
    if (N < max_beta) {
        int r = rank_upto(N);
        while (N < max_beta) {
            int r2 = rank_upto(N + 1);
            if (r2 == r) break;
            r = r2;
            ++N;
        }
    }
    out.noetherian_cutoff = static_cast<int>(N);

    for (auto& c : candidates)
        if (c.wdeg <= N) out.eqs.push_back(std::move(c.eq));
    return out;
}

std::vector<Series> residual_of_field(const LinearPDESystem& R, const ConcreteVectorField& X) {
    if (X.n + X.m != R.unknown_count || X.zctx->size() != R.zctx->size())
        throw std::invalid_argument("residual_of_field: field shape mismatch");
    std::vector<Series> values;
    for (int j = 0; j < X.n; ++j) values.push_back(X.theta[static_cast<size_t>(j)]);
    for (int k = 0; k < X.m; ++k) values.push_back(X.eta[static_cast<size_t>(k)]);
    std::vector<Series> res;
    res.reserve(R.eqs.size());
    for (const auto& e : R.eqs) res.push_back(e.substitute_unknowns(values));
    return res;
}

}  // namespace seglie
