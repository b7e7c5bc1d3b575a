#include "seglie/lintype.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace seglie {

std::vector<MultiIndex> degree_multiindices(int nvars, int degree) {
    // Sorted-tuple order: enumerate non-decreasing tuples over 1..nvars and
    // convert; for degree 2 over (x, u) this yields xx, xu, uu.
    std::vector<MultiIndex> out;
    for (const auto& t : JetContext::tuples(nvars, degree)) {
        std::vector<unsigned> e(static_cast<size_t>(nvars), 0);
        for (int v : t) e[static_cast<size_t>(v - 1)] += 1;
        out.push_back(MultiIndex{e});
    }
    return out;
}

std::vector<MultiIndex> multiindices_up_to(int nvars, int degree) {
    std::vector<MultiIndex> out;
    for (int d = 0; d <= degree; ++d) {
        auto block = degree_multiindices(nvars, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

static LinearPDESystem with_extra(const LinearPDESystem& R, std::vector<LinearForm> extra) {
    LinearPDESystem out = R;
    for (auto& e : extra)
        if (!e.is_zero()) out.eqs.push_back(std::move(e));
    return out;
}

static std::vector<LinearForm> derivatives_up_to(const LinearForm& e, int r, const ContextPtr& z) {
    // All distinct d^beta e with 1 <= |beta| <= r, enumerated without
    // repetition by walking non-decreasing derivative tuples.
    std::vector<LinearForm> out;
    for (int d = 1; d <= r; ++d)
        for (const auto& t : JetContext::tuples(z->size(), d)) {
            LinearForm cur = e;
            for (int v : t) cur = cur.dz(v - 1);
            out.push_back(std::move(cur));
        }
    return out;
}

LinearPDESystem complete(const LinearPDESystem& R, int target_order) {
    int q = target_order < 0 ? R.order() : target_order;
    std::vector<LinearForm> extra;
    for (const auto& e : R.eqs) {
        int s = e.order();
        if (s >= q || e.is_zero()) continue;
        auto lifted = derivatives_up_to(e, q - s, R.zctx);
        extra.insert(extra.end(), lifted.begin(), lifted.end());
    }
    return with_extra(R, std::move(extra));
}

LinearPDESystem prolong_linear(const LinearPDESystem& R, int r) {
    if (r < 0) throw std::invalid_argument("prolongation steps must be >= 0");
    if (r == 0) return R;
    std::vector<LinearForm> extra;
    for (const auto& e : R.eqs) {
        if (e.is_zero()) continue;
        auto lifted = derivatives_up_to(e, r, R.zctx);
        extra.insert(extra.end(), lifted.begin(), lifted.end());
    }
    return with_extra(R, std::move(extra));
}

SymbolSpace symbol_at(const LinearPDESystem& R, const std::vector<Rational>& y0, int s) {
    if (static_cast<int>(y0.size()) != R.zctx->size())
        throw std::invalid_argument("symbol_at: base point arity mismatch");
    SymbolSpace out;
    out.order = s;
    auto alphas = degree_multiindices(R.zctx->size(), s);
    for (int tau = 0; tau < R.unknown_count; ++tau)
        for (const auto& a : alphas) out.coords.emplace_back(tau, a);

    std::vector<std::vector<Rational>> rows;
    for (const auto& e : R.eqs) {
        if (e.order() > s || e.is_zero()) continue;
        std::vector<Rational> row(out.coords.size(), Rational(0));
        bool nonzero = false;
        for (const auto& [sym, coeff] : e.terms()) {
            if (sym.order() != s) continue;
            for (size_t c = 0; c < out.coords.size(); ++c)
                if (out.coords[c].first == sym.tau && out.coords[c].second == sym.gamma) {
                    row[c] = coeff.eval(y0);
                    if (row[c] != 0) nonzero = true;
                }
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    ExactMatrix mtx(static_cast<int>(rows.size()), static_cast<int>(out.coords.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) mtx.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    RrefResult rr = rref_rank_nullspace(mtx);
    out.rank = rr.rank;
    out.basis = std::move(rr.nullspace);
    return out;
}

TypeReport finite_type(const LinearPDESystem& R, const std::vector<Rational>& y0, int rmax) {
    if (rmax < 1) throw std::invalid_argument("finite_type: rmax must be >= 1");
    TypeReport rep;
    rep.rmax = rmax;
    LinearPDESystem Rc = complete(R);
    rep.order_q = Rc.order();
    for (int r = 0; r <= rmax; ++r) {
        LinearPDESystem P = prolong_linear(Rc, r);
        SymbolSpace G = symbol_at(P, y0, rep.order_q + r);
        rep.symbol_dims.push_back(G.dim());
        if (G.dim() == 0) {
            rep.decided = true;
            rep.finite = true;
            rep.type = r;
            break;
        }
    }
    return rep;
}

DimBoundReport dim_bound(const LinearPDESystem& R, const std::vector<Rational>& y0, int rmax) {
    DimBoundReport rep;
    rep.type = finite_type(R, y0, rmax);
    if (!rep.type.decided)
        throw std::runtime_error("dim_bound: finite type not decided within rmax=" + std::to_string(rmax));

    const int q = rep.type.order_q;
    const int t = rep.type.type;
    const int d = q + t - 1;
    const int V = R.zctx->size();

    auto jets = multiindices_up_to(V, d);
    rep.jet_count = static_cast<long>(R.unknown_count) * static_cast<long>(jets.size());

    std::vector<UnknownSym> columns;
    for (const auto& g : jets)
        for (int tau = 0; tau < R.unknown_count; ++tau) columns.push_back(UnknownSym{tau, g});
    std::sort(columns.begin(), columns.end());

    LinearPDESystem full = prolong_linear(complete(R), t);
    RowSpace space(static_cast<int>(columns.size()));
    for (const auto& e : full.eqs) {
        if (e.is_zero() || e.order() > d) continue;
        space.insert(e.eval_row(columns, y0));
    }
    rep.algebraic_rank = space.rank();
    rep.parametric_count = rep.jet_count - rep.algebraic_rank;
    rep.bound = rep.parametric_count;

    // Free (parametric) jet coordinates: complement of the pivot columns of
    // the reduced system.
    RrefResult rr;
    {
        auto rows = space.canonical_rows();
        ExactMatrix mtx(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < rows[r].size(); ++c) mtx.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        rr = rref_rank_nullspace(mtx);
    }
    std::vector<bool> pivot(columns.size(), false);
    for (int c : rr.pivot_cols) pivot[static_cast<size_t>(c)] = true;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (pivot[c]) continue;
        std::string label = "t" + std::to_string(columns[c].tau + 1);
        if (columns[c].gamma.degree() > 0) {
            label += "_";
            for (int v = 0; v < V; ++v)
                for (unsigned e = 0; e < columns[c].gamma[v]; ++e) label += std::to_string(v + 1);
        }
        rep.parametric_labels.push_back(std::move(label));
    }
    return rep;
}

PolySolutions polynomial_solutions(const LinearPDESystem& R, int d_max) {
    if (d_max < 0) throw std::invalid_argument("polynomial_solutions: degree must be >= 0");
    PolySolutions out;
    out.degree = d_max;
    const int V = R.zctx->size();
    auto deltas = multiindices_up_to(V, d_max);
    const size_t cols = deltas.size() * static_cast<size_t>(R.unknown_count);

    // Column c = (tau, delta): ansatz monomial z^delta in slot tau.
    auto column = [&](size_t c) {
        return std::make_pair(static_cast<int>(c / deltas.size()), deltas[c % deltas.size()]);
    };

    // Residual of each equation against each ansatz column. Every z-monomial
    // of an equation's residual is one exact constraint row; capped
    // coefficients constrain only their sound degree region.
    RowSpace space(static_cast<int>(cols));
    for (const auto& e : R.eqs) {
        if (e.is_zero()) continue;
        std::map<MultiIndex, std::vector<Rational>> local;  // z-monomial -> row
        for (size_t c = 0; c < cols; ++c) {
            auto [tau, delta] = column(c);
            for (const auto& [sym, coeff] : e.terms()) {
                if (sym.tau != tau) continue;
                // d^gamma z^delta
                Polynomial dmono = Polynomial::monomial(R.zctx, delta, Rational(1));
                bool dead = false;
                for (int v = 0; v < V && !dead; ++v)
                    for (unsigned k = 0; k < sym.gamma[v] && !dead; ++k) {
                        dmono = dmono.diff(v);
                        dead = dmono.is_zero();
                    }
                if (dead) continue;
                Polynomial contrib = coeff.poly() * dmono;
                unsigned limit = coeff.cap() ? *coeff.cap() : std::numeric_limits<unsigned>::max();
                for (const auto& [mono, val] : contrib.terms()) {
                    if (mono.degree() > limit) continue;
                    auto [it, fresh] = local.emplace(mono, std::vector<Rational>(cols, Rational(0)));
                    it->second[c] += val;
                }
            }
        }
        for (auto& [mono, row] : local) space.insert(std::move(row));
    }
    auto basis_rows = space.canonical_rows();
    ExactMatrix mtx(static_cast<int>(basis_rows.size()), static_cast<int>(cols));
    for (size_t r = 0; r < basis_rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) mtx.at(static_cast<int>(r), static_cast<int>(c)) = basis_rows[r][c];
    RrefResult rr = rref_rank_nullspace(mtx);
    out.dimension = static_cast<long>(cols) - rr.rank;
    for (const auto& vec : rr.nullspace) {
        std::vector<Series> tuple;
        for (int tau = 0; tau < R.unknown_count; ++tau) {
            Polynomial p(R.zctx);
            for (size_t d = 0; d < deltas.size(); ++d) {
                const Rational& v = vec[static_cast<size_t>(tau) * deltas.size() + d];
                if (v != 0) p.add_term(deltas[d], v);
            }
            tuple.push_back(Series(std::move(p)));
        }
        out.basis.push_back(std::move(tuple));
    }
    return out;
}

SymbolSpace constant_coeff_Vs(const LinearPDESystem& R, int s) {
    const int V = R.zctx->size();
    for (const auto& e : R.eqs) {
        if (e.is_zero()) continue;
        int q = e.order();
        for (const auto& [sym, coeff] : e.terms()) {
            if (sym.order() != q)
                throw std::invalid_argument("constant_coeff_Vs: equation mixes derivative orders");
            if (!coeff.poly().is_constant())
                throw std::invalid_argument("constant_coeff_Vs: non-constant coefficient");
        }
    }
    SymbolSpace out;
    out.order = s;
    auto alphas = degree_multiindices(V, s);
    std::map<std::pair<int, MultiIndex>, size_t> pos;
    for (int tau = 0; tau < R.unknown_count; ++tau)
        for (const auto& a : alphas) {
            pos.emplace(std::make_pair(tau, a), out.coords.size());
            out.coords.emplace_back(tau, a);
        }

    std::vector<std::vector<Rational>> rows;
    for (const auto& e : R.eqs) {
        if (e.is_zero()) continue;
        int q = e.order();
        if (q > s) continue;
        for (const auto& beta : degree_multiindices(V, s - q)) {
            std::vector<Rational> row(out.coords.size(), Rational(0));
            bool nonzero = false;
            for (const auto& [sym, coeff] : e.terms()) {
                Rational v = coeff.poly().constant_term();
                if (v == 0) continue;
                row[pos.at(std::make_pair(sym.tau, sym.gamma + beta))] += v;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    ExactMatrix mtx(static_cast<int>(rows.size()), static_cast<int>(out.coords.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) mtx.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    RrefResult rr = rref_rank_nullspace(mtx);
    out.rank = rr.rank;
    out.basis = std::move(rr.nullspace);
    return out;
}

CharacteristicReport characteristic_matrix(const LinearPDESystem& R, const std::vector<Rational>& y0,
                                           const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != R.zctx->size())
        throw std::invalid_argument("characteristic_matrix: covector arity mismatch");
    const int q = R.order();
    CharacteristicReport rep;
    rep.sigma = ExactMatrix(static_cast<int>(R.eqs.size()), R.unknown_count);
    for (size_t r = 0; r < R.eqs.size(); ++r) {
        for (const auto& [sym, coeff] : R.eqs[r].terms()) {
            if (sym.order() != q) continue;
            Rational lam(1);
            for (int v = 0; v < R.zctx->size(); ++v)
                for (unsigned e = 0; e < sym.gamma[v]; ++e) lam *= lambda[static_cast<size_t>(v)];
            rep.sigma.at(static_cast<int>(r), sym.tau) += coeff.eval(y0) * lam;
        }
    }
    rep.injective = rref_rank_nullspace(rep.sigma).rank == R.unknown_count;
    return rep;
}

DeformReport deformation_monotonicity_check(const std::vector<std::pair<Rational, LinearPDESystem>>& family,
                                            const std::vector<Rational>& y0, int rmax) {
    DeformReport rep;
    const LinearPDESystem* base = nullptr;
    for (const auto& [eps, sys] : family)
        if (eps == 0) base = &sys;
    if (!base) throw std::invalid_argument("deformation check needs the eps = 0 member");

    rep.base.eps = 0;
    rep.base.type = finite_type(*base, y0, rmax);
    if (!rep.base.type.decided) {
        rep.decided = false;
        return rep;
    }
    rep.base.bound = dim_bound(*base, y0, rmax);
    rep.base.type_ok = rep.base.bound_ok = true;

    for (const auto& [eps, sys] : family) {
        if (eps == 0) continue;
        DeformSample s;
        s.eps = eps;
        s.type = finite_type(sys, y0, rmax);
        if (s.type.decided) {
            s.bound = dim_bound(sys, y0, rmax);
            s.type_ok = s.type.type <= rep.base.type.type;
            s.bound_ok = s.bound.bound <= rep.base.bound.bound;
        } else {
            rep.decided = false;
        }
        if (!s.type_ok || !s.bound_ok) rep.monotone = false;
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

}  // namespace seglie
