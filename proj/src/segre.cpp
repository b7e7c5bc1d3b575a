#include "seglie/segre.hpp"

#include <stdexcept>

namespace seglie {

ContextPtr SegreDefining::remainder_context(int n, int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
    for (int k = 1; k <= m; ++k) names.push_back("o" + std::to_string(k));
    return make_context(std::move(names));
}

void SegreDefining::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("segre data needs n, m >= 1");
    if (static_cast<int>(L.size()) != m) throw std::invalid_argument("segre data needs m matrices L^k");
    for (const auto& Lk : L)
        if (Lk.rows() != n || Lk.cols() != n) throw std::invalid_argument("L^k must be n x n");
    if (!L[0].inverse()) throw std::invalid_argument("hermitian part L1 is singular (Levi degenerate)");
    if (static_cast<int>(R.size()) != m) throw std::invalid_argument("segre data needs m remainders R^k");
    ContextPtr rc = remainder_context(n, m);
    for (const auto& Rk : R) {
        if (!same_context(Rk.context(), rc)) throw std::invalid_argument("remainder context mismatch");
        if (!Rk.is_zero() && Rk.poly().low_degree() < 3)
            throw std::invalid_argument("remainder R^k contains a term of order <= 2");
    }
}

std::vector<ExactMatrix> quadric_relations(int n, int m, const std::vector<ExactMatrix>& L) {
    if (static_cast<int>(L.size()) != m) throw std::invalid_argument("need m matrices L^k");
    auto Ninv = L[0].transposed().inverse();
    if (!Ninv) throw std::invalid_argument("hermitian part L1 is singular (Levi degenerate)");
    // u^k_x = (L^k)^T zeta with zeta = ((L^1)^T)^{-1} u^1_x.
    std::vector<ExactMatrix> A;
    for (int k = 2; k <= m; ++k) A.push_back(L[static_cast<size_t>(k - 1)].transposed() * (*Ninv));
    return A;
}

PDESystemS quadric_system(int n, int m, const std::vector<ExactMatrix>& L) {
    std::vector<ExactMatrix> A = quadric_relations(n, m, L);
    std::vector<std::vector<std::vector<Rational>>> blocks;
    for (const auto& Ak : A) {
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> row;
            for (int j = 0; j < n; ++j) row.push_back(Ak.at(i, j));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return PDESystemS::flat(n, m, blocks);
}

PDESystemS derive_segre_system(const SegreDefining& D, unsigned cap) {
    D.validate();
    if (cap < 1) throw std::invalid_argument("derive_segre_system: cap must be >= 1");
    const int n = D.n, m = D.m;
    const unsigned W = 2 * cap;  // working total-degree cap

    bool flat = true;
    for (const auto& Rk : D.R) flat = flat && Rk.is_zero();
    if (flat) return quadric_system(n, m, D.L);  // exact fast path

    // Elimination context: the graph coordinates (x, u, w^(1)) followed by
    // the unknowns (zeta, omega).
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int k = 1; k <= m; ++k) names.push_back("u" + std::to_string(k));
    for (int j = 1; j <= n; ++j) names.push_back("u1_" + std::to_string(j));
    const int unknown_base = static_cast<int>(names.size());
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
    for (int k = 1; k <= m; ++k) names.push_back("o" + std::to_string(k));
    ContextPtr ectx = make_context(names);

    auto evar = [&](const std::string& nm) {
        auto idx = ectx->find(nm);
        if (!idx) throw std::logic_error("elimination variable missing: " + nm);
        return *idx;
    };
    auto E = [&](const std::string& nm) { return Series::variable(ectx, nm == "" ? 0 : evar(nm)); };

    ContextPtr rctx = SegreDefining::remainder_context(n, m);
    auto lift = [&](const Series& s) { return series_substitute(s, {}, ectx, std::nullopt); };

    auto bilinear = [&](const ExactMatrix& Lk) {
        // <L^k(x), zeta> = sum_{j,l} L^k[j][l] x_l z_j
        Series acc = Series::zero(ectx);
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l) {
                const Rational& c = Lk.at(j - 1, l - 1);
                if (c != 0) acc = acc + (E("x" + std::to_string(l)) * E("z" + std::to_string(j))).scaled(c);
            }
        return acc;
    };

    // Defining equations (7.3) and the k = 1 derivatives (7.4).
    std::vector<Series> eqs;
    std::vector<Series> Rlift;
    for (int k = 1; k <= m; ++k) Rlift.push_back(lift(D.R[static_cast<size_t>(k - 1)]));
    for (int k = 1; k <= m; ++k)
        eqs.push_back(E("u" + std::to_string(k)) + E("o" + std::to_string(k)) -
                      bilinear(D.L[static_cast<size_t>(k - 1)]) - Rlift[static_cast<size_t>(k - 1)]);
    for (int i = 1; i <= n; ++i) {
        Series rhs = bilinear(D.L[0]) + Rlift[0];
        eqs.push_back(E("u1_" + std::to_string(i)) - rhs.diff(evar("x" + std::to_string(i))));
    }

    std::vector<int> unknowns;
    for (int j = 0; j < n + m; ++j) unknowns.push_back(unknown_base + j);

    std::vector<Series> phi;
    try {
        phi = implicit_solve(eqs, unknowns, W);
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("segre elimination failed: ") + err.what());
    }

    PDESystemS S(n, m);
    const ContextPtr& g = S.gctx();
    auto subst_phi = [&](const Series& f) {
        // f over the remainder context (x, zeta, omega) -> series on (x,u,w).
        std::map<int, Series> images;
        for (int j = 1; j <= n; ++j) images.emplace(*rctx->find("z" + std::to_string(j)), phi[static_cast<size_t>(j - 1)]);
        for (int k = 1; k <= m; ++k)
            images.emplace(*rctx->find("o" + std::to_string(k)), phi[static_cast<size_t>(n + k - 1)]);
        return series_substitute(f, images, g, W);
    };

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Series rxx = D.R[0].diff(*rctx->find("x" + std::to_string(i))).diff(*rctx->find("x" + std::to_string(j)));
            S.set_F(i, j, subst_phi(rxx));
        }

    std::vector<ExactMatrix> A = quadric_relations(n, m, D.L);
    for (int k = 2; k <= m; ++k) {
        ContextPtr rc = rctx;
        for (int i = 1; i <= n; ++i) {
            // <L^k(x)_{x_i}, zeta> + R^k_{x_i}, then (zeta, omega) -> phi.
            Series wk = Series::zero(rc);
            for (int j = 1; j <= n; ++j) {
                const Rational& c = D.L[static_cast<size_t>(k - 1)].at(j - 1, i - 1);
                if (c != 0) wk = wk + Series::variable(rc, *rc->find("z" + std::to_string(j))).scaled(c);
            }
            wk = wk + D.R[static_cast<size_t>(k - 1)].diff(*rc->find("x" + std::to_string(i)));
            Series gki = subst_phi(wk);
            // The relation must read A^k w_x + psi with psi of order >= 2.
            Series psi = gki;
            for (int p = 1; p <= n; ++p)
                psi = psi - Series::variable(g, S.w_var(p), psi.cap()).scaled(A[static_cast<size_t>(k - 2)].at(i - 1, p - 1));
            if (!psi.is_zero() && psi.poly().low_degree() < 2)
                throw std::runtime_error("segre derivation: relation lost its quadric linear part");
            S.set_G(k, i, gki);
        }
    }
    return S;
}

SegreDefining scale_deform(const SegreDefining& D, const Rational& eps) {
    SegreDefining out = D;
    ContextPtr rc = SegreDefining::remainder_context(D.n, D.m);
    for (int k = 0; k < D.m; ++k) {
        Polynomial p(rc);
        for (const auto& [mono, c] : D.R[static_cast<size_t>(k)].poly().terms()) {
            // weight(x) = weight(zeta) = 1, weight(omega) = 2; the rescaling
            // multiplies a term by eps^{weight - 2}.
            long w = 0;
            for (int v = 0; v < 2 * D.n; ++v) w += mono[v];
            for (int v = 2 * D.n; v < rc->size(); ++v) w += 2L * mono[v];
            Rational scale(1);
            for (long e = 0; e < w - 2; ++e) scale *= eps;
            if (w < 2) throw std::logic_error("remainder term of weight < 2");
            p.add_term(mono, c * scale);
        }
        out.R[static_cast<size_t>(k)] = Series(std::move(p), D.R[static_cast<size_t>(k)].cap());
    }
    return out;
}

bool flat_nondegenerate_check(int n, const std::vector<ExactMatrix>& A_rest) {
    ExactMatrix stacked(static_cast<int>(A_rest.size()) + 1, n * n);
    for (int i = 0; i < n; ++i) stacked.at(0, i * n + i) = 1;  // Id_n
    for (size_t k = 0; k < A_rest.size(); ++k) {
        if (A_rest[k].rows() != n || A_rest[k].cols() != n)
            throw std::invalid_argument("relation matrices must be n x n");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked.at(static_cast<int>(k) + 1, i * n + j) = A_rest[k].at(i, j);
    }
    return rref_rank_nullspace(stacked).rank == static_cast<int>(A_rest.size()) + 1;
}

std::string aut_bound_line(long complex_dim_bound) {
    return "dim_R Aut(M) <= " + std::to_string(complex_dim_bound);
}

}  // namespace seglie
