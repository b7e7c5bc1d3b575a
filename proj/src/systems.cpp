#include "seglie/systems.hpp"

#include <stdexcept>

namespace seglie {

static ContextPtr graph_context(int n, int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (int k = 1; k <= m; ++k) names.push_back("u" + std::to_string(k));
    for (int j = 1; j <= n; ++j) names.push_back("u1_" + std::to_string(j));
    return make_context(std::move(names));
}

PDESystemS::PDESystemS(int n, int m) : n_(n), m_(m), gctx_(graph_context(n, m)) {
    if (n < 1 || m < 1) throw std::invalid_argument("system needs n, m >= 1");
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) F_.emplace(std::make_pair(i, j), Series::zero(gctx_));
    for (int k = 2; k <= m; ++k)
        for (int j = 1; j <= n; ++j) G_.emplace(std::make_pair(k, j), Series::zero(gctx_));
}

int PDESystemS::x_var(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("x index out of range");
    return i - 1;
}
int PDESystemS::u_var(int k) const {
    if (k < 1 || k > m_) throw std::invalid_argument("u index out of range");
    return n_ + k - 1;
}
int PDESystemS::w_var(int j) const {
    if (j < 1 || j > n_) throw std::invalid_argument("w index out of range");
    return n_ + m_ + j - 1;
}

void PDESystemS::set_F(int i, int j, Series f) {
    if (!same_context(f.context(), gctx_)) throw std::invalid_argument("F: context mismatch");
    if (i > j) std::swap(i, j);
    F_.at(std::make_pair(i, j)) = std::move(f);
}

void PDESystemS::set_G(int k, int j, Series g) {
    if (!same_context(g.context(), gctx_)) throw std::invalid_argument("G: context mismatch");
    G_.at(std::make_pair(k, j)) = std::move(g);
}

const Series& PDESystemS::F(int i, int j) const {
    if (i > j) std::swap(i, j);
    return F_.at(std::make_pair(i, j));
}

const Series& PDESystemS::G(int k, int j) const { return G_.at(std::make_pair(k, j)); }

PDESystemS PDESystemS::flat(int n, int m, const std::vector<std::vector<std::vector<Rational>>>& A) {
    if (static_cast<int>(A.size()) != m - 1) throw std::invalid_argument("flat: need m-1 relation matrices");
    PDESystemS S(n, m);
    for (int k = 2; k <= m; ++k) {
        const auto& Ak = A[static_cast<size_t>(k - 2)];
        if (static_cast<int>(Ak.size()) != n) throw std::invalid_argument("flat: relation matrix must be n x n");
        for (int j = 1; j <= n; ++j) {
            Series g = Series::zero(S.gctx());
            for (int p = 1; p <= n; ++p) {
                const auto& row = Ak[static_cast<size_t>(j - 1)];
                if (static_cast<int>(row.size()) != n) throw std::invalid_argument("flat: relation matrix must be n x n");
                if (row[static_cast<size_t>(p - 1)] != 0)
                    g = g + Series::variable(S.gctx(), S.w_var(p)).scaled(row[static_cast<size_t>(p - 1)]);
            }
            S.set_G(k, j, g);
        }
    }
    return S;
}

std::optional<unsigned> PDESystemS::min_series_cap() const {
    std::optional<unsigned> cap;
    for (const auto& [k, s] : F_) cap = min_cap(cap, s.cap());
    for (const auto& [k, s] : G_) cap = min_cap(cap, s.cap());
    return cap;
}

Series restricted_total_derivative(const PDESystemS& S, const Series& e, int i) {
    if (i < 1 || i > S.n()) throw std::invalid_argument("restricted total derivative: index out of range");
    if (!same_context(e.context(), S.gctx()))
        throw std::invalid_argument("restricted total derivative: context mismatch");
    Series acc = e.diff(S.x_var(i));
    acc = acc + Series::variable(S.gctx(), S.w_var(i), e.cap()) * e.diff(S.u_var(1));
    for (int k = 2; k <= S.m(); ++k) {
        Series part = e.diff(S.u_var(k));
        if (!part.is_zero()) acc = acc + S.G(k, i) * part;
    }
    for (int j = 1; j <= S.n(); ++j) {
        Series part = e.diff(S.w_var(j));
        if (!part.is_zero()) acc = acc + S.F(i, j) * part;
    }
    return acc;
}

const Series& DerivedSystem::at(int k, int i, int j) const {
    if (i > j) std::swap(i, j);
    return F2.at(std::make_pair(i, j)).at(k);
}

DerivedSystem derive_full_second_order(const PDESystemS& S) {
    DerivedSystem D;
    for (int i = 1; i <= S.n(); ++i)
        for (int j = i; j <= S.n(); ++j) {
            std::map<int, Series> per_k;
            per_k.emplace(1, S.F(i, j));
            for (int k = 2; k <= S.m(); ++k) per_k.emplace(k, restricted_total_derivative(S, S.G(k, i), j));
            D.F2.emplace(std::make_pair(i, j), std::move(per_k));
        }
    return D;
}

InvolutivityReport involutivity_residuals(const PDESystemS& S) {
    InvolutivityReport rep;
    auto push = [&](std::string label, Series value) {
        if (!value.is_zero()) {
            rep.involutive = false;
            rep.nonzero.push_back(label);
        }
        rep.checked_cap = rep.residuals.empty() ? value.cap() : min_cap(rep.checked_cap, value.cap());
        rep.residuals.push_back(Residual{std::move(label), std::move(value)});
    };
    for (int i = 1; i <= S.n(); ++i)
        for (int j = 1; j <= S.n(); ++j)
            for (int l = j + 1; l <= S.n(); ++l) {
                Series r = restricted_total_derivative(S, S.F(i, j), l) -
                           restricted_total_derivative(S, S.F(i, l), j);
                push("Dhat_" + std::to_string(l) + " F_" + std::to_string(i) + std::to_string(j) +
                         " - Dhat_" + std::to_string(j) + " F_" + std::to_string(i) + std::to_string(l),
                     std::move(r));
            }
    for (int k = 2; k <= S.m(); ++k)
        for (int i = 1; i <= S.n(); ++i)
            for (int j = i + 1; j <= S.n(); ++j) {
                Series r = restricted_total_derivative(S, S.G(k, j), i) -
                           restricted_total_derivative(S, S.G(k, i), j);
                push("Dhat_" + std::to_string(i) + " G" + std::to_string(k) + "_" + std::to_string(j) +
                         " - Dhat_" + std::to_string(j) + " G" + std::to_string(k) + "_" + std::to_string(i),
                     std::move(r));
            }
    return rep;
}

}  // namespace seglie
