#include "seglie/series.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "seglie/matrix.hpp"

namespace seglie {

std::optional<unsigned> min_cap(const std::optional<unsigned>& a, const std::optional<unsigned>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Series::Series(Polynomial p, std::optional<unsigned> cap) : p_(std::move(p)), cap_(cap) { enforce(); }

void Series::enforce() {
    if (!cap_) return;
    std::map<MultiIndex, Rational> kept;
    for (const auto& [m, c] : p_.terms())
        if (m.degree() <= *cap_) kept.emplace(m, c);
    if (kept.size() != p_.terms().size()) p_ = Polynomial(p_.context(), std::move(kept));
}

Series Series::zero(ContextPtr ctx, std::optional<unsigned> cap) {
    return Series(Polynomial::zero(std::move(ctx)), cap);
}

Series Series::constant(ContextPtr ctx, const Rational& c, std::optional<unsigned> cap) {
    return Series(Polynomial::constant(std::move(ctx), c), cap);
}

Series Series::variable(ContextPtr ctx, int i, std::optional<unsigned> cap) {
    return Series(Polynomial::variable(std::move(ctx), i), cap);
}

Series Series::operator+(const Series& o) const { return Series(p_ + o.p_, min_cap(cap_, o.cap_)); }
Series Series::operator-(const Series& o) const { return Series(p_ - o.p_, min_cap(cap_, o.cap_)); }
Series Series::operator-() const { return Series(-p_, cap_); }
Series Series::operator*(const Series& o) const { return Series(p_ * o.p_, min_cap(cap_, o.cap_)); }
Series Series::scaled(const Rational& c) const { return Series(p_.scaled(c), cap_); }

Series Series::diff(int v) const {
    std::optional<unsigned> c = cap_;
    if (c) c = (*c == 0) ? 0u : *c - 1;
    return Series(p_.diff(v), c);
}

Series Series::truncated(unsigned cap) const { return Series(p_, min_cap(cap_, cap)); }

Series Series::with_cap(std::optional<unsigned> cap) const { return Series(p_, cap); }

Series Series::extended_to(const ContextPtr& bigger) const { return Series(p_.extended_to(bigger), cap_); }

Rational Series::eval(const std::vector<Rational>& point) const { return p_.eval(point); }

Polynomial Series::truncation_poly(unsigned d) const {
    std::map<MultiIndex, Rational> kept;
    for (const auto& [m, c] : p_.terms())
        if (m.degree() <= d) kept.emplace(m, c);
    return Polynomial(p_.context(), std::move(kept));
}

Series series_substitute(const Series& src, const std::map<int, Series>& images, const ContextPtr& target,
                         std::optional<unsigned> out_cap) {
    const ContextPtr& ctx = src.context();
    std::optional<unsigned> cap = min_cap(src.cap(), out_cap);
    // Soundness rule: replacing a variable inside a genuine truncation is only
    // degree-safe when the image has no constant term.
    for (const auto& [v, img] : images) {
        if (v < 0 || v >= ctx->size()) throw std::invalid_argument("substitute: variable index out of range");
        cap = min_cap(cap, img.cap());
        if (!src.is_exact() && img.constant_term() != 0)
            throw std::invalid_argument("substitute: image of " + ctx->name(v) +
                                        " has a constant term but the source is truncated");
    }

    // Only variables that actually occur need images; the rest map by name.
    std::vector<bool> used(static_cast<size_t>(ctx->size()), false);
    for (const auto& [m, c] : src.poly().terms())
        for (int i = 0; i < ctx->size(); ++i)
            if (m[i] > 0) used[static_cast<size_t>(i)] = true;

    std::vector<Series> var_images(static_cast<size_t>(ctx->size()), Series::zero(target, cap));
    for (int i = 0; i < ctx->size(); ++i) {
        auto it = images.find(i);
        if (it != images.end()) {
            if (!same_context(it->second.context(), target))
                throw std::invalid_argument("substitute: image context mismatch");
            var_images[static_cast<size_t>(i)] = it->second.with_cap(cap);
        } else if (used[static_cast<size_t>(i)]) {
            auto idx = target->find(ctx->name(i));
            if (!idx) throw std::invalid_argument("substitute: variable " + ctx->name(i) + " missing in target");
            var_images[static_cast<size_t>(i)] = Series::variable(target, *idx, cap);
        }
    }

    Series acc = Series::zero(target, cap);
    for (const auto& [m, c] : src.poly().terms()) {
        Series t = Series::constant(target, c, cap);
        for (int i = 0; i < ctx->size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * var_images[static_cast<size_t>(i)];
        acc = acc + t;
    }
    return acc;
}

ContextPtr implicit_param_context(const ContextPtr& full, const std::vector<int>& unknown_vars) {
    std::set<int> unk(unknown_vars.begin(), unknown_vars.end());
    std::vector<std::string> names;
    for (int i = 0; i < full->size(); ++i)
        if (!unk.count(i)) names.push_back(full->name(i));
    return make_context(std::move(names));
}

std::vector<Series> implicit_solve(const std::vector<Series>& eqs, const std::vector<int>& unknown_vars,
                                   unsigned cap) {
    if (eqs.empty()) throw std::invalid_argument("implicit_solve: empty system");
    const ContextPtr full = eqs.front().context();
    const size_t k = unknown_vars.size();
    if (eqs.size() != k)
        throw std::invalid_argument("implicit_solve: non-square system (" + std::to_string(eqs.size()) +
                                    " equations, " + std::to_string(k) + " unknowns)");
    for (const auto& e : eqs) {
        if (!same_context(e.context(), full)) throw std::invalid_argument("implicit_solve: context mismatch");
        if (e.constant_term() != 0) throw std::invalid_argument("implicit_solve: equation does not vanish at origin");
    }

    // Linear part with respect to the unknowns at the origin.
    ExactMatrix jac(static_cast<int>(k), static_cast<int>(k));
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c)
            jac.at(static_cast<int>(r), static_cast<int>(c)) =
                eqs[r].poly().coeff(MultiIndex::unit(full->size(), unknown_vars[c]));
    auto inv = jac.inverse();
    if (!inv) {
        auto rr = rref_rank_nullspace(jac);
        throw std::invalid_argument("implicit_solve: singular linear part (rank " + std::to_string(rr.rank) +
                                    " of " + std::to_string(k) + ")");
    }

    ContextPtr pctx = implicit_param_context(full, unknown_vars);

    // phi <- phi - J^{-1} E(x, phi); each round fixes one more total degree.
    std::vector<Series> phi(k, Series::zero(pctx, cap));
    for (unsigned round = 0; round <= cap; ++round) {
        std::map<int, Series> images;
        for (size_t c = 0; c < k; ++c) images.emplace(unknown_vars[c], phi[c]);
        std::vector<Series> residual;
        residual.reserve(k);
        for (const auto& e : eqs) residual.push_back(series_substitute(e, images, pctx, cap));
        std::vector<Series> next;
        next.reserve(k);
        for (size_t r = 0; r < k; ++r) {
            Series delta = Series::zero(pctx, cap);
            for (size_t c = 0; c < k; ++c) delta = delta + residual[c].scaled(inv->at(static_cast<int>(r), static_cast<int>(c)));
            next.push_back(phi[r] - delta);
        }
        phi = std::move(next);
    }

    // Verify the defining property through the cap.
    std::map<int, Series> images;
    for (size_t c = 0; c < k; ++c) images.emplace(unknown_vars[c], phi[c]);
    for (const auto& e : eqs)
        if (!series_substitute(e, images, pctx, cap).is_zero())
            throw std::runtime_error("implicit_solve: recursion failed to converge");
    return phi;
}

}  // namespace seglie
