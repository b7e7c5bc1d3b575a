#include "seglie/polynomial.hpp"

#include <stdexcept>

namespace seglie {

void require_same_context(const Polynomial& a, const Polynomial& b, const char* what) {
    if (!same_context(a.context(), b.context()))
        throw std::invalid_argument(std::string(what) + ": context mismatch");
}

Polynomial::Polynomial(ContextPtr ctx, std::map<MultiIndex, Rational> terms)
    : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.nvars() != ctx_->size()) throw std::invalid_argument("term arity mismatch");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.emplace(MultiIndex::zero(p.ctx_->size()), c);
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, int i) {
    if (i < 0 || i >= ctx->size()) throw std::invalid_argument("variable index out of range");
    Polynomial p(std::move(ctx));
    p.terms_.emplace(MultiIndex::unit(p.ctx_->size(), i), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, const MultiIndex& m, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (m.nvars() != p.ctx_->size()) throw std::invalid_argument("monomial arity mismatch");
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(MultiIndex::zero(ctx_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

unsigned Polynomial::low_degree() const {
    return terms_.empty() ? 0u : terms_.begin()->first.degree();
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_context(*this, o, "poly add");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_context(*this, o, "poly sub");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_context(*this, o, "poly mul");
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
}

Polynomial Polynomial::diff(int v) const {
    if (v < 0 || v >= ctx_->size()) throw std::invalid_argument("diff: unknown variable");
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[v];
        if (e == 0) continue;
        r.add_term(m.lowered(v), c * Rational(e));
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ctx_->size())
        throw std::invalid_argument("eval: point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < ctx_->size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= point[static_cast<size_t>(i)];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images, const ContextPtr& target) const {
    // Variables without an image must exist (by name) in the target context.
    std::vector<Polynomial> var_images;
    var_images.reserve(static_cast<size_t>(ctx_->size()));
    for (int i = 0; i < ctx_->size(); ++i) {
        auto it = images.find(i);
        if (it != images.end()) {
            if (!same_context(it->second.context(), target))
                throw std::invalid_argument("substitute: image context mismatch");
            var_images.push_back(it->second);
        } else {
            auto idx = target->find(ctx_->name(i));
            if (!idx) throw std::invalid_argument("substitute: variable " + ctx_->name(i) + " missing in target");
            var_images.push_back(Polynomial::variable(target, *idx));
        }
    }
    Polynomial acc(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < ctx_->size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * var_images[static_cast<size_t>(i)];
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::extended_to(const ContextPtr& bigger) const {
    if (same_context(ctx_, bigger)) return *this;
    if (!ctx_->is_prefix_of(*bigger)) throw std::invalid_argument("extend: not a prefix context");
    Polynomial r(bigger);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> e = m.exponents();
        e.resize(static_cast<size_t>(bigger->size()), 0);
        r.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return r;
}

}  // namespace seglie
