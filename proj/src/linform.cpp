#include "seglie/linform.hpp"

#include <stdexcept>

namespace seglie {

LinearForm LinearForm::symbol(ContextPtr zctx, int tau, MultiIndex gamma) {
    LinearForm f(zctx);
    f.terms_.emplace(UnknownSym{tau, std::move(gamma)}, Series::constant(f.zctx_, 1));
    return f;
}

int LinearForm::order() const {
    int o = -1;
    for (const auto& [s, c] : terms_) o = std::max(o, s.order());
    return o;
}

void LinearForm::add(const UnknownSym& s, const Series& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(s, coeff);
    if (!fresh) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    if (!same_context(zctx_, o.zctx_)) throw std::invalid_argument("linear form add: context mismatch");
    LinearForm r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const {
    if (!same_context(zctx_, o.zctx_)) throw std::invalid_argument("linear form sub: context mismatch");
    LinearForm r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

LinearForm LinearForm::operator-() const {
    LinearForm r(zctx_);
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
}

LinearForm LinearForm::scaled(const Rational& c) const {
    LinearForm r(zctx_);
    if (c == 0) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v.scaled(c));
    return r;
}

LinearForm LinearForm::scaled_series(const Series& s) const {
    if (!same_context(zctx_, s.context())) throw std::invalid_argument("linear form scale: context mismatch");
    LinearForm r(zctx_);
    for (const auto& [sym, v] : terms_) r.add(sym, v * s);
    return r;
}

LinearForm LinearForm::dz(int l) const {
    LinearForm r(zctx_);
    for (const auto& [sym, v] : terms_) {
        r.add(UnknownSym{sym.tau, sym.gamma.bumped(l)}, v);
        Series dv = v.diff(l);
        if (!dv.is_zero()) r.add(sym, dv);
    }
    return r;
}

Series LinearForm::substitute_unknowns(const std::vector<Series>& unknown_values) const {
    Series acc = Series::zero(zctx_);
    for (const auto& [sym, coeff] : terms_) {
        if (sym.tau < 0 || sym.tau >= static_cast<int>(unknown_values.size()))
            throw std::invalid_argument("substitute_unknowns: missing unknown value");
        Series v = unknown_values[static_cast<size_t>(sym.tau)];
        for (int l = 0; l < zctx_->size(); ++l)
            for (unsigned e = 0; e < sym.gamma[l]; ++e) v = v.diff(l);
        acc = acc + coeff * v;
    }
    return acc;
}

std::vector<Rational> LinearForm::eval_row(const std::vector<UnknownSym>& symbols,
                                           const std::vector<Rational>& point) const {
    std::vector<Rational> row(symbols.size(), Rational(0));
    std::map<UnknownSym, size_t> pos;
    for (size_t i = 0; i < symbols.size(); ++i) pos.emplace(symbols[i], i);
    for (const auto& [sym, coeff] : terms_) {
        auto it = pos.find(sym);
        if (it == pos.end()) continue;
        row[it->second] = coeff.eval(point);
    }
    return row;
}

bool LinearForm::operator==(const LinearForm& o) const {
    return same_context(zctx_, o.zctx_) && terms_ == o.terms_;
}

}  // namespace seglie
