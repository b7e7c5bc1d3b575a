#include "seglie/printer.hpp"

#include "seglie/matrix.hpp"

namespace seglie {

namespace {

// One monomial as factor list: "x1^2*u1_12"; empty for the constant term.
std::string mono_string(const ContextPtr& ctx, const MultiIndex& m,
                        const std::function<std::string(int)>& var_name) {
    std::string s;
    for (int v = 0; v < ctx->size(); ++v) {
        if (m[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
}

std::string terms_string(const ContextPtr& ctx, const std::map<MultiIndex, Rational>& terms,
                         const std::function<std::string(int)>& var_name) {
    if (terms.empty()) return "0";
    std::string out;
    // descending graded-lex
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Rational& c = it->second;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string mono = mono_string(ctx, it->first, var_name);
        std::string body;
        if (mono.empty())
            body = rational_to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = rational_to_string(mag) + "*" + mono;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
    auto name = [&](int v) { return p.context()->name(v); };
    return terms_string(p.context(), p.terms(), name);
}

std::string to_string(const Series& s) { return to_string(s.poly()); }

std::string symbol_name(const UnknownSym& s) {
    std::string out = "t" + std::to_string(s.tau + 1);
    if (s.gamma.degree() > 0) {
        out += "_";
        for (int v = 0; v < s.gamma.nvars(); ++v)
            for (unsigned e = 0; e < s.gamma[v]; ++e) out += std::to_string(v + 1);
    }
    return out;
}

std::string to_string_linear(const LinearForm& f, const ContextPtr& zctx) {
    if (f.is_zero()) return "0";
    auto zname = [](int v) { return "z" + std::to_string(v + 1); };
    // symbols in descending (order, tau, gamma) so the highest-order block leads
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const UnknownSym& sym = it->first;
        const Series& coeff = it->second;
        for (auto t = coeff.poly().terms().rbegin(); t != coeff.poly().terms().rend(); ++t) {
            const Rational& c = t->second;
            bool negative = c < 0;
            Rational mag = negative ? Rational(-c) : c;
            std::string mono = mono_string(zctx, t->first, zname);
            std::string body;
            if (!mono.empty() && mag == 1)
                body = mono + "*" + symbol_name(sym);
            else if (!mono.empty())
                body = rational_to_string(mag) + "*" + mono + "*" + symbol_name(sym);
            else if (mag == 1)
                body = symbol_name(sym);
            else
                body = rational_to_string(mag) + "*" + symbol_name(sym);
            if (out.empty())
                out = negative ? "-" + body : body;
            else
                out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::vector<std::string> canonical_rows_at(const LinearPDESystem& R, const std::vector<Rational>& point) {
    auto symbols = R.symbol_union();
    RowSpace space(static_cast<int>(symbols.size()));
    for (const auto& e : R.eqs) space.insert(e.eval_row(symbols, point));
    std::vector<std::string> out;
    for (const auto& row : space.canonical_rows()) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 0) continue;
            bool negative = row[c] < 0;
            Rational mag = negative ? Rational(-row[c]) : row[c];
            std::string body = (mag == 1 ? "" : rational_to_string(mag) + "*") + symbol_name(symbols[c]);
            if (line.empty())
                line = negative ? "-" + body : body;
            else
                line += (negative ? " - " : " + ") + body;
        }
        out.push_back(line.empty() ? "0" : line);
    }
    return out;
}

std::string cap_to_string(const std::optional<unsigned>& cap) {
    return cap ? std::to_string(*cap) : std::string("none");
}

}  // namespace seglie
