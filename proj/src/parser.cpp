#include "seglie/parser.hpp"

#include <algorithm>
#include <cctype>

namespace seglie {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    const std::string& text_;
    size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::Kind::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            tok_ = {Token::Kind::Number, text_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                ++i_;
            tok_ = {Token::Kind::Ident, text_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::Plus, "+", start}; return;
            case '-': tok_ = {Token::Kind::Minus, "-", start}; return;
            case '*': tok_ = {Token::Kind::Star, "*", start}; return;
            case '^': tok_ = {Token::Kind::Caret, "^", start}; return;
            case '/': tok_ = {Token::Kind::Slash, "/", start}; return;
            case '(': tok_ = {Token::Kind::LParen, "(", start}; return;
            case ')': tok_ = {Token::Kind::RParen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
};

ExprPtr node(Expr::Kind k, size_t pos) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->position = pos;
    return e;
}

// Variable names: x<i>, u<k>, u<k>_<digits>, z<i>, o<k>, t<j>, t<j>_<digits>.
// Jet/derivative digit strings are normalized to non-decreasing order.
std::string normalize_var(const std::string& raw, size_t pos) {
    if (raw.empty() || !std::isalpha(static_cast<unsigned char>(raw[0])))
        throw ParseError("malformed variable '" + raw + "'", pos);
    char head = raw[0];
    size_t i = 1, digits_start = 1;
    while (i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == digits_start) throw ParseError("variable '" + raw + "' lacks an index", pos);
    std::string base = raw.substr(0, i);
    if (i == raw.size()) return base;
    if (raw[i] != '_') throw ParseError("malformed variable '" + raw + "'", pos);
    if (head != 'u' && head != 't') throw ParseError("variable '" + raw + "' cannot carry a jet index", pos);
    std::string idx = raw.substr(i + 1);
    if (idx.empty()) throw ParseError("malformed jet index in '" + raw + "'", pos);
    for (char c : idx)
        if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
            throw ParseError("malformed jet index in '" + raw + "'", pos);
    std::sort(idx.begin(), idx.end());
    return base + "_" + idx;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
        return e;
    }

  private:
    Lexer lex_;

    ExprPtr expr() {
        ExprPtr e = term();
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            Token op = lex_.take();
            ExprPtr n = node(op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.pos);
            n->lhs = e;
            n->rhs = term();
            e = n;
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        while (lex_.peek().kind == Token::Kind::Star) {
            Token op = lex_.take();
            ExprPtr n = node(Expr::Kind::Mul, op.pos);
            n->lhs = e;
            n->rhs = unary();
            e = n;
        }
        return e;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            Token op = lex_.take();
            ExprPtr n = node(Expr::Kind::Neg, op.pos);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            Token op = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Number)
                throw ParseError("exponent must be a non-negative integer", e.pos);
            ExprPtr n = node(Expr::Kind::Pow, op.pos);
            n->lhs = base;
            n->exponent = static_cast<unsigned>(std::stoul(e.text));
            return n;
        }
        return base;
    }

    ExprPtr primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number: {
                ExprPtr n = node(Expr::Kind::Number, t.pos);
                Integer num(t.text);
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.take();
                    Token d = lex_.take();
                    if (d.kind != Token::Kind::Number) throw ParseError("expected denominator digits", d.pos);
                    Integer den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                    n->value = Rational(num, den);
                } else {
                    n->value = Rational(num);
                }
                return n;
            }
            case Token::Kind::Ident: {
                ExprPtr n = node(Expr::Kind::Var, t.pos);
                n->name = normalize_var(t.text, t.pos);
                return n;
            }
            case Token::Kind::LParen: {
                ExprPtr inner = expr();
                Token close = lex_.take();
                if (close.kind != Token::Kind::RParen) throw ParseError("expected ')'", close.pos);
                return inner;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

Rational parse_rational(const std::string& text) {
    ExprPtr e = parse_expression(text);
    bool neg = false;
    while (e->kind == Expr::Kind::Neg) {
        neg = !neg;
        e = e->lhs;
    }
    if (e->kind != Expr::Kind::Number) throw ParseError("expected a rational literal", e->position);
    return neg ? Rational(-e->value) : e->value;
}

Series eval_series(const ExprPtr& e, const ContextPtr& ctx) {
    switch (e->kind) {
        case Expr::Kind::Number: return Series::constant(ctx, e->value);
        case Expr::Kind::Var: {
            auto idx = ctx->find(e->name);
            if (!idx) throw ParseError("unknown variable '" + e->name + "'", e->position);
            return Series::variable(ctx, *idx);
        }
        case Expr::Kind::Add: return eval_series(e->lhs, ctx) + eval_series(e->rhs, ctx);
        case Expr::Kind::Sub: return eval_series(e->lhs, ctx) - eval_series(e->rhs, ctx);
        case Expr::Kind::Neg: return -eval_series(e->lhs, ctx);
        case Expr::Kind::Mul: return eval_series(e->lhs, ctx) * eval_series(e->rhs, ctx);
        case Expr::Kind::Pow: {
            Series b = eval_series(e->lhs, ctx);
            Series acc = Series::constant(ctx, 1);
            for (unsigned i = 0; i < e->exponent; ++i) acc = acc * b;
            return acc;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

bool parse_unknown_name(const std::string& name, int& tau, std::string& digits) {
    if (name.size() < 2 || name[0] != 't' || !std::isdigit(static_cast<unsigned char>(name[1]))) return false;
    size_t i = 1;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    tau = std::stoi(name.substr(1, i - 1)) - 1;
    digits.clear();
    if (i == name.size()) return true;
    if (name[i] != '_') return false;
    digits = name.substr(i + 1);
    return !digits.empty();
}

namespace {

// Value in the module (series) + (linear-in-unknowns part).
struct LinValue {
    Series pure;
    LinearForm lin;
    LinValue(Series p, LinearForm l) : pure(std::move(p)), lin(std::move(l)) {}
};

LinValue eval_lin(const ExprPtr& e, const ContextPtr& z, int unknown_count) {
    auto pure_only = [&](Series s) { return LinValue(std::move(s), LinearForm::zero(z)); };
    switch (e->kind) {
        case Expr::Kind::Number: return pure_only(Series::constant(z, e->value));
        case Expr::Kind::Var: {
            int tau;
            std::string digits;
            if (parse_unknown_name(e->name, tau, digits)) {
                if (tau < 0 || tau >= unknown_count)
                    throw ParseError("unknown index out of range in '" + e->name + "'", e->position);
                MultiIndex gamma = MultiIndex::zero(z->size());
                for (char c : digits) {
                    int v = c - '1';
                    if (v < 0 || v >= z->size())
                        throw ParseError("derivative index out of range in '" + e->name + "'", e->position);
                    gamma = gamma.bumped(v);
                }
                return LinValue(Series::zero(z), LinearForm::symbol(z, tau, gamma));
            }
            auto idx = z->find(e->name);
            if (!idx) throw ParseError("unknown variable '" + e->name + "'", e->position);
            return pure_only(Series::variable(z, *idx));
        }
        case Expr::Kind::Add: {
            LinValue a = eval_lin(e->lhs, z, unknown_count), b = eval_lin(e->rhs, z, unknown_count);
            return LinValue(a.pure + b.pure, a.lin + b.lin);
        }
        case Expr::Kind::Sub: {
            LinValue a = eval_lin(e->lhs, z, unknown_count), b = eval_lin(e->rhs, z, unknown_count);
            return LinValue(a.pure - b.pure, a.lin - b.lin);
        }
        case Expr::Kind::Neg: {
            LinValue a = eval_lin(e->lhs, z, unknown_count);
            return LinValue(-a.pure, -a.lin);
        }
        case Expr::Kind::Mul: {
            LinValue a = eval_lin(e->lhs, z, unknown_count), b = eval_lin(e->rhs, z, unknown_count);
            if (!a.lin.is_zero() && !b.lin.is_zero())
                throw ParseError("nonlinear product of unknowns", e->position);
            if (a.lin.is_zero()) return LinValue(a.pure * b.pure, b.lin.scaled_series(a.pure));
            return LinValue(a.pure * b.pure, a.lin.scaled_series(b.pure));
        }
        case Expr::Kind::Pow: {
            LinValue base = eval_lin(e->lhs, z, unknown_count);
            if (!base.lin.is_zero() && e->exponent > 1)
                throw ParseError("nonlinear power of unknowns", e->position);
            if (e->exponent == 1) return base;
            if (e->exponent == 0) return LinValue(Series::constant(z, 1), LinearForm::zero(z));
            Series acc = Series::constant(z, 1);
            for (unsigned i = 0; i < e->exponent; ++i) acc = acc * base.pure;
            return LinValue(acc, LinearForm::zero(z));
        }
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace

LinearForm eval_linear(const ExprPtr& e, const ContextPtr& zctx, int unknown_count) {
    LinValue v = eval_lin(e, zctx, unknown_count);
    if (!v.pure.is_zero()) throw ParseError("equation has a term without unknowns", e->position);
    return v.lin;
}

}  // namespace seglie
