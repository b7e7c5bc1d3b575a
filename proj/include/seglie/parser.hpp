#pragma once

#include <functional>
#include <memory>
#include <string>

#include "seglie/linform.hpp"

namespace seglie {

// Syntax error with a 0-based character position into the parsed text.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Expression tree for the input grammar:
//   rationals [-]digits[/digits]; variables x<i>, u<k>, u<k>_<digits>,
//   z<i>, o<k>, t<j>, t<j>_<digits>; operators + - * ^ and parentheses,
//   ^ only with non-negative integer exponents.
struct Expr {
    enum class Kind { Number, Var, Add, Sub, Neg, Mul, Pow };
    Kind kind;
    Rational value;          // Number
    std::string name;        // Var (canonical: jet/unknown index digits sorted)
    size_t position = 0;     // of the token that started this node
    unsigned exponent = 0;   // Pow
    std::shared_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<Expr>;

// Parses a full expression; throws ParseError on malformed input (including
// trailing garbage). Variable names are normalized (jet index digit strings
// sorted non-decreasing) but not resolved.
ExprPtr parse_expression(const std::string& text);

// Evaluates over a context; every variable must resolve. Exact result.
Series eval_series(const ExprPtr& e, const ContextPtr& ctx);

// Evaluates an expression that is linear in the unknown symbols t<j>[_...]
// over base variables of `zctx` (named z1..zV or whatever the context says).
// Products of two unknown-carrying factors are rejected.
LinearForm eval_linear(const ExprPtr& e, const ContextPtr& zctx, int unknown_count);

// Splits a canonical variable name: returns true for t<j>(_<digits>) names.
bool parse_unknown_name(const std::string& name, int& tau, std::string& digits);

Rational parse_rational(const std::string& text);

}  // namespace seglie
