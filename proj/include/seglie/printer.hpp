#pragma once

#include <string>

#include "seglie/lieeq.hpp"
#include "seglie/systems.hpp"

namespace seglie {

// Canonical text forms; all printers are deterministic and round-trip through
// the expression grammar. Terms are emitted in descending graded-lex order.
std::string to_string(const Polynomial& p);
std::string to_string(const Series& s);

// Unknown symbol as t<j>_<digits> with derivative digits sorted ascending.
std::string symbol_name(const UnknownSym& s);

// Linear form over base variables renamed positionally to z1..zV, matching
// the linear-system file grammar.
std::string to_string_linear(const LinearForm& f, const ContextPtr& zctx);

// Canonical reduced form of the system's row space at a point: RREF rows over
// the symbol union, printed as linear combinations. Golden tests and reports
// compare these instead of literal equation text.
std::vector<std::string> canonical_rows_at(const LinearPDESystem& R, const std::vector<Rational>& point);

std::string cap_to_string(const std::optional<unsigned>& cap);

}  // namespace seglie
