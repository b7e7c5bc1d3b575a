#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace seglie {

// Exact scalar type for every coefficient in the engine. cpp_rational keeps
// values reduced with a positive denominator, which is exactly the canonical
// form we rely on for printing and hashing.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p" when the denominator is 1, "p/q" otherwise; matches the input grammar.
inline std::string rational_to_string(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) {
        s += "/";
        s += rat_den(q).str();
    }
    return s;
}

}  // namespace seglie
