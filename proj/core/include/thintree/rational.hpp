#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "thintree/errors.hpp"

namespace thintree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or a bare integer "p" into an exact rational.  Used for --eta.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw ParameterError("not a rational: '" + text + "'"); };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// ceil(q) as an integer.
inline BigInt ceil_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);  // d > 0 canonical
    BigInt quo = n / d;
    if (quo * d < n) ++quo;
    return quo;
}

}  // namespace thintree
