#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace skewav {

// Exact arbitrary-precision integers and rationals. Counting never goes
// through floating point anywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3" or "22/7". Throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
}

/// "a/b" in lowest terms, or just "a" when the value is integral.
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace skewav
