#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "gbl/error.hpp"

namespace gbl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
    return q.str();
}

// Accepts "p", "-p", "p/q" with optional sign; rejects anything else.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) fail("invalid-input", "empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) fail("invalid-input", "zero denominator in rational literal '" + s + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        fail("invalid-input", "malformed rational literal '" + s + "'");
    }
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// Exact square root of a non-negative rational if it is a perfect square,
// else returns false. Used for renormalizing measurement branches exactly.
bool exact_sqrt(const Rational& q, Rational& out);

}  // namespace gbl
