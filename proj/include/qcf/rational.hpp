#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qcf {

/* Every series coefficient in this library is an exact reduced fraction.
 * boost::multiprecision keeps the invariants we rely on: gcd(|num|, den) = 1
 * and den >= 1 after every operation, so equality is plain comparison. */
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string fraction_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

/* r^e for signed integer e; negative exponents invert. */
inline Rational rational_pow(const Rational& r, int e)
{
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("rational_pow: 0 raised to a negative power");
        return Rational(0);
    }
    Rational base = r;
    if (e < 0) {
        base = Rational(denominator(r), numerator(r));
        e = -e;
    }
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

/* Accepts "n" or "n/d"; used by the CLI for parameter assignments. */
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

} // namespace qcf
