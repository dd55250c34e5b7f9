#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "twinrep/error.hpp"

namespace twinrep {

/// Arbitrary-precision integer. Entries of generator-image powers grow
/// without bound, so fixed-width coefficients are not an option.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// num/den with sign normalization; throws DivisionByZero when den == 0.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "zero denominator in rational");
    }
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

/// Decimal digit string -> Int. Leading zeros are plain decimal here,
/// never an octal prefix.
Int int_from_decimal(const std::string& digits);

/// q^e for any integer exponent; requires q != 0 when e < 0.
Rational rational_pow(const Rational& q, long e);

/// Parses "p" or "p/q" with optional leading '-'. Throws SyntaxError.
Rational parse_rational(const std::string& text);

/// Renders as "p" or "p/q" (reduced form, denominator positive).
std::string format_rational(const Rational& q);

} // namespace twinrep
