#pragma once

#include <map>
#include <string>
#include <vector>

#include "twinrep/numeric.hpp"

namespace twinrep {

/// Element of Z[t^{+-1}] with exact integer coefficients.
///
/// Stored as a map exponent -> coefficient with no zero coefficients;
/// the zero polynomial has an empty map. Values are immutable in spirit:
/// all arithmetic returns fresh objects, so sharing across threads is safe.
class LaurentPoly {
public:
    using TermMap = std::map<long, Int>;

    LaurentPoly() = default;
    LaurentPoly(long value) { set_term(0, Int(value)); }       // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const Int& value) { set_term(0, value); }

    /// c * t^e
    static LaurentPoly monomial(const Int& coeff, long exponent);
    static LaurentPoly t(long exponent = 1) { return monomial(1, exponent); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    /// Unit of Z[t^{+-1}], i.e. a single term with coefficient +-1.
    bool is_unit() const;
    /// True when the polynomial is a single term c*t^e.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    Int coeff(long exponent) const;
    /// Highest exponent; requires nonzero.
    long degree() const;
    /// Lowest exponent; requires nonzero.
    long order() const;
    /// Leading (highest-exponent) coefficient; requires nonzero.
    const Int& leading_coeff() const;
    /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;

    /// Multiplication by t^k.
    LaurentPoly shifted(long k) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
    LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }
    /// Total order (by term map), used for deterministic containers.
    bool operator<(const LaurentPoly& rhs) const { return terms_ < rhs.terms_; }

    /// Exact evaluation at a nonzero rational point.
    /// Throws ZeroSpecialization when t0 == 0.
    Rational eval(const Rational& t0) const;

    std::string to_string() const;

private:
    void set_term(long exponent, const Int& coeff);
    friend LaurentPoly laurent_pow(const LaurentPoly&, long);

    TermMap terms_;
};

/// a^e. Negative exponents are only defined for units +-t^k; anything else
/// throws NonUnitNegativePower.
LaurentPoly laurent_pow(const LaurentPoly& base, long exponent);

/// Parses the canonical grammar: terms in strictly ascending exponent order
/// joined by " + "/" - "; a term is "c", "c*t", "c*t^e" with unit
/// coefficients elided; zero is "0". Whitespace around tokens is tolerated.
/// Throws SyntaxError (with position) on malformed input, duplicate or
/// out-of-order exponents.
LaurentPoly parse_laurent(const std::string& text);

/// Primitive gcd in Z[t] of two Laurent polynomials with order >= 0
/// (ordinary polynomials). Result is primitive with positive leading
/// coefficient; gcd(a, 0) = primitive part of a.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; throws DivisionByZero when divisor is zero and
/// BadArgument when the division leaves a remainder.
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b);

} // namespace twinrep
