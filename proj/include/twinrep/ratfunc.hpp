#pragma once

#include <string>

#include "twinrep/laurent.hpp"

namespace twinrep {

/// Element of the fraction field Q(t), stored as a normalized pair of
/// integer Laurent polynomials.
///
/// Normal form: the denominator is an ordinary polynomial with order 0
/// (nonzero constant term) and positive leading coefficient, numerator and
/// denominator are coprime over Q[t], and the integer content shared by the
/// two is 1. Equality of normal forms is plain field equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long value) : num_(value), den_(1) {}          // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}    // NOLINT(google-explicit-constructor)
    /// num/den; throws DivisionByZero when den == 0.
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& rhs) const;
    RatFunc operator-(const RatFunc& rhs) const;
    RatFunc operator*(const RatFunc& rhs) const;
    /// Throws DivisionByZero when rhs == 0.
    RatFunc operator/(const RatFunc& rhs) const;
    RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
    RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
    RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    RatFunc inverse() const;

    bool operator==(const RatFunc& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

    /// Exact evaluation; throws ZeroSpecialization (t0 == 0) or PoleAtPoint
    /// (denominator vanishes at t0).
    Rational eval(const Rational& t0) const;

    /// "num" when den == 1, "(num)/(den)" otherwise.
    std::string to_string() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Parses "poly" or "(poly)/(poly)" and normalizes.
RatFunc parse_ratfunc(const std::string& text);

} // namespace twinrep
