#include "twinrep/ratfunc.hpp"

#include <cctype>

namespace twinrep {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    }
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Pull the denominator's unit part t^m into the numerator, so the
    // denominator becomes an ordinary polynomial with nonzero constant term.
    long m = den_.order();
    den_ = den_.shifted(-m);
    num_ = num_.shifted(-m);

    // Cancel the polynomial gcd (computed on the numerator's ordinary part;
    // its own t-power is a unit and stays with the numerator).
    long k = num_.order();
    LaurentPoly num_poly = num_.shifted(-k);
    LaurentPoly g = laurent_gcd(num_poly, den_);
    if (!g.is_one()) {
        num_poly = laurent_div_exact(num_poly, g);
        den_ = laurent_div_exact(den_, g);
    }

    // Shared integer content 1; denominator's leading coefficient positive.
    Int c = boost::multiprecision::gcd(num_poly.content(), den_.content());
    if (den_.leading_coeff() < 0) {
        c = -c;
    }
    if (c != 1) {
        num_poly = laurent_div_exact(num_poly, LaurentPoly(c));
        den_ = laurent_div_exact(den_, LaurentPoly(c));
    }
    num_ = num_poly.shifted(k);
}

RatFunc RatFunc::operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
    if (rhs.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
    }
    return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    }
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& t0) const {
    if (t0 == 0) {
        throw Error(ErrorKind::ZeroSpecialization, "t must be specialized to a nonzero value");
    }
    Rational d = den_.eval(t0);
    if (d == 0) {
        throw Error(ErrorKind::PoleAtPoint,
                    "denominator " + den_.to_string() + " vanishes at t = " + format_rational(t0));
    }
    return num_.eval(t0) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc parse_ratfunc(const std::string& text) {
    // "(num)/(den)" or a bare polynomial.
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos < text.size() && text[pos] == '(') {
        std::size_t open = pos;
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t i = pos; i < text.size(); ++i) {
            if (text[i] == '(') {
                ++depth;
            } else if (text[i] == ')') {
                --depth;
                if (depth == 0) {
                    close = i;
                    break;
                }
            }
        }
        if (close == std::string::npos) {
            throw SyntaxError("unbalanced '('", open);
        }
        std::string num_text = text.substr(open + 1, close - open - 1);
        std::size_t rest = close + 1;
        while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) {
            ++rest;
        }
        if (rest >= text.size() || text[rest] != '/') {
            throw SyntaxError("expected '/' after '(num)'", rest);
        }
        ++rest;
        while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) {
            ++rest;
        }
        if (rest >= text.size() || text[rest] != '(') {
            throw SyntaxError("expected '(' for denominator", rest);
        }
        std::size_t den_open = rest;
        depth = 0;
        std::size_t den_close = std::string::npos;
        for (std::size_t i = rest; i < text.size(); ++i) {
            if (text[i] == '(') {
                ++depth;
            } else if (text[i] == ')') {
                --depth;
                if (depth == 0) {
                    den_close = i;
                    break;
                }
            }
        }
        if (den_close == std::string::npos) {
            throw SyntaxError("unbalanced '('", den_open);
        }
        for (std::size_t i = den_close + 1; i < text.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                throw SyntaxError("trailing characters after rational function", i);
            }
        }
        std::string den_text = text.substr(den_open + 1, den_close - den_open - 1);
        return RatFunc(parse_laurent(num_text), parse_laurent(den_text));
    }
    return RatFunc(parse_laurent(text));
}

} // namespace twinrep
