#include "twinrep/numeric.hpp"

#include <cctype>

namespace twinrep {

Int int_from_decimal(const std::string& digits) {
    std::size_t start = digits.find_first_not_of('0');
    if (start == std::string::npos) {
        return Int(0);
    }
    return Int(digits.substr(start));
}

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) {
        return Rational(1);
    }
    if (q == 0 && e < 0) {
        throw Error(ErrorKind::DivisionByZero, "0 raised to a negative power");
    }
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k > 0) {
        if (k & 1UL) {
            acc *= base;
        }
        base *= base;
        k >>= 1UL;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto parse_int = [&]() -> Int {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw SyntaxError("expected digits", pos);
        }
        Int value = int_from_decimal(text.substr(start, pos - start));
        return neg ? Int(-value) : value;
    };

    skip_ws();
    Int num = parse_int();
    skip_ws();
    Int den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        den = parse_int();
        skip_ws();
        if (den == 0) {
            throw Error(ErrorKind::DivisionByZero, "zero denominator in rational literal");
        }
    }
    if (pos != text.size()) {
        throw SyntaxError("trailing characters after rational", pos);
    }
    return make_rational(num, den);
}

std::string format_rational(const Rational& q) {
    Int num = rational_num(q);
    Int den = rational_den(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace twinrep
