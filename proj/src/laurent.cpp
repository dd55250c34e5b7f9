#include "twinrep/laurent.hpp"

#include <cctype>
#include <sstream>

namespace twinrep {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace

LaurentPoly LaurentPoly::monomial(const Int& coeff, long exponent) {
    LaurentPoly p;
    p.set_term(exponent, coeff);
    return p;
}

void LaurentPoly::set_term(long exponent, const Int& coeff) {
    if (coeff != 0) {
        terms_[exponent] = coeff;
    }
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) {
        return false;
    }
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

Int LaurentPoly::coeff(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

long LaurentPoly::degree() const {
    if (is_zero()) {
        throw Error(ErrorKind::BadArgument, "degree of zero polynomial");
    }
    return terms_.rbegin()->first;
}

long LaurentPoly::order() const {
    if (is_zero()) {
        throw Error(ErrorKind::BadArgument, "order of zero polynomial");
    }
    return terms_.begin()->first;
}

const Int& LaurentPoly::leading_coeff() const {
    if (is_zero()) {
        throw Error(ErrorKind::BadArgument, "leading coefficient of zero polynomial");
    }
    return terms_.rbegin()->second;
}

Int LaurentPoly::content() const {
    Int g(0);
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
    }
    return g < 0 ? Int(-g) : g;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        out.terms_[e + k] = c;
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        out.terms_[e] = -c;
    }
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) {
                out.terms_.erase(it);
            }
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            long e = ea + eb;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) {
                    out.terms_.erase(it);
                }
            }
        }
    }
    return out;
}

Rational LaurentPoly::eval(const Rational& t0) const {
    if (t0 == 0) {
        throw Error(ErrorKind::ZeroSpecialization, "t must be specialized to a nonzero value");
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        acc += Rational(c) * rational_pow(t0, e);
    }
    return acc;
}

LaurentPoly laurent_pow(const LaurentPoly& base, long exponent) {
    if (exponent < 0) {
        if (!base.is_unit()) {
            throw Error(ErrorKind::NonUnitNegativePower,
                        "negative power of a non-unit Laurent polynomial: " + base.to_string());
        }
        const auto& [e, c] = *base.terms().begin();
        // (+-t^e)^k with k < 0: coefficient is +-1, exponent scales.
        Int coeff = (c == -1 && (exponent % 2 != 0)) ? Int(-1) : Int(1);
        return LaurentPoly::monomial(coeff, e * exponent);
    }
    LaurentPoly acc(1);
    LaurentPoly b = base;
    unsigned long k = static_cast<unsigned long>(exponent);
    while (k > 0) {
        if (k & 1UL) {
            acc = acc * b;
        }
        b = b * b;
        k >>= 1UL;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.str();
        } else {
            if (mag != 1) {
                out << mag.str() << "*";
            }
            out << "t";
            if (e != 1) {
                out << "^" << e;
            }
        }
    }
    return out.str();
}

namespace {

class LaurentParser {
public:
    explicit LaurentParser(const std::string& text) : text_(text) {}

    LaurentPoly parse() {
        LaurentPoly::TermMap terms;
        skip_ws();
        bool have_prev_exponent = false;
        long prev_exponent = 0;
        bool negate = consume_sign();
        for (;;) {
            std::size_t term_pos = pos_;
            auto [coeff, exponent] = parse_term();
            if (negate) {
                coeff = -coeff;
            }
            if (have_prev_exponent && exponent <= prev_exponent) {
                throw SyntaxError("term exponents must be strictly ascending", term_pos);
            }
            prev_exponent = exponent;
            have_prev_exponent = true;
            if (coeff != 0) {
                terms[exponent] = coeff;
            }
            skip_ws();
            if (pos_ == text_.size()) {
                break;
            }
            if (text_[pos_] == '+') {
                negate = false;
            } else if (text_[pos_] == '-') {
                negate = true;
            } else {
                throw SyntaxError("expected '+' or '-' between terms", pos_);
            }
            ++pos_;
            skip_ws();
        }
        LaurentPoly out;
        for (const auto& [e, c] : terms) {
            out = out + LaurentPoly::monomial(c, e);
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume_sign() {
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Int parse_uint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw SyntaxError("expected digits", pos_);
        }
        return int_from_decimal(text_.substr(start, pos_ - start));
    }

    long parse_exponent() {
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        Int value = parse_uint();
        if (value > Int(1000000)) {
            throw SyntaxError("exponent out of range", start);
        }
        long e = value.convert_to<long>();
        return neg ? -e : e;
    }

    // coefficient ['*' t ['^' exponent]] | t ['^' exponent]
    std::pair<Int, long> parse_term() {
        Int coeff(1);
        bool saw_coeff = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_uint();
            saw_coeff = true;
        }
        bool saw_t = false;
        if (saw_coeff) {
            std::size_t save = pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != 't') {
                    throw SyntaxError("expected 't'", pos_);
                }
                ++pos_;
                saw_t = true;
            } else {
                pos_ = save;  // bare integer term
            }
        } else if (pos_ < text_.size() && text_[pos_] == 't') {
            ++pos_;
            saw_t = true;
        }
        if (!saw_coeff && !saw_t) {
            throw SyntaxError("expected a term", pos_);
        }
        long exponent = 0;
        if (saw_t) {
            exponent = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                exponent = parse_exponent();
            }
        }
        return {coeff, exponent};
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    return LaurentParser(text).parse();
}

namespace {

// Dense rational coefficient vector for ordinary polynomials, used only for
// the Euclidean gcd below. Index = exponent.
using QPoly = std::vector<Rational>;

QPoly to_qpoly(const LaurentPoly& p) {
    QPoly out(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        out[static_cast<std::size_t>(e)] = Rational(c);
    }
    return out;
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Remainder of a by b (b nonzero), over Q.
QPoly qpoly_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= factor * b[i];
        }
        trim(a);
    }
    return a;
}

LaurentPoly primitive_from_qpoly(const QPoly& p) {
    // Clear denominators, then divide by content; positive leading coeff.
    Int lcm(1);
    for (const auto& q : p) {
        Int den = rational_den(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    LaurentPoly out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int c = rational_num(p[i] * Rational(lcm));
        out = out + LaurentPoly::monomial(c, static_cast<long>(i));
    }
    if (out.is_zero()) {
        return out;
    }
    Int cont = out.content();
    if (out.leading_coeff() < 0) {
        cont = -cont;
    }
    LaurentPoly reduced;
    for (const auto& [e, c] : out.terms()) {
        reduced = reduced + LaurentPoly::monomial(c / cont, e);
    }
    return reduced;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        return LaurentPoly();
    }
    if (a.is_zero()) {
        return laurent_gcd(b, a);
    }
    if (!b.is_zero() && (a.order() < 0 || b.order() < 0)) {
        throw Error(ErrorKind::BadArgument, "laurent_gcd requires ordinary polynomials");
    }
    if (a.order() < 0) {
        throw Error(ErrorKind::BadArgument, "laurent_gcd requires ordinary polynomials");
    }
    if (b.is_zero()) {
        return primitive_from_qpoly(to_qpoly(a));
    }
    QPoly x = to_qpoly(a);
    QPoly y = to_qpoly(b);
    while (!y.empty()) {
        QPoly r = qpoly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_from_qpoly(x);
}

LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "exact division by zero polynomial");
    }
    if (a.is_zero()) {
        return LaurentPoly();
    }
    // Shift both to ordinary polynomials, divide over Q, shift back.
    long sa = a.order();
    long sb = b.order();
    QPoly x = to_qpoly(a.shifted(-sa));
    QPoly y = to_qpoly(b.shifted(-sb));
    QPoly quot(x.size() >= y.size() ? x.size() - y.size() + 1 : 0, Rational(0));
    while (x.size() >= y.size() && !x.empty()) {
        Rational factor = x.back() / y.back();
        std::size_t shift = x.size() - y.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < y.size(); ++i) {
            x[i + shift] -= factor * y[i];
        }
        trim(x);
    }
    if (!x.empty()) {
        throw Error(ErrorKind::BadArgument, "inexact polynomial division");
    }
    LaurentPoly out;
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (rational_den(quot[i]) != 1) {
            throw Error(ErrorKind::BadArgument, "inexact polynomial division");
        }
        out = out + LaurentPoly::monomial(rational_num(quot[i]), static_cast<long>(i));
    }
    return out.shifted(sa - sb);
}

} // namespace twinrep
