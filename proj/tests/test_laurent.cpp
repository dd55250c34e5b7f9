#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "twinrep/laurent.hpp"

using namespace twinrep;
using twinrep::test::random_laurent;

namespace {

// Independent schoolbook multiplication over dense coefficient arrays,
// used as the oracle for LaurentPoly::operator*.
LaurentPoly convolution_oracle(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return LaurentPoly();
    }
    long ord = a.order() + b.order();
    long deg = a.degree() + b.degree();
    std::vector<Int> dense(static_cast<std::size_t>(deg - ord + 1), Int(0));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            dense[static_cast<std::size_t>(ea + eb - ord)] += ca * cb;
        }
    }
    LaurentPoly out;
    for (std::size_t k = 0; k < dense.size(); ++k) {
        out = out + LaurentPoly::monomial(dense[k], ord + static_cast<long>(k));
    }
    return out;
}

} // namespace

TEST_CASE("additive cancellation") {
    LaurentPoly t = LaurentPoly::t();
    CHECK(t + (LaurentPoly(1) - t) == LaurentPoly(1));
}

TEST_CASE("unit inverse under multiplication") {
    CHECK(LaurentPoly::t(1) * LaurentPoly::t(-1) == LaurentPoly(1));
}

TEST_CASE("product (1-t)(t-1) matches the convolution oracle") {
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly a = LaurentPoly(1) - t;
    LaurentPoly b = t - LaurentPoly(1);
    LaurentPoly expected = convolution_oracle(a, b);
    // frozen from the oracle: -t^2 + 2t - 1
    CHECK(expected.to_string() == "-1 + 2*t - t^2");
    CHECK(a * b == expected);
}

TEST_CASE("random products match the convolution oracle") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 300; ++k) {
        LaurentPoly a = random_laurent(rng);
        LaurentPoly b = random_laurent(rng);
        CHECK(a * b == convolution_oracle(a, b));
    }
}

TEST_CASE("powers") {
    LaurentPoly t = LaurentPoly::t();
    CHECK(laurent_pow(t, 0) == LaurentPoly(1));
    CHECK(laurent_pow(LaurentPoly(1) + t, 2) == LaurentPoly(1) + LaurentPoly::monomial(2, 1) +
                                                    LaurentPoly::monomial(1, 2));
    CHECK(laurent_pow(LaurentPoly::monomial(-1, 2), -3) == LaurentPoly::monomial(-1, -6));
    CHECK(laurent_pow(t, -4) == LaurentPoly::t(-4));

    CHECK_THROWS_AS(laurent_pow(LaurentPoly(1) + t, -1), Error);
    try {
        laurent_pow(LaurentPoly::monomial(2, 1), -1);
        FAIL("expected NonUnitNegativePower");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonUnitNegativePower);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 1200; ++k) {
        LaurentPoly a = random_laurent(rng);
        LaurentPoly b = random_laurent(rng);
        LaurentPoly c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly());
    }
}

TEST_CASE("evaluation") {
    LaurentPoly t = LaurentPoly::t();
    CHECK((LaurentPoly(1) - t).eval(Rational(3)) == Rational(-2));
    CHECK(LaurentPoly::t(-1).eval(Rational(1, 2)) == Rational(2));
    try {
        t.eval(Rational(0));
        FAIL("expected ZeroSpecialization");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroSpecialization);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    std::uniform_int_distribution<long> pick(-4, 4);
    for (int k = 0; k < 400; ++k) {
        LaurentPoly a = random_laurent(rng);
        LaurentPoly b = random_laurent(rng);
        long p = pick(rng);
        long q = pick(rng);
        if (p == 0 || q == 0) {
            continue;
        }
        Rational t0 = make_rational(Int(p), Int(q));
        CHECK((a * b).eval(t0) == a.eval(t0) * b.eval(t0));
        CHECK((a + b).eval(t0) == a.eval(t0) + b.eval(t0));
    }
}

TEST_CASE("canonical parse and format") {
    LaurentPoly two_minus_t = parse_laurent("2 - t");
    CHECK(two_minus_t.coeff(0) == 2);
    CHECK(two_minus_t.coeff(1) == -1);
    CHECK(two_minus_t.to_string() == "2 - t");

    LaurentPoly tinv = parse_laurent("t^-1");
    CHECK(tinv == LaurentPoly::t(-1));
    CHECK(tinv.to_string() == "t^-1");

    CHECK(parse_laurent("0") == LaurentPoly());
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(parse_laurent("-1 + 2*t - t^2").to_string() == "-1 + 2*t - t^2");
    CHECK(parse_laurent("3*t^-2 + t") == LaurentPoly::monomial(3, -2) + LaurentPoly::t());
}

TEST_CASE("format round-trips on random values") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 500; ++k) {
        LaurentPoly p = random_laurent(rng, 6, 5, 9);
        std::string s = p.to_string();
        CHECK(parse_laurent(s) == p);
        CHECK(parse_laurent(s).to_string() == s);
    }
}

TEST_CASE("parser rejects malformed input with a position") {
    for (const char* bad : {"t +", "2 t", "t^^2", "1 + + t", "t^2 + t", "t + t"}) {
        CHECK_THROWS_AS(parse_laurent(bad), SyntaxError);
    }
    // leading zeros are decimal, not an octal prefix
    CHECK(parse_laurent("01018") == LaurentPoly(1018));
    CHECK_THROWS_AS(parse_laurent("t^99999999999999"), SyntaxError);
    try {
        parse_laurent("1 + t^3 + t^2");
        FAIL("expected SyntaxError for out-of-order exponents");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 10);
    }
}

TEST_CASE("gcd and exact division helpers") {
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly a = (LaurentPoly(1) - t) * (LaurentPoly(1) + t);
    LaurentPoly b = LaurentPoly(1) + t;
    CHECK(laurent_gcd(a, b) == b);
    CHECK(laurent_div_exact(a, b) == LaurentPoly(1) - t);
    // gcd is primitive with positive leading coefficient
    LaurentPoly c = LaurentPoly::monomial(-2, 0) + LaurentPoly::monomial(-2, 1);
    CHECK(laurent_gcd(c, c) == b);
}
