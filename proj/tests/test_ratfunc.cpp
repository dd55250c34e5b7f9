#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "twinrep/ratfunc.hpp"

using namespace twinrep;
using twinrep::test::random_laurent;

namespace {

RatFunc random_ratfunc(std::mt19937_64& rng) {
    return RatFunc(random_laurent(rng), random_laurent(rng, 3, 2, 4, /*nonzero=*/true));
}

} // namespace

TEST_CASE("inverse of the unit t") {
    RatFunc inv = RatFunc(LaurentPoly::t()).inverse();
    // stored as num = 1, den = t? the denominator must have order 0, so the
    // unit moves to the numerator: 1/t = t^-1.
    CHECK(inv == RatFunc(LaurentPoly::t(-1)));
    CHECK(inv.den().is_one());
}

TEST_CASE("field axiom b * (1/b) = 1") {
    RatFunc b(LaurentPoly(1) + LaurentPoly::t());
    CHECK(b * b.inverse() == RatFunc(1));
}

TEST_CASE("extension-family constraint a^2 + b*c = 1") {
    // c = (1 - a^2)/b with a = t, b = 1 + t; fraction-field oracle.
    RatFunc a(LaurentPoly::t());
    RatFunc b(LaurentPoly(1) + LaurentPoly::t());
    RatFunc c = (RatFunc(1) - a * a) / b;
    CHECK(c * b + a * a == RatFunc(1));
}

TEST_CASE("normalization invariants") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 400; ++k) {
        RatFunc q = random_ratfunc(rng);
        if (q.is_zero()) {
            CHECK(q.den().is_one());
            continue;
        }
        CHECK(q.den().order() == 0);
        CHECK(q.den().leading_coeff() > 0);
        Int shared = boost::multiprecision::gcd(q.num().content(), q.den().content());
        CHECK(shared == 1);
        // idempotent: renormalizing the stored pair changes nothing
        CHECK(RatFunc(q.num(), q.den()) == q);
    }
}

TEST_CASE("equality agrees with cross multiplication") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 400; ++k) {
        RatFunc a = random_ratfunc(rng);
        RatFunc b = random_ratfunc(rng);
        bool cross = a.num() * b.den() == b.num() * a.den();
        CHECK(cross == (a == b));
        // scaling numerator and denominator together is invisible
        LaurentPoly s = random_laurent(rng, 2, 1, 3, /*nonzero=*/true);
        CHECK(RatFunc(a.num() * s, a.den() * s) == a);
    }
}

TEST_CASE("field arithmetic on random values") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 200; ++k) {
        RatFunc a = random_ratfunc(rng);
        RatFunc b = random_ratfunc(rng);
        RatFunc c = random_ratfunc(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc(0));
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
        }
    }
}

TEST_CASE("division by zero raises") {
    try {
        RatFunc(1) / RatFunc(0);
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    CHECK_THROWS_AS(RatFunc(0).inverse(), Error);
    CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), Error);
}

TEST_CASE("gcd reduction on parse") {
    RatFunc reduced = parse_ratfunc("(1 - t^2)/(1 + t)");
    CHECK(reduced == parse_ratfunc("1 - t"));
    CHECK(reduced.to_string() == "1 - t");
}

TEST_CASE("format round-trips") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 200; ++k) {
        RatFunc q = random_ratfunc(rng);
        CHECK(parse_ratfunc(q.to_string()) == q);
        CHECK(parse_ratfunc(q.to_string()).to_string() == q.to_string());
    }
    // the denominator is normalized to a positive leading coefficient
    CHECK(parse_ratfunc("(1)/(2 - t)").to_string() == "(-1)/(-2 + t)");
    CHECK(parse_ratfunc("(2)/(-4 + 2*t)").to_string() == "(1)/(-2 + t)");
}

TEST_CASE("evaluation with poles") {
    RatFunc q = parse_ratfunc("(1)/(2 - t)");
    CHECK(q.eval(Rational(3)) == Rational(-1));
    try {
        q.eval(Rational(2));
        FAIL("expected PoleAtPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
    try {
        q.eval(Rational(0));
        FAIL("expected ZeroSpecialization");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroSpecialization);
    }
}

TEST_CASE("excluded irreducibility point as a rational, n = 4") {
    // (2n-2)/(n-2) at n = 4
    Rational q(2 * 4 - 2, 4 - 2);
    CHECK(q == Rational(3));
    CHECK(format_rational(q) == "3");
}
