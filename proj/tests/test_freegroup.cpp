#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "twinrep/freegroup.hpp"
#include "twinrep/reps.hpp"

using namespace twinrep;

namespace {

FreeWord word(int rank, std::initializer_list<std::pair<int, long>> letters) {
    return FreeWord::from_letters(rank, std::vector<std::pair<int, long>>(letters));
}

FreeWord random_word(std::mt19937_64& rng, int rank, int maxlen) {
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> len(0, maxlen);
    std::vector<std::pair<int, long>> letters;
    int count = len(rng);
    for (int k = 0; k < count; ++k) {
        letters.emplace_back(gen(rng), sign(rng) == 0 ? 1 : -1);
    }
    return FreeWord::from_letters(rank, letters);
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(word(3, {{1, 1}, {1, -1}}).is_identity());
    CHECK(word(3, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == word(3, {{1, 2}}));
    CHECK(word(3, {{1, 1}, {2, -1}, {2, 1}, {1, -1}, {3, 1}}) == word(3, {{3, 1}}));
    CHECK(word(3, {{1, 1}, {2, 1}, {2, -1}, {1, 1}}).to_string() == "x1^2");
    try {
        word(2, {{3, 1}});
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
}

TEST_CASE("group operations") {
    CHECK(word(2, {{1, 1}, {2, 1}}) * word(2, {{2, -1}}) == word(2, {{1, 1}}));
    CHECK(word(2, {{1, 1}, {2, 1}, {1, -1}}).inverse() == word(2, {{1, 1}, {2, -1}, {1, -1}}));
    FreeWord w = word(2, {{1, 1}, {2, 1}, {1, -1}});
    CHECK((w * w.inverse()).is_identity());
    try {
        FreeWord(2) * FreeWord(3);
        FAIL("expected RankMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RankMismatch);
    }
}

TEST_CASE("word parsing and printing") {
    CHECK(parse_freeword("x1*x2^-1*x1", 2) == word(2, {{1, 1}, {2, -1}, {1, 1}}));
    CHECK(parse_freeword("1", 4).is_identity());
    CHECK(parse_freeword("x2^3", 2) == word(2, {{2, 3}}));
    CHECK(word(2, {{1, 1}, {2, -1}, {1, 1}}).to_string() == "x1*x2^-1*x1");
    CHECK_THROWS_AS(parse_freeword("x1**x2", 2), SyntaxError);
    CHECK_THROWS_AS(parse_freeword("y1", 2), SyntaxError);
    CHECK_THROWS_AS(parse_freeword("x99999999999999999999", 2), SyntaxError);
    CHECK_THROWS_AS(parse_freeword("x1^99999999999999999999", 2), SyntaxError);
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 200; ++k) {
        FreeWord w = random_word(rng, 4, 10);
        CHECK(parse_freeword(w.to_string(), 4) == w);
    }
}

TEST_CASE("eta1 substitution on generators") {
    FreeAut phi = eta1_automorphism(4, 1);
    CHECK(phi.apply(FreeWord::generator(4, 1)) == word(4, {{1, 1}, {2, 1}, {1, -1}}));
    CHECK(phi.apply(FreeWord::generator(4, 2)) ==
          word(4, {{1, 1}, {2, -1}, {1, 1}, {2, 1}, {1, -1}}));
    CHECK(phi.apply(FreeWord::generator(4, 3)) == FreeWord::generator(4, 3));
    CHECK(phi.apply(FreeWord::generator(4, 4)) == FreeWord::generator(4, 4));

    // applying twice fixes the moved generators (n = 2 mapping display)
    FreeAut psi = eta1_automorphism(2, 1);
    CHECK(psi.apply(psi.apply(FreeWord::generator(2, 1))) == FreeWord::generator(2, 1));
    CHECK(psi.apply(psi.apply(FreeWord::generator(2, 2))) == FreeWord::generator(2, 2));
    CHECK(psi.is_involution());
}

TEST_CASE("automorphism application is a homomorphism and eta1 an involution") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int n : {2, 3, 5}) {
        for (int i = 1; i <= n - 1; ++i) {
            FreeAut phi = eta1_automorphism(n, i);
            for (int k = 0; k < 40; ++k) {
                FreeWord u = random_word(rng, n, 8);
                FreeWord v = random_word(rng, n, 8);
                CHECK(phi.apply(u * v) == phi.apply(u) * phi.apply(v));
                CHECK(phi.apply(phi.apply(u)) == u);
            }
        }
    }
}

TEST_CASE("fox derivative base cases and products") {
    // D_i(x_i x_{i+1} x_i^-1) = 1 - x_i x_{i+1} x_i^-1, at i = 1, n = 2
    FreeWord s1x1 = word(2, {{1, 1}, {2, 1}, {1, -1}});
    GroupRingElt d1 = fox_derivative(s1x1, 1);
    GroupRingElt expected1 =
        GroupRingElt::one(2) - GroupRingElt::from_word(s1x1);
    CHECK(d1 == expected1);
    CHECK(d1.to_string() == "1 - x1*x2*x1^-1");

    // D_{i+1}(x_i x_{i+1} x_i^-1) = x_i
    CHECK(fox_derivative(s1x1, 2) == GroupRingElt::from_word(word(2, {{1, 1}})));

    // D_{i+1}(x_i x_{i+1}^-1 x_i x_{i+1} x_i^-1) = -x_i x_{i+1}^-1 + x_i x_{i+1}^-1 x_i
    FreeWord s1x2 = word(2, {{1, 1}, {2, -1}, {1, 1}, {2, 1}, {1, -1}});
    GroupRingElt d2 = fox_derivative(s1x2, 2);
    GroupRingElt expected2 = GroupRingElt::from_word(word(2, {{1, 1}, {2, -1}}), Int(-1)) +
                             GroupRingElt::from_word(word(2, {{1, 1}, {2, -1}, {1, 1}}));
    CHECK(d2 == expected2);
    CHECK(d2.to_string() == "-x1*x2^-1 + x1*x2^-1*x1");

    try {
        fox_derivative(s1x1, 3);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
}

TEST_CASE("fox derivative is Z-linear") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 100; ++k) {
        GroupRingElt a = GroupRingElt::from_word(random_word(rng, 3, 6), Int(2)) +
                         GroupRingElt::from_word(random_word(rng, 3, 6), Int(-1));
        GroupRingElt b = GroupRingElt::from_word(random_word(rng, 3, 6), Int(3));
        for (int gen = 1; gen <= 3; ++gen) {
            CHECK(fox_derivative(a + b, gen) == fox_derivative(a, gen) + fox_derivative(b, gen));
        }
    }
}

TEST_CASE("fundamental fox identity on random words") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 600; ++k) {
        int rank = 2 + static_cast<int>(rng() % 4);
        FreeWord w = random_word(rng, rank, 12);
        GroupRingElt sum(rank);
        for (int gen = 1; gen <= rank; ++gen) {
            GroupRingElt xk = GroupRingElt::from_word(FreeWord::generator(rank, gen));
            sum = sum + fox_derivative(w, gen) * (xk - GroupRingElt::one(rank));
        }
        CHECK(sum == GroupRingElt::from_word(w) - GroupRingElt::one(rank));
    }
}

TEST_CASE("jacobian of the identity automorphism") {
    GroupRingMatrix j = jacobian_matrix(FreeAut::identity(3));
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (r == c) {
                CHECK(j[r][c] == GroupRingElt::one(3));
            } else {
                CHECK(j[r][c].is_zero());
            }
        }
    }
}

TEST_CASE("jacobian central block of the eta1 substitution") {
    // n = 4, i = 2: block sits at rows/columns 2,3; rows 1 and 4 stay identity
    FreeAut phi = eta1_automorphism(4, 2);
    GroupRingMatrix j = jacobian_matrix(phi);

    FreeWord a = word(4, {{2, 1}, {3, 1}, {2, -1}});
    CHECK(j[1][1] == GroupRingElt::one(4) - GroupRingElt::from_word(a));
    CHECK(j[1][2] == GroupRingElt::from_word(word(4, {{2, 1}})));
    CHECK(j[2][1] == GroupRingElt::one(4) +
                         GroupRingElt::from_word(word(4, {{2, 1}, {3, -1}})) -
                         GroupRingElt::from_word(word(4, {{2, 1}, {3, -1}, {2, 1}, {3, 1}, {2, -1}})));
    CHECK(j[2][2] == GroupRingElt::from_word(word(4, {{2, 1}, {3, -1}}), Int(-1)) +
                         GroupRingElt::from_word(word(4, {{2, 1}, {3, -1}, {2, 1}})));

    // rows away from the block are Kronecker rows
    for (int c = 0; c < 4; ++c) {
        CHECK(j[0][c] == (c == 0 ? GroupRingElt::one(4) : GroupRingElt(4)));
        CHECK(j[3][c] == (c == 3 ? GroupRingElt::one(4) : GroupRingElt(4)));
    }
}

TEST_CASE("magnus specialization") {
    FreeWord a = word(2, {{1, 1}, {2, 1}, {1, -1}});
    GroupRingElt e1 = GroupRingElt::one(2) - GroupRingElt::from_word(a);
    CHECK(magnus_specialize(e1) == LaurentPoly(1) - LaurentPoly::t());

    FreeWord b5 = word(2, {{1, 1}, {2, -1}, {1, 1}, {2, 1}, {1, -1}});
    GroupRingElt e2 = GroupRingElt::one(2) +
                      GroupRingElt::from_word(word(2, {{1, 1}, {2, -1}})) -
                      GroupRingElt::from_word(b5);
    CHECK(magnus_specialize(e2) == LaurentPoly(2) - LaurentPoly::t());

    CHECK(magnus_specialize(GroupRingElt::one(2)) == LaurentPoly(1));
}

TEST_CASE("magnus specialization is a ring homomorphism") {
    std::mt19937_64 rng(twinrep::test::seed_from_env());
    for (int k = 0; k < 150; ++k) {
        GroupRingElt a = GroupRingElt::from_word(random_word(rng, 3, 6)) +
                         GroupRingElt::from_word(random_word(rng, 3, 6), Int(-2));
        GroupRingElt b = GroupRingElt::from_word(random_word(rng, 3, 6), Int(3)) +
                         GroupRingElt::one(3);
        CHECK(magnus_specialize(a * b) == magnus_specialize(a) * magnus_specialize(b));
        CHECK(magnus_specialize(a + b) == magnus_specialize(a) + magnus_specialize(b));
    }
}

TEST_CASE("augmentation extends linearly") {
    GroupRingElt e = GroupRingElt::from_word(word(2, {{1, 1}}), Int(2)) +
                     GroupRingElt::from_word(word(2, {{2, -1}}), Int(-5));
    CHECK(e.augmentation() == Int(-3));
    CHECK(GroupRingElt::from_word(word(2, {{1, 1}, {2, 1}})).augmentation() == Int(1));
}

TEST_CASE("shortlex term order in printing") {
    GroupRingElt e = GroupRingElt::from_word(word(2, {{1, 1}, {2, -1}, {1, 1}})) -
                     GroupRingElt::from_word(word(2, {{1, 1}, {2, -1}})) +
                     GroupRingElt::one(2).scaled(Int(2));
    CHECK(e.to_string() == "2 - x1*x2^-1 + x1*x2^-1*x1");
}
