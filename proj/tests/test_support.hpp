#pragma once

#include <cstdlib>
#include <random>

#include "twinrep/laurent.hpp"

namespace twinrep::test {

inline unsigned long seed_from_env(unsigned long fallback = 20260810UL) {
    if (const char* env = std::getenv("TWINREP_SEED")) {
        return std::strtoul(env, nullptr, 10);
    }
    return fallback;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 4, long max_abs_exp = 3,
                                  long max_abs_coeff = 5, bool nonzero = false) {
    std::uniform_int_distribution<int> term_count(nonzero ? 1 : 0, max_terms);
    std::uniform_int_distribution<long> exponent(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long> coefficient(-max_abs_coeff, max_abs_coeff);
    for (;;) {
        LaurentPoly p;
        int terms = term_count(rng);
        for (int k = 0; k < terms; ++k) {
            p = p + LaurentPoly::monomial(Int(coefficient(rng)), exponent(rng));
        }
        if (!nonzero || !p.is_zero()) {
            return p;
        }
    }
}

} // namespace twinrep::test
