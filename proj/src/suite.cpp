#include "twinrep/suite.hpp"

#include <chrono>
#include <random>

namespace twinrep {

bool SuiteReport::overall_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

LaurentPoly random_poly(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<int> term_count(nonzero ? 1 : 0, 3);
    std::uniform_int_distribution<long> exponent(-2, 2);
    std::uniform_int_distribution<long> coefficient(-3, 3);
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

bool contains_all_ones(const std::vector<QVector>& basis, std::size_t d) {
    QVector ones(d, Rational(1));
    for (const auto& v : basis) {
        if (v == ones) {
            return true;
        }
    }
    return false;
}

json check_jacobian_reconstruction(int n_max, bool& pass) {
    json detail = json::object();
    int compared = 0;
    for (int n = 2; n <= n_max; ++n) {
        MatrixRep rep = eta1_matrix(n);
        for (int i = 1; i <= n - 1; ++i) {
            RfMatrix specialized =
                to_rf_matrix(magnus_specialize(jacobian_matrix(eta1_automorphism(n, i))));
            if (specialized != rep.s_image(i)) {
                pass = false;
                detail["mismatch"] = json{{"n", n}, {"i", i}};
                return detail;
            }
            ++compared;
        }
    }
    detail["images_compared"] = compared;
    return detail;
}

json check_relation_suites(int n_max, bool inject_fault, bool& pass) {
    json detail = json::object();
    json failures = json::array();
    auto run = [&](const MatrixRep& rep, const Presentation& p) {
        RelationReport report = verify_relations(rep, p);
        if (!report.all_hold()) {
            pass = false;
            for (const auto& c : report.checks) {
                if (!c.holds) {
                    failures.push_back(json{{"representation", report.representation},
                                            {"presentation", report.presentation},
                                            {"relation", c.label}});
                }
            }
        }
    };

    LaurentPoly one(1);
    LaurentPoly t = LaurentPoly::t();
    for (int n = 2; n <= n_max; ++n) {
        Presentation tn = build_presentation(GroupKind::T, n);
        if (inject_fault && n == 3) {
            // deliberately corrupted copy of eta1: entry (1,1) off by one
            MatrixRep good = eta1_matrix(n);
            std::vector<RfMatrix> images;
            for (int i = 1; i <= n - 1; ++i) {
                images.push_back(good.s_image(i));
            }
            images[0].at(0, 0) = images[0].at(0, 0) + RatFunc(1);
            MatrixRep corrupted(GroupKind::T, n, std::move(images), {}, "eta1-corrupted", {},
                                false);
            run(corrupted, tn);
        } else {
            run(eta1_matrix(n), tn);
        }
        for (const LaurentPoly& f : {one, t, one + t}) {
            run(eta2_matrix(n, f), tn);
        }
    }
    for (int n = 3; n <= n_max; ++n) {
        Presentation vtn = build_presentation(GroupKind::VT, n);
        for (const LaurentPoly& b : {one, t, LaurentPoly::t(-1)}) {
            run(vt_extension_eta1(n, b), vtn);
        }
        Presentation wtn = build_presentation(GroupKind::WT, n);
        for (const auto& [f, g] : std::vector<std::pair<LaurentPoly, LaurentPoly>>{
                 {one, one}, {t, one}, {t, one + t}}) {
            run(vt_wt_extension_eta2(n, f, g), wtn);
        }
    }
    if (!failures.empty()) {
        detail["violations"] = failures;
    }
    return detail;
}

json check_reducibility_witness(int n_max, bool& pass) {
    json detail = json::object();
    for (int n = 2; n <= n_max; ++n) {
        MatrixRep rep = eta1_matrix(n);
        for (const Rational& t0 : {Rational(3), Rational(1, 2)}) {
            if (!contains_all_ones(common_fixed_vectors(rep, t0), rep.degree())) {
                pass = false;
                detail["missing_at"] = json{{"n", n}, {"t", format_rational(t0)}};
                return detail;
            }
        }
    }
    detail["checked_n_up_to"] = n_max;
    return detail;
}

json check_irreducibility_grid(int n_max, bool& pass) {
    json detail = json::object();
    json rows = json::array();
    std::vector<Rational> base{Rational(-3), Rational(-2), Rational(-1), Rational(1, 2),
                               Rational(1),  Rational(3, 2), Rational(2), Rational(3),
                               Rational(4),  Rational(5)};
    for (int n = 3; n <= n_max; ++n) {
        std::vector<Rational> grid = base;
        Rational excluded = irreducibility_excluded_point(n);
        bool present = false;
        for (const auto& q : grid) {
            if (q == excluded) {
                present = true;
            }
        }
        if (!present) {
            grid.push_back(excluded);
        }
        for (const auto& t0 : grid) {
            try {
                IrreducibilityVerdict v = check_irreducibility_criterion(n, t0);
                rows.push_back(json{{"n", n},
                                    {"t", format_rational(t0)},
                                    {"dim", v.algebra_dim},
                                    {"verdict", v.absolutely_irreducible
                                                    ? "absolutely-irreducible"
                                                    : "reducible"}});
            } catch (const Error& e) {
                pass = false;
                detail["error"] = json{{"n", n}, {"t", format_rational(t0)}, {"what", e.what()}};
                return detail;
            }
        }
    }
    detail["grid"] = rows;
    return detail;
}

json check_faithfulness_bound(bool& pass) {
    json detail = json::object();
    MatrixRep rep = eta1_matrix(3);
    std::vector<TwinWord> kernel = kernel_search(rep, 14);
    detail["kernel_words_up_to_14"] = kernel.size();
    if (!kernel.empty()) {
        pass = false;
        return detail;
    }
    TwinWord s1s2 = make_s_word(GroupKind::T, 3, {1, 2});
    RfMatrix acc = RfMatrix::identity(3);
    RfMatrix step = evaluate_word(rep, s1s2);
    for (int r = 1; r <= 7; ++r) {
        acc = acc * step;
        if (acc.is_identity()) {
            pass = false;
            detail["power_equal_identity"] = r;
            return detail;
        }
    }
    detail["alternating_powers_checked"] = 7;
    return detail;
}

json check_eta2_unfaithfulness(int n_max, bool& pass) {
    json detail = json::object();
    LaurentPoly one(1);
    LaurentPoly t = LaurentPoly::t();
    LaurentPoly two_t2 = LaurentPoly::monomial(2, 2);
    int verified = 0;
    for (int n = 3; n <= std::min(n_max, 4); ++n) {
        for (const LaurentPoly& f : {one, t, two_t2}) {
            MatrixRep rep = eta2_matrix(n, f);
            for (int i = 1; i <= n - 2; ++i) {
                TwinWord cube =
                    make_s_word(GroupKind::T, n, {i, i + 1, i, i + 1, i, i + 1});
                if (!evaluate_word(rep, cube).is_identity()) {
                    pass = false;
                    detail["not_identity"] = json{{"n", n}, {"i", i}, {"f", f.to_string()}};
                    return detail;
                }
                ++verified;
            }
        }
    }
    std::vector<TwinWord> kernel = kernel_search(eta2_matrix(3, one), 6);
    detail["cube_identities"] = verified;
    detail["kernel_words_n3_len6"] = kernel.size();
    if (kernel.empty()) {
        pass = false;
    }
    return detail;
}

json check_t2_roundtrip(std::mt19937_64& rng, bool& pass) {
    json detail = json::object();
    std::uniform_int_distribution<int> family_dist(1, 5);
    int trials = 120;
    for (int k = 0; k < trials; ++k) {
        int family = family_dist(rng);
        T2FamilyParams params;
        params.a = random_poly(rng, false);
        params.b = random_poly(rng, true);
        params.c = random_poly(rng, false);
        MatrixRep rep = two_local_family_T2(family, params);
        const RfMatrix& rho = rep.rho_image(1);
        if (!(rho * rho).is_identity()) {
            pass = false;
            detail["not_involution_family"] = family;
            return detail;
        }
        int tag = classify_involution_2x2(rho);
        if (tag != family) {
            pass = false;
            detail["tag_mismatch"] = json{{"family", family}, {"classified", tag}};
            return detail;
        }
    }
    detail["trials"] = trials;
    return detail;
}

json check_wt_obstruction(int n_max, bool& pass) {
    json detail = json::object();
    LaurentPoly one(1);
    LaurentPoly t = LaurentPoly::t();
    int obstructed_count = 0;
    for (int n = 3; n <= n_max; ++n) {
        for (const LaurentPoly& b : {one, t, one + t}) {
            WtObstructionOutcome outcome = wt_obstruction_check(n, b);
            if (!outcome.obstructed || !outcome.first_witness) {
                pass = false;
                detail["unobstructed"] = json{{"n", n}, {"b", b.to_string()}};
                return detail;
            }
            ++obstructed_count;
        }
    }
    detail["cases"] = obstructed_count;
    return detail;
}

json check_fox_identity(std::mt19937_64& rng, bool& pass) {
    json detail = json::object();
    std::uniform_int_distribution<int> rank_dist(2, 5);
    std::uniform_int_distribution<int> len_dist(0, 12);
    int trials = 500;
    for (int k = 0; k < trials; ++k) {
        int rank = rank_dist(rng);
        std::uniform_int_distribution<int> gen_dist(1, rank);
        std::uniform_int_distribution<int> sign_dist(0, 1);
        std::vector<std::pair<int, long>> letters;
        int len = len_dist(rng);
        for (int j = 0; j < len; ++j) {
            letters.emplace_back(gen_dist(rng), sign_dist(rng) == 0 ? 1 : -1);
        }
        FreeWord w = FreeWord::from_letters(rank, letters);
        GroupRingElt sum(rank);
        for (int gen = 1; gen <= rank; ++gen) {
            GroupRingElt xk_minus_1 =
                GroupRingElt::from_word(FreeWord::generator(rank, gen)) -
                GroupRingElt::one(rank);
            sum = sum + fox_derivative(w, gen) * xk_minus_1;
        }
        GroupRingElt expected = GroupRingElt::from_word(w) - GroupRingElt::one(rank);
        if (sum != expected) {
            pass = false;
            detail["failing_word"] = w.to_string();
            return detail;
        }
    }
    detail["trials"] = trials;
    return detail;
}

} // namespace

SuiteReport verify_paper_suite(int n_max, const SuiteOptions& options) {
    if (n_max < 3) {
        throw Error(ErrorKind::BadArgument, "n_max must be at least 3");
    }
    std::mt19937_64 rng(options.seed);
    SuiteReport report{n_max, {}};

    auto run = [&](const std::string& id, const std::string& label, auto&& body) {
        bool pass = true;
        auto start = Clock::now();
        json detail = body(pass);
        auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        report.checks.push_back({id, label, pass, std::move(detail), elapsed.count()});
    };

    run("jacobian-reconstruction",
        "Magnus specialization of the Fox Jacobian reproduces the matrix form of eta1",
        [&](bool& pass) { return check_jacobian_reconstruction(n_max, pass); });
    run("relation-suites",
        "eta1/eta2 satisfy the twin relations; the VT and WT extension families satisfy theirs",
        [&](bool& pass) { return check_relation_suites(n_max, options.inject_fault, pass); });
    run("reducibility-witness", "the all-ones vector is fixed by every eta1 generator image",
        [&](bool& pass) { return check_reducibility_witness(n_max, pass); });
    run("irreducibility-grid",
        "the composition factor is absolutely irreducible exactly away from t = 2 and (2n-2)/(n-2)",
        [&](bool& pass) { return check_irreducibility_grid(n_max, pass); });
    run("faithfulness-bound-n3",
        "no nontrivial kernel element of eta1 on three strands up to length 14",
        [&](bool& pass) { return check_faithfulness_bound(pass); });
    run("eta2-unfaithfulness", "(s_i s_{i+1})^3 lies in the kernel of every eta2 specialization",
        [&](bool& pass) { return check_eta2_unfaithfulness(n_max, pass); });
    run("t2-classification-roundtrip",
        "the five two-strand involution families square to I and classify back to their tag",
        [&](bool& pass) { return check_t2_roundtrip(rng, pass); });
    run("wt-obstruction", "no 2-local extension of eta1 satisfies the welded relation (8)",
        [&](bool& pass) { return check_wt_obstruction(n_max, pass); });
    run("fox-fundamental-identity", "sum_k D_k(w) (x_k - 1) = w - 1 on random reduced words",
        [&](bool& pass) { return check_fox_identity(rng, pass); });

    return report;
}

} // namespace twinrep
