#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twinrep/json_io.hpp"
#include "twinrep/suite.hpp"

namespace {

using namespace twinrep;

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

int usage_exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::BadArgument:
    case ErrorKind::BadStrandCount:
    case ErrorKind::ZeroScalar:
    case ErrorKind::BadFamilyTag:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::KindMismatch:
    case ErrorKind::RankMismatch:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::ZeroSpecialization:
    case ErrorKind::PoleAtPoint:
    case ErrorKind::DivisionByZero:
    case ErrorKind::NonUnitNegativePower:
        return kExitUsage;
    case ErrorKind::NotInvolution:
    case ErrorKind::UnclassifiableInvolution:
    case ErrorKind::CriterionMismatch:
    case ErrorKind::BlockStructureViolation:
        return kExitMathFail;
    }
    return kExitMathFail;
}

struct RepOptions {
    std::string tag = "eta1";
    int n = 2;
    std::string f = "t";
    std::string b = "t";
    std::string g = "1";
    std::string a = "0";
    std::string c = "0";
    int family = 1;
};

void add_rep_options(CLI::App* cmd, RepOptions& opts) {
    cmd->add_option("--rep", opts.tag, "representation: eta1|eta1p|eta2|vt1|t2fam|vtwt2")
        ->check(CLI::IsMember({"eta1", "eta1p", "eta2", "vt1", "t2fam", "vtwt2"}));
    cmd->add_option("--n", opts.n, "strand count");
    cmd->add_option("--f", opts.f, "scalar f(t) for eta2/vtwt2 (canonical polynomial string)");
    cmd->add_option("--b", opts.b, "scalar b(t) for vt1 / family 1");
    cmd->add_option("--g", opts.g, "scalar g(t) for vtwt2");
    cmd->add_option("--a", opts.a, "scalar a(t) for family 1");
    cmd->add_option("--c", opts.c, "scalar c(t) for families 2 and 3");
    cmd->add_option("--family", opts.family, "T_2 extension family tag 1..5");
}

MatrixRep build_rep(const RepOptions& opts) {
    if (opts.tag == "eta1") {
        return eta1_matrix(opts.n);
    }
    if (opts.tag == "eta1p") {
        return eta1_composition_factor(opts.n);
    }
    if (opts.tag == "eta2") {
        return eta2_matrix(opts.n, parse_laurent(opts.f));
    }
    if (opts.tag == "vt1") {
        return vt_extension_eta1(opts.n, parse_laurent(opts.b));
    }
    if (opts.tag == "t2fam") {
        T2FamilyParams params{parse_laurent(opts.a), parse_laurent(opts.b),
                              parse_laurent(opts.c)};
        return two_local_family_T2(opts.family, params);
    }
    if (opts.tag == "vtwt2") {
        return vt_wt_extension_eta2(opts.n, parse_laurent(opts.f), parse_laurent(opts.g));
    }
    throw Error(ErrorKind::BadArgument, "unknown representation tag " + opts.tag);
}

std::string render_matrix_text(const RfMatrix& m, const std::string& indent) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r][c] = m.at(r, c).to_string();
            width[c] = std::max(width[c], cells[r][c].size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << indent << "[ ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) {
                out << "  ";
            }
            out << cells[r][c] << std::string(width[c] - cells[r][c].size(), ' ');
        }
        out << " ]\n";
    }
    return out.str();
}

GroupKind parse_kind(const std::string& name) {
    if (name == "T") {
        return GroupKind::T;
    }
    if (name == "VT") {
        return GroupKind::VT;
    }
    if (name == "WT") {
        return GroupKind::WT;
    }
    throw Error(ErrorKind::BadArgument, "unknown group kind " + name);
}

int cmd_emit(const RepOptions& opts, const std::string& format) {
    MatrixRep rep = build_rep(opts);
    if (format == "json") {
        json out = rep_descriptor_json(rep);
        json images = json::object();
        for (int i = 1; i <= rep.strands() - 1; ++i) {
            images["s" + std::to_string(i)] = matrix_to_json(rep.s_image(i));
        }
        if (rep.has_rho_images()) {
            for (int i = 1; i <= rep.strands() - 1; ++i) {
                images["r" + std::to_string(i)] = matrix_to_json(rep.rho_image(i));
            }
        }
        out["images"] = std::move(images);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << rep.describe() << ", degree " << rep.degree() << "\n";
    for (int i = 1; i <= rep.strands() - 1; ++i) {
        std::cout << "s" << i << ":\n" << render_matrix_text(rep.s_image(i), "  ");
    }
    if (rep.has_rho_images()) {
        for (int i = 1; i <= rep.strands() - 1; ++i) {
            std::cout << "r" << i << ":\n" << render_matrix_text(rep.rho_image(i), "  ");
        }
    }
    return kExitOk;
}

int cmd_check_relations(const RepOptions& opts, const std::string& against,
                        const std::string& format) {
    MatrixRep rep = build_rep(opts);
    GroupKind kind = against.empty() ? rep.kind() : parse_kind(against);
    Presentation p = build_presentation(kind, rep.strands());
    RelationReport report = verify_relations(rep, p);
    if (format == "json") {
        std::cout << relation_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "representation: " << report.representation << "\n";
        std::cout << "presentation:   " << report.presentation << "\n";
        for (const auto& c : report.checks) {
            std::cout << "  " << (c.holds ? "ok      " : "VIOLATED") << "  " << c.label << "  "
                      << c.lhs_word << " = " << c.rhs_word << "\n";
        }
        std::cout << (report.all_hold() ? "all relations hold"
                                        : std::to_string(report.violation_count()) +
                                              " relation(s) violated")
                  << "\n";
    }
    return report.all_hold() ? kExitOk : kExitMathFail;
}

int cmd_irreducible(int n, const std::string& t_text, const std::string& format) {
    Rational t0 = parse_rational(t_text);
    IrreducibilityVerdict verdict = check_irreducibility_criterion(n, t0);
    if (format == "json") {
        std::cout << verdict_to_json(verdict).dump(2) << "\n";
    } else {
        std::cout << "n = " << verdict.n << ", t = " << format_rational(verdict.t0) << "\n";
        std::cout << "algebra dimension = " << verdict.algebra_dim << " of "
                  << (n - 1) * (n - 1) << "\n";
        std::cout << "verdict: "
                  << (verdict.absolutely_irreducible ? "absolutely-irreducible" : "reducible")
                  << "\n";
        if (verdict.witness) {
            std::cout << "witness: (";
            for (std::size_t k = 0; k < verdict.witness->direction.size(); ++k) {
                std::cout << (k ? ", " : "") << format_rational(verdict.witness->direction[k]);
            }
            std::cout << ") side=" << (verdict.witness->row_side ? "row" : "column") << " signs=(";
            for (std::size_t k = 0; k < verdict.witness->signs.size(); ++k) {
                std::cout << (k ? "," : "") << (verdict.witness->signs[k] > 0 ? "+1" : "-1");
            }
            std::cout << ")\n";
        }
    }
    return kExitOk;
}

int cmd_kernel_search(const RepOptions& opts, int maxlen, const std::string& format) {
    MatrixRep rep = build_rep(opts);
    std::vector<TwinWord> kernel = kernel_search(rep, maxlen);
    if (format == "json") {
        json words = json::array();
        for (const auto& w : kernel) {
            words.push_back(json{{"word", w.to_string()}, {"letters", twinword_to_json(w)}});
        }
        json out{{"representation", rep.describe()},
                 {"maxlen", maxlen},
                 {"kernel_words", std::move(words)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.describe() << ", kernel words up to length " << maxlen << ":\n";
        if (kernel.empty()) {
            std::cout << "  (none)\n";
        }
        for (const auto& w : kernel) {
            std::cout << "  " << w.to_string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_fox_jacobian(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::BadArgument, "cannot open " + path);
    }
    std::vector<std::string> image_texts;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) {
            continue;
        }
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos) {
            throw Error(ErrorKind::BadArgument, "expected 'xi -> word' in line: " + line);
        }
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        std::size_t x = lhs.find('x');
        if (x == std::string::npos) {
            throw Error(ErrorKind::BadArgument, "expected generator on the left of '->'");
        }
        int index = std::atoi(lhs.substr(x + 1).c_str());
        if (index != static_cast<int>(image_texts.size()) + 1) {
            throw Error(ErrorKind::BadArgument,
                        "generator images must be listed in order x1, x2, ...");
        }
        image_texts.push_back(rhs);
    }
    int rank = static_cast<int>(image_texts.size());
    if (rank == 0) {
        throw Error(ErrorKind::BadArgument, "no generator images found");
    }
    std::vector<FreeWord> images;
    images.reserve(image_texts.size());
    for (const auto& text : image_texts) {
        images.push_back(parse_freeword(text, rank));
    }
    FreeAut phi(rank, std::move(images));
    GroupRingMatrix jac = jacobian_matrix(phi);
    LaurentMatrix magnus = magnus_specialize(jac);

    if (format == "json") {
        json jac_json = json::array();
        json magnus_json = json::array();
        for (int r = 0; r < rank; ++r) {
            json jrow = json::array();
            json mrow = json::array();
            for (int c = 0; c < rank; ++c) {
                jrow.push_back(jac[r][c].to_string());
                mrow.push_back(magnus[r][c].to_string());
            }
            jac_json.push_back(std::move(jrow));
            magnus_json.push_back(std::move(mrow));
        }
        json out{{"rank", rank}, {"jacobian", std::move(jac_json)},
                 {"magnus", std::move(magnus_json)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "rank " << rank << "\n";
        std::cout << "jacobian (entry r,k = D_k of image of x_r):\n";
        for (int r = 0; r < rank; ++r) {
            for (int c = 0; c < rank; ++c) {
                std::cout << "  J[" << (r + 1) << "][" << (c + 1) << "] = "
                          << jac[r][c].to_string() << "\n";
            }
        }
        std::cout << "magnus specialization (x_i -> t):\n"
                  << render_matrix_text(to_rf_matrix(magnus), "  ");
    }
    return kExitOk;
}

int cmd_classify_t2(const std::vector<std::string>& entries, const std::string& format) {
    RfMatrix m(2, 2);
    m.at(0, 0) = parse_ratfunc(entries[0]);
    m.at(0, 1) = parse_ratfunc(entries[1]);
    m.at(1, 0) = parse_ratfunc(entries[2]);
    m.at(1, 1) = parse_ratfunc(entries[3]);
    int family = classify_involution_2x2(m);
    if (format == "json") {
        std::cout << json{{"family", family}}.dump(2) << "\n";
    } else {
        std::cout << "family " << family << "\n";
    }
    return kExitOk;
}

int cmd_wt_obstruction(int n, const std::string& b_text, const std::string& format) {
    WtObstructionOutcome outcome = wt_obstruction_check(n, parse_laurent(b_text));
    if (format == "json") {
        std::cout << obstruction_to_json(outcome).dump(2) << "\n";
    } else {
        std::cout << "welded relation (8) under the VT extension of eta1, n = " << n
                  << ", b = " << b_text << "\n";
        for (const auto& d : outcome.details) {
            std::cout << "  i=" << d.i << ": relation (8) "
                      << (d.relation8_holds ? "holds" : "fails");
            if (d.witness) {
                std::cout << "; first differing entry (" << (d.witness->row + 1) << ","
                          << (d.witness->col + 1) << "): lhs = " << d.witness->lhs.to_string()
                          << ", rhs = " << d.witness->rhs.to_string();
            }
            std::cout << "\n";
        }
        std::cout << "obstructed: " << (outcome.obstructed ? "yes" : "no") << "\n";
    }
    // the obstruction is the expected outcome; its absence is the anomaly
    return outcome.obstructed ? kExitOk : kExitMathFail;
}

int cmd_verify_paper(int n_max, unsigned long seed, bool inject_fault,
                     const std::string& format) {
    SuiteOptions options;
    options.seed = seed;
    options.inject_fault = inject_fault;
    SuiteReport report = verify_paper_suite(n_max, options);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back(json{{"id", c.id},
                                  {"label", c.label},
                                  {"pass", c.pass},
                                  {"detail", c.detail}});
        }
        json out{{"n_max", report.n_max},
                 {"checks", std::move(checks)},
                 {"overall_pass", report.overall_pass()}};
        std::cout << out.dump(2) << "\n";
    } else {
        long total = 0;
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  (" << c.millis
                      << " ms)\n       " << c.label << "\n";
            if (!c.pass) {
                std::cout << "       detail: " << c.detail.dump() << "\n";
            }
            total += c.millis;
        }
        std::cout << "overall: " << (report.overall_pass() ? "PASS" : "FAIL") << " ("
                  << report.checks.size() << " checks, " << total << " ms, n_max = "
                  << report.n_max << ")\n";
    }
    return report.overall_pass() ? kExitOk : kExitMathFail;
}

unsigned long default_seed() {
    if (const char* env = std::getenv("TWINREP_SEED")) {
        return std::strtoul(env, nullptr, 10);
    }
    return SuiteOptions{}.seed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with twin-group representations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    RepOptions rep_opts;
    auto* emit = app.add_subcommand("emit", "print a representation's generator images");
    add_rep_options(emit, rep_opts);

    RepOptions check_opts;
    std::string against;
    auto* check = app.add_subcommand("check-relations",
                                     "evaluate every defining relation under a representation");
    add_rep_options(check, check_opts);
    check->add_option("--against", against, "presentation to check against: T|VT|WT")
        ->check(CLI::IsMember({"T", "VT", "WT"}));

    int irr_n = 3;
    std::string irr_t = "1";
    auto* irreducible =
        app.add_subcommand("irreducible", "irreducibility of the composition factor at t");
    irreducible->add_option("--n", irr_n, "strand count (n >= 3)")->required();
    irreducible->add_option("--t", irr_t, "specialization point, \"p\" or \"p/q\"")->required();

    RepOptions kernel_opts;
    int maxlen = 6;
    auto* kernel = app.add_subcommand("kernel-search",
                                      "identity-image words of bounded length");
    add_rep_options(kernel, kernel_opts);
    kernel->add_option("--maxlen", maxlen, "maximum word length")->required();

    std::string fox_input;
    auto* fox = app.add_subcommand("fox-jacobian",
                                   "Jacobian of a free-group substitution given as 'xi -> word' lines");
    fox->add_option("--input", fox_input, "input file")->required();

    std::vector<std::string> m_entries{"1", "0", "0", "1"};
    auto* classify = app.add_subcommand("classify-t2", "family tag of a 2x2 involution");
    classify->add_option("--m00", m_entries[0], "entry (1,1)")->required();
    classify->add_option("--m01", m_entries[1], "entry (1,2)")->required();
    classify->add_option("--m10", m_entries[2], "entry (2,1)")->required();
    classify->add_option("--m11", m_entries[3], "entry (2,2)")->required();

    int wt_n = 3;
    std::string wt_b = "1";
    auto* wt = app.add_subcommand("wt-obstruction",
                                  "welded relation (8) failure for the VT extension of eta1");
    wt->add_option("--n", wt_n, "strand count (n >= 3)")->required();
    wt->add_option("--b", wt_b, "extension scalar b(t)");

    int n_max = 5;
    unsigned long seed = default_seed();
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
    verify->add_option("--n-max", n_max, "largest strand count to verify (>= 3)")->required();
    verify->add_option("--seed", seed, "seed for the randomized checks");
    verify->add_flag("--inject-fault", inject_fault, "corrupt one eta1 entry (harness hook)")
        ->group("");  // hidden

    // let --format (and friends) appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (emit->parsed()) {
            return cmd_emit(rep_opts, format);
        }
        if (check->parsed()) {
            return cmd_check_relations(check_opts, against, format);
        }
        if (irreducible->parsed()) {
            return cmd_irreducible(irr_n, irr_t, format);
        }
        if (kernel->parsed()) {
            return cmd_kernel_search(kernel_opts, maxlen, format);
        }
        if (fox->parsed()) {
            return cmd_fox_jacobian(fox_input, format);
        }
        if (classify->parsed()) {
            return cmd_classify_t2(m_entries, format);
        }
        if (wt->parsed()) {
            return cmd_wt_obstruction(wt_n, wt_b, format);
        }
        if (verify->parsed()) {
            if (n_max < 3) {
                std::cerr << "error: --n-max must be at least 3\n";
                return kExitUsage;
            }
            return cmd_verify_paper(n_max, seed, inject_fault, format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFail;
    }
    return kExitUsage;
}
