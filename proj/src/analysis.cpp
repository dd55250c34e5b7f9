#include "twinrep/analysis.hpp"

#include <deque>

namespace twinrep {

bool RelationReport::all_hold() const {
    for (const auto& c : checks) {
        if (!c.holds) {
            return false;
        }
    }
    return true;
}

std::size_t RelationReport::violation_count() const {
    std::size_t count = 0;
    for (const auto& c : checks) {
        if (!c.holds) {
            ++count;
        }
    }
    return count;
}

RelationReport verify_relations(const MatrixRep& rep, const Presentation& p) {
    if (p.n != rep.strands()) {
        throw Error(ErrorKind::KindMismatch, "presentation strand count differs from representation");
    }
    if (p.kind != GroupKind::T && !rep.has_rho_images()) {
        throw Error(ErrorKind::KindMismatch,
                    "presentation uses rho generators but the representation has no rho images");
    }
    RelationReport report{p.name(), rep.describe(), {}};
    report.checks.reserve(p.relations.size());
    for (const auto& rel : p.relations) {
        RfMatrix lhs = evaluate_word(rep, rel.lhs);
        RfMatrix rhs = evaluate_word(rep, rel.rhs);
        bool holds = lhs == rhs;
        report.checks.push_back({rel.label, rel.lhs.to_string(), rel.rhs.to_string(), holds,
                                 std::move(lhs), std::move(rhs)});
    }
    return report;
}

namespace {

std::vector<QMatrix> specialized_images(const MatrixRep& rep, const Rational& t0) {
    std::vector<QMatrix> out;
    for (int i = 1; i <= rep.strands() - 1; ++i) {
        out.push_back(specialize(rep.s_image(i), t0));
    }
    if (rep.has_rho_images()) {
        for (int i = 1; i <= rep.strands() - 1; ++i) {
            out.push_back(specialize(rep.rho_image(i), t0));
        }
    }
    return out;
}

} // namespace

std::vector<QVector> common_fixed_vectors(const MatrixRep& rep, const Rational& t0) {
    std::vector<QMatrix> images = specialized_images(rep, t0);
    std::size_t d = rep.degree();
    QMatrix id = QMatrix::identity(d);
    std::vector<QMatrix> blocks;
    blocks.reserve(images.size());
    for (const auto& m : images) {
        blocks.push_back(m - id);
    }
    return nullspace(vstack(blocks));
}

std::optional<InvariantLineWitness> invariant_line_search(const MatrixRep& rep,
                                                          const Rational& t0) {
    std::vector<QMatrix> images = specialized_images(rep, t0);
    std::size_t d = rep.degree();
    QMatrix id = QMatrix::identity(d);
    for (const auto& m : images) {
        if (!(m * m == id)) {
            throw Error(ErrorKind::NotInvolution,
                        "a specialized generator image is not an involution at t = " +
                            format_rational(t0));
        }
    }
    std::size_t count = images.size();
    std::vector<QMatrix> transposes;
    transposes.reserve(count);
    for (const auto& m : images) {
        transposes.push_back(m.transpose());
    }

    // Intersection of +-1 eigenspaces, built generator by generator so an
    // empty partial intersection aborts the pattern early.
    auto intersect = [&](const std::vector<QMatrix>& mats,
                         const std::vector<int>& signs) -> std::vector<QVector> {
        std::vector<QMatrix> blocks;
        std::vector<QVector> basis;
        for (std::size_t g = 0; g < mats.size(); ++g) {
            QMatrix block = mats[g] - id;
            if (signs[g] < 0) {
                block = mats[g] + id;
            }
            blocks.push_back(std::move(block));
            basis = nullspace(vstack(blocks));
            if (basis.empty()) {
                return basis;
            }
        }
        return basis;
    };

    for (unsigned long mask = 0; mask < (1UL << count); ++mask) {
        std::vector<int> signs(count);
        for (std::size_t g = 0; g < count; ++g) {
            signs[g] = ((mask >> (count - 1 - g)) & 1UL) ? -1 : 1;
        }
        std::vector<QVector> column_basis = intersect(images, signs);
        if (!column_basis.empty()) {
            return InvariantLineWitness{column_basis.front(), signs, false};
        }
        std::vector<QVector> row_basis = intersect(transposes, signs);
        if (!row_basis.empty()) {
            return InvariantLineWitness{row_basis.front(), signs, true};
        }
    }
    return std::nullopt;
}

std::size_t algebra_dimension(const std::vector<QMatrix>& matrices) {
    if (matrices.empty()) {
        throw Error(ErrorKind::BadArgument, "algebra_dimension requires at least one matrix");
    }
    std::size_t d = matrices.front().rows();
    for (const auto& m : matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw Error(ErrorKind::DegreeMismatch, "matrices must share a common square degree");
        }
    }

    auto flatten = [d](const QMatrix& m) {
        QVector v;
        v.reserve(d * d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                v.push_back(m.at(r, c));
            }
        }
        return v;
    };

    std::vector<std::pair<std::size_t, QVector>> basis;  // (pivot, reduced row)
    auto reduce_insert = [&](QVector v) -> bool {
        for (const auto& [p, row] : basis) {
            if (v[p] != 0) {
                Rational c = v[p];
                for (std::size_t k = 0; k < v.size(); ++k) {
                    v[k] -= c * row[k];
                }
            }
        }
        std::size_t pivot = v.size();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] != 0) {
                pivot = k;
                break;
            }
        }
        if (pivot == v.size()) {
            return false;
        }
        Rational lead = v[pivot];
        for (auto& x : v) {
            x /= lead;
        }
        basis.emplace_back(pivot, std::move(v));
        return true;
    };

    std::deque<QMatrix> work;
    auto consider = [&](const QMatrix& m) {
        if (reduce_insert(flatten(m))) {
            work.push_back(m);
        }
    };
    consider(QMatrix::identity(d));
    for (const auto& m : matrices) {
        consider(m);
    }
    while (!work.empty()) {
        QMatrix v = std::move(work.front());
        work.pop_front();
        for (const auto& g : matrices) {
            consider(v * g);
        }
    }
    return basis.size();
}

Rational irreducibility_excluded_point(int n) {
    if (n < 3) {
        throw Error(ErrorKind::BadStrandCount, "excluded point requires n >= 3");
    }
    return Rational(2 * n - 2, n - 2);
}

IrreducibilityVerdict check_irreducibility_criterion(int n, const Rational& t0) {
    if (n < 3) {
        throw Error(ErrorKind::BadStrandCount, "irreducibility criterion requires n >= 3");
    }
    if (t0 == 0) {
        throw Error(ErrorKind::ZeroSpecialization, "t must be specialized to a nonzero value");
    }
    MatrixRep factor = eta1_composition_factor(n);
    std::vector<QMatrix> images = specialized_images(factor, t0);
    std::size_t dim = algebra_dimension(images);
    std::size_t full = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
    bool computed_irreducible = dim == full;
    bool predicted_irreducible = t0 != 2 && t0 != irreducibility_excluded_point(n);
    if (computed_irreducible != predicted_irreducible) {
        throw Error(ErrorKind::CriterionMismatch,
                    "algebra dimension " + std::to_string(dim) + " at t = " + format_rational(t0) +
                        " contradicts the predicate for n = " + std::to_string(n));
    }
    IrreducibilityVerdict verdict{n, t0, dim, computed_irreducible, std::nullopt};
    if (!computed_irreducible) {
        verdict.witness = invariant_line_search(factor, t0);
    }
    return verdict;
}

std::vector<TwinWord> kernel_search(const MatrixRep& rep, int maxlen) {
    if (rep.kind() != GroupKind::T) {
        throw Error(ErrorKind::KindMismatch, "kernel search runs over T_n representations");
    }
    std::vector<TwinWord> kernel;
    for (const auto& w : enumerate_T_elements(rep.strands(), maxlen)) {
        if (w.empty()) {
            continue;
        }
        if (evaluate_word(rep, w).is_identity()) {
            kernel.push_back(w);
        }
    }
    return kernel;
}

int classify_involution_2x2(const RfMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw Error(ErrorKind::DegreeMismatch, "classification requires a 2x2 matrix");
    }
    if (!(m * m).is_identity()) {
        throw Error(ErrorKind::NotInvolution, "matrix does not square to the identity");
    }
    if (m.is_identity()) {
        return 5;
    }
    if (m.at(0, 0) == RatFunc(-1) && m.at(1, 1) == RatFunc(-1) && m.at(0, 1).is_zero() &&
        m.at(1, 0).is_zero()) {
        return 4;
    }
    if (m.at(0, 0) + m.at(1, 1) != RatFunc(0)) {
        throw Error(ErrorKind::UnclassifiableInvolution,
                    "non-scalar involution with nonzero trace");
    }
    if (!m.at(0, 1).is_zero()) {
        return 1;
    }
    if (m.at(0, 0) == RatFunc(1)) {
        return 2;
    }
    if (m.at(0, 0) == RatFunc(-1)) {
        return 3;
    }
    throw Error(ErrorKind::UnclassifiableInvolution, "involution fits no family");
}

WtObstructionOutcome wt_obstruction_check(int n, const LaurentPoly& b) {
    MatrixRep rep = vt_extension_eta1(n, b);
    WtObstructionOutcome outcome{false, {}, std::nullopt};
    auto word = [&](std::vector<TwinLetter> letters) {
        return TwinWord(GroupKind::VT, n, std::move(letters));
    };
    for (int i = 1; i <= n - 2; ++i) {
        TwinLetter si{false, i};
        TwinLetter si1{false, i + 1};
        TwinLetter ri{true, i};
        TwinLetter ri1{true, i + 1};

        RfMatrix lhs8 = evaluate_word(rep, word({ri, si1, si}));
        RfMatrix rhs8 = evaluate_word(rep, word({si1, si, ri1}));
        bool rel8 = lhs8 == rhs8;

        RfMatrix lhs_eq = evaluate_word(rep, word({si1, ri, ri1}));
        RfMatrix rhs_eq = evaluate_word(rep, word({ri, ri1, si}));
        bool rel_eq = lhs_eq == rhs_eq;

        RfMatrix rhs_var = evaluate_word(rep, word({si1, ri, ri1}));
        bool rel_var = lhs8 == rhs_var;

        WtObstructionOutcome::PerIndex detail{i, rel8, rel_eq, rel_var, std::nullopt};
        if (!rel8) {
            outcome.obstructed = true;
            for (std::size_t r = 0; r < lhs8.rows() && !detail.witness; ++r) {
                for (std::size_t c = 0; c < lhs8.cols(); ++c) {
                    if (lhs8.at(r, c) != rhs8.at(r, c)) {
                        detail.witness = EntryWitness{i, r, c, lhs8.at(r, c), rhs8.at(r, c)};
                        break;
                    }
                }
            }
            if (!outcome.first_witness) {
                outcome.first_witness = detail.witness;
            }
        }
        outcome.details.push_back(std::move(detail));
    }
    return outcome;
}

} // namespace twinrep
