#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twinrep/linalg.hpp"
#include "twinrep/reps.hpp"

namespace twinrep {

/// One verified relation: both sides evaluated and compared exactly.
struct RelationCheck {
    std::string label;
    std::string lhs_word;
    std::string rhs_word;
    bool holds;
    RfMatrix lhs;
    RfMatrix rhs;
};

struct RelationReport {
    std::string presentation;
    std::string representation;
    std::vector<RelationCheck> checks;

    bool all_hold() const;
    std::size_t violation_count() const;
};

/// Evaluates both sides of every defining relation of p under rep and
/// compares entrywise. Throws KindMismatch when rep cannot evaluate p's
/// words (different strand count, or rho letters without rho images).
RelationReport verify_relations(const MatrixRep& rep, const Presentation& p);

/// Basis of the common fixed space of all generator images specialized at
/// t0 (intersection of the eigenvalue-1 eigenspaces). Basis vectors carry
/// content-1 integer coordinates in deterministic echelon order.
/// Throws ZeroSpecialization / PoleAtPoint.
std::vector<QVector> common_fixed_vectors(const MatrixRep& rep, const Rational& t0);

struct InvariantLineWitness {
    QVector direction;       // content-1 integer coordinates
    std::vector<int> signs;  // +-1 eigenvalue per generator, index order
    bool row_side;           // false: common eigenvector of the images;
                             // true: of their transposes
};

/// Searches for a common eigenvector of all specialized images with
/// eigenvalues +-1. Sign patterns are enumerated lexicographically with +1
/// before -1, each tested on the images first and their transposes second;
/// the first nonempty intersection wins. Throws NotInvolution when some
/// specialized image fails M^2 = I.
std::optional<InvariantLineWitness> invariant_line_search(const MatrixRep& rep, const Rational& t0);

/// Dimension over Q of the span of the multiplicative closure of
/// {I} u matrices, computed by saturating an echelon basis under right
/// multiplication by the generators. Throws DegreeMismatch / BadArgument.
std::size_t algebra_dimension(const std::vector<QMatrix>& matrices);

struct IrreducibilityVerdict {
    int n;
    Rational t0;
    std::size_t algebra_dim;
    bool absolutely_irreducible;  // algebra_dim == (n-1)^2
    std::optional<InvariantLineWitness> witness;
};

/// Decides absolute irreducibility of the degree-(n-1) composition factor at
/// t0 via the generated-algebra dimension, attaches an invariant-line witness
/// on the reducible side, and cross-checks the verdict against the predicate
/// t0 not in {2, (2n-2)/(n-2)}. A disagreement indicates an implementation
/// bug and raises CriterionMismatch. Requires n >= 3 (BadStrandCount) and
/// t0 != 0 (ZeroSpecialization).
IrreducibilityVerdict check_irreducibility_criterion(int n, const Rational& t0);

/// The excluded specialization (2n-2)/(n-2) of the irreducibility criterion.
Rational irreducibility_excluded_point(int n);

/// Evaluates every T_n element of length <= maxlen (by normal-form
/// enumeration) and returns the nonempty words whose image is the identity,
/// symbolically in t. Throws KindMismatch for non-T representations.
std::vector<TwinWord> kernel_search(const MatrixRep& rep, int maxlen);

/// Family tag 1..5 of a 2x2 involution over Q(t):
/// 5 = I, 4 = -I, 1 = trace zero with nonzero upper-right entry,
/// 2 / 3 = lower triangular with upper-left entry +1 / -1.
/// Throws NotInvolution, UnclassifiableInvolution, DegreeMismatch.
int classify_involution_2x2(const RfMatrix& m);

struct EntryWitness {
    int i;  // relation index
    std::size_t row;
    std::size_t col;
    RatFunc lhs;
    RatFunc rhs;
};

struct WtObstructionOutcome {
    struct PerIndex {
        int i;
        bool relation8_holds;
        bool equivalent_form_holds;
        bool proof_variant_holds;
        std::optional<EntryWitness> witness;  // first differing entry of (8)
    };

    bool obstructed;  // some instance of relation (8) fails
    std::vector<PerIndex> details;
    std::optional<EntryWitness> first_witness;
};

/// Builds the VT extension of eta1 with parameter b and evaluates the welded
/// relation (8) rho_i s_{i+1} s_i = s_{i+1} s_i rho_{i+1} for every
/// admissible i, together with its stated equivalent form and the variant
/// rho_i s_{i+1} s_i = s_{i+1} rho_i rho_{i+1}. Obstructed means relation (8)
/// fails somewhere; the witness is the first differing entry.
/// Throws ZeroScalar / BadStrandCount.
WtObstructionOutcome wt_obstruction_check(int n, const LaurentPoly& b);

} // namespace twinrep
