#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twinrep/laurent.hpp"

namespace twinrep {

/// Maximal run of a single generator: gen^exp with exp != 0.
struct Syllable {
    int gen;   // 1-based generator index
    long exp;  // nonzero
    bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in the free group F_n on x_1..x_n.
///
/// Stored run-length encoded with adjacent syllables on distinct generators,
/// which makes the representation canonical per group element.
class FreeWord {
public:
    explicit FreeWord(int rank) : rank_(rank) {}

    /// Reduces an arbitrary letter sequence (pairs generator/exponent).
    /// Throws IndexOutOfRange when a generator index is outside 1..rank.
    static FreeWord from_letters(int rank, const std::vector<std::pair<int, long>>& letters);
    static FreeWord generator(int rank, int index, long exp = 1);

    int rank() const noexcept { return rank_; }
    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    bool is_identity() const noexcept { return syllables_.empty(); }
    /// Word length counted in +-1 letters.
    long length() const;
    /// Total exponent sum (image of the word under x_i -> t, as the exponent).
    long exponent_sum() const;

    /// Group product with free reduction. Throws RankMismatch.
    FreeWord operator*(const FreeWord& rhs) const;
    FreeWord inverse() const;

    /// Expansion into individual letters (generator, +-1).
    std::vector<std::pair<int, int>> letters() const;

    bool operator==(const FreeWord& rhs) const {
        return rank_ == rhs.rank_ && syllables_ == rhs.syllables_;
    }
    bool operator!=(const FreeWord& rhs) const { return !(*this == rhs); }

    /// Shortlex: length first, then letterwise with x_1 < x_1^-1 < x_2 < ...
    static int compare(const FreeWord& a, const FreeWord& b);

    /// "x1*x2^-1*x1", or "1" for the identity.
    std::string to_string() const;

private:
    void push_reduced(int gen, long exp);

    int rank_;
    std::vector<Syllable> syllables_;
};

struct ShortlexLess {
    bool operator()(const FreeWord& a, const FreeWord& b) const {
        return FreeWord::compare(a, b) < 0;
    }
};

/// Parses the asterisk-separated power form, e.g. "x1*x2^-1"; "1" is the
/// identity. Throws SyntaxError / IndexOutOfRange.
FreeWord parse_freeword(const std::string& text, int rank);

/// Endomorphism of F_n given by generator images. Invertibility is not
/// assumed; use is_involution() to certify the self-inverse case.
class FreeAut {
public:
    FreeAut(int rank, std::vector<FreeWord> images);
    static FreeAut identity(int rank);

    int rank() const noexcept { return rank_; }
    const FreeWord& image(int index) const;

    /// Substitutes each letter by its (inverse) image and reduces.
    /// Throws RankMismatch.
    FreeWord apply(const FreeWord& word) const;

    /// True when applying twice fixes every generator, which also exhibits
    /// the map as an automorphism (its own inverse).
    bool is_involution() const;

private:
    int rank_;
    std::vector<FreeWord> images_;
};

/// Element of the integral group ring Z[F_n].
class GroupRingElt {
public:
    explicit GroupRingElt(int rank) : rank_(rank) {}
    static GroupRingElt from_word(const FreeWord& word, const Int& coeff = Int(1));
    static GroupRingElt one(int rank) { return from_word(FreeWord(rank)); }

    int rank() const noexcept { return rank_; }
    const std::map<FreeWord, Int, ShortlexLess>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GroupRingElt operator-() const;
    GroupRingElt operator+(const GroupRingElt& rhs) const;
    GroupRingElt operator-(const GroupRingElt& rhs) const;
    GroupRingElt operator*(const GroupRingElt& rhs) const;
    GroupRingElt scaled(const Int& c) const;

    bool operator==(const GroupRingElt& rhs) const {
        return rank_ == rhs.rank_ && terms_ == rhs.terms_;
    }
    bool operator!=(const GroupRingElt& rhs) const { return !(*this == rhs); }

    /// Augmentation: sum of the integer coefficients (1 on group elements,
    /// extended linearly).
    Int augmentation() const;

    /// Terms in shortlex order, e.g. "1 - x1*x2*x1^-1"; "0" when zero.
    std::string to_string() const;

private:
    void add_term(const FreeWord& word, const Int& coeff);

    int rank_;
    std::map<FreeWord, Int, ShortlexLess> terms_;
};

/// Fox derivative with respect to x_k: D_k(x_i) = delta_ik,
/// D_k(x_i^-1) = -delta_ik x_i^-1, and the product rule
/// D_k(uv) = D_k(u) + u D_k(v) on words, extended Z-linearly.
/// Throws IndexOutOfRange when k is outside 1..rank.
GroupRingElt fox_derivative(const FreeWord& word, int k);
GroupRingElt fox_derivative(const GroupRingElt& elt, int k);

using GroupRingMatrix = std::vector<std::vector<GroupRingElt>>;
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Jacobian of the generator images: entry (r, k) = D_k(phi(x_r)).
GroupRingMatrix jacobian_matrix(const FreeAut& phi);

/// Magnus specialization x_i -> t: each word maps to t^(exponent sum),
/// extended linearly; applied entrywise on matrices.
LaurentPoly magnus_specialize(const GroupRingElt& elt);
LaurentMatrix magnus_specialize(const GroupRingMatrix& m);

} // namespace twinrep
