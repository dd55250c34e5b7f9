#pragma once

#include <string>
#include <vector>

#include "twinrep/error.hpp"

namespace twinrep {

enum class GroupKind { T, VT, WT };

const char* group_kind_name(GroupKind kind);
std::string group_name(GroupKind kind, int n);  // "T_3", "VT_4", ...

/// Generator letter: s_i, or rho_i for the virtual/welded extensions.
struct TwinLetter {
    bool is_rho;
    int index;  // 1..n-1
    bool operator==(const TwinLetter&) const = default;
};

/// Word in the generators of T_n / VT_n / WT_n. All generators are
/// involutions, so no exponents are stored; parsed inverse letters collapse
/// onto the generator itself.
class TwinWord {
public:
    TwinWord(GroupKind kind, int n) : kind_(kind), n_(n) { validate(); }
    TwinWord(GroupKind kind, int n, std::vector<TwinLetter> letters)
        : kind_(kind), n_(n), letters_(std::move(letters)) {
        validate();
    }

    GroupKind kind() const noexcept { return kind_; }
    int strands() const noexcept { return n_; }
    const std::vector<TwinLetter>& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t length() const noexcept { return letters_.size(); }

    TwinWord concat(const TwinWord& rhs) const;

    bool operator==(const TwinWord& rhs) const {
        return kind_ == rhs.kind_ && n_ == rhs.n_ && letters_ == rhs.letters_;
    }
    bool operator!=(const TwinWord& rhs) const { return !(*this == rhs); }

    /// Whitespace-separated letters, "s1 s2 r1"; the empty word is "e".
    std::string to_string() const;

private:
    void validate() const;

    GroupKind kind_;
    int n_;
    std::vector<TwinLetter> letters_;
};

/// Convenience builders; indices are validated against kind/n.
TwinWord make_s_word(GroupKind kind, int n, const std::vector<int>& indices);
TwinWord parse_twinword(const std::string& text, GroupKind kind, int n);

/// One defining relation lhs = rhs, with a display label such as "(7)[i=1]".
struct Relation {
    std::string label;
    TwinWord lhs;
    TwinWord rhs;
};

struct Presentation {
    GroupKind kind;
    int n;
    std::vector<Relation> relations;

    std::string name() const { return group_name(kind, n); }
};

/// Full defining relation list of T_n / VT_n / WT_n, including the stated
/// equivalent forms of the mixed relations (7) and (8) as additional
/// checkable pairs. Throws BadStrandCount when n < 2.
Presentation build_presentation(GroupKind kind, int n);

/// Unique geodesic normal form for words in the right-angled Coxeter group
/// T_n: repeatedly cancel generator pairs that commute together, then pick
/// the lexicographically least word in the commutation class. Idempotent.
/// Throws KindMismatch for non-T words.
TwinWord normal_form_T(const TwinWord& word);

/// All distinct elements of T_n of length <= maxlen, one normal form each,
/// sorted by (length, lex). Throws BadStrandCount when n < 2.
std::vector<TwinWord> enumerate_T_elements(int n, int maxlen);

/// Equality in T_n via normal forms. Throws KindMismatch unless both words
/// live in the same T_n.
bool words_equal_in_T(const TwinWord& u, const TwinWord& v);

} // namespace twinrep
