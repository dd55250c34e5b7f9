#include "twinrep/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace twinrep {

const char* group_kind_name(GroupKind kind) {
    switch (kind) {
    case GroupKind::T: return "T";
    case GroupKind::VT: return "VT";
    case GroupKind::WT: return "WT";
    }
    return "?";
}

std::string group_name(GroupKind kind, int n) {
    return std::string(group_kind_name(kind)) + "_" + std::to_string(n);
}

void TwinWord::validate() const {
    if (n_ < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    for (const auto& letter : letters_) {
        if (letter.index < 1 || letter.index > n_ - 1) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "generator index " + std::to_string(letter.index) + " outside 1.." +
                            std::to_string(n_ - 1));
        }
        if (letter.is_rho && kind_ == GroupKind::T) {
            throw Error(ErrorKind::KindMismatch, "rho letters are not generators of T_n");
        }
    }
}

TwinWord TwinWord::concat(const TwinWord& rhs) const {
    if (kind_ != rhs.kind_ || n_ != rhs.n_) {
        throw Error(ErrorKind::KindMismatch, "cannot concatenate words from different groups");
    }
    std::vector<TwinLetter> letters = letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return TwinWord(kind_, n_, std::move(letters));
}

std::string TwinWord::to_string() const {
    if (letters_.empty()) {
        return "e";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& letter : letters_) {
        if (!first) {
            out << " ";
        }
        first = false;
        out << (letter.is_rho ? "r" : "s") << letter.index;
    }
    return out.str();
}

TwinWord make_s_word(GroupKind kind, int n, const std::vector<int>& indices) {
    std::vector<TwinLetter> letters;
    letters.reserve(indices.size());
    for (int i : indices) {
        letters.push_back({false, i});
    }
    return TwinWord(kind, n, std::move(letters));
}

TwinWord parse_twinword(const std::string& text, GroupKind kind, int n) {
    std::vector<TwinLetter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        char c = text[pos];
        if (c == 'e' && letters.empty()) {
            // the empty word; nothing may follow
            std::size_t rest = pos + 1;
            while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) {
                ++rest;
            }
            if (rest != text.size()) {
                throw SyntaxError("unexpected letters after 'e'", rest);
            }
            break;
        }
        if (c != 's' && c != 'r') {
            throw SyntaxError("expected 's' or 'r'", pos);
        }
        bool is_rho = c == 'r';
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw SyntaxError("expected generator index", pos);
        }
        long parsed = 0;
        for (std::size_t i = start; i < pos; ++i) {
            parsed = parsed * 10 + (text[i] - '0');
            if (parsed > 1000000) {
                throw SyntaxError("generator index out of range", start);
            }
        }
        int index = static_cast<int>(parsed);
        // involutive generators: an explicit ^-1 or ^1 collapses
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos < text.size() && text[pos] == '-') {
                ++pos;
            }
            std::size_t es = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (pos == es) {
                throw SyntaxError("expected exponent digits", pos);
            }
        }
        letters.push_back({is_rho, index});
    }
    return TwinWord(kind, n, std::move(letters));
}

namespace {

TwinWord word_of(GroupKind kind, int n, std::initializer_list<TwinLetter> letters) {
    return TwinWord(kind, n, std::vector<TwinLetter>(letters));
}

TwinLetter S(int i) { return {false, i}; }
TwinLetter R(int i) { return {true, i}; }

} // namespace

Presentation build_presentation(GroupKind kind, int n) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    Presentation p{kind, n, {}};
    auto rel = [&](const std::string& label, std::initializer_list<TwinLetter> lhs,
                   std::initializer_list<TwinLetter> rhs) {
        p.relations.push_back({label, word_of(kind, n, lhs), word_of(kind, n, rhs)});
    };

    // (1) s_i^2 = 1
    for (int i = 1; i <= n - 1; ++i) {
        rel("(1)[i=" + std::to_string(i) + "]", {S(i), S(i)}, {});
    }
    // (2) s_i s_j = s_j s_i for |i-j| >= 2
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            rel("(2)[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                {S(i), S(j)}, {S(j), S(i)});
        }
    }
    if (kind == GroupKind::T) {
        return p;
    }

    // (3) rho braid
    for (int i = 1; i <= n - 2; ++i) {
        rel("(3)[i=" + std::to_string(i) + "]", {R(i), R(i + 1), R(i)}, {R(i + 1), R(i), R(i + 1)});
    }
    // (4) distant rho commutation
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 2; j <= n - 1; ++j) {
            rel("(4)[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                {R(i), R(j)}, {R(j), R(i)});
        }
    }
    // (5) rho_i^2 = 1
    for (int i = 1; i <= n - 1; ++i) {
        rel("(5)[i=" + std::to_string(i) + "]", {R(i), R(i)}, {});
    }
    // (6) distant mixed commutation
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) >= 2) {
                rel("(6)[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]",
                    {S(i), R(j)}, {R(j), S(i)});
            }
        }
    }
    // (7) rho_i rho_{i+1} s_i = s_{i+1} rho_i rho_{i+1}, plus the stated
    // equivalent form rho_{i+1} rho_i s_{i+1} = s_i rho_{i+1} rho_i
    for (int i = 1; i <= n - 2; ++i) {
        rel("(7)[i=" + std::to_string(i) + "]",
            {R(i), R(i + 1), S(i)}, {S(i + 1), R(i), R(i + 1)});
    }
    for (int i = 1; i <= n - 2; ++i) {
        rel("(7eq)[i=" + std::to_string(i) + "]",
            {R(i + 1), R(i), S(i + 1)}, {S(i), R(i + 1), R(i)});
    }
    if (kind == GroupKind::VT) {
        return p;
    }

    // (8) rho_i s_{i+1} s_i = s_{i+1} s_i rho_{i+1}, plus the stated
    // equivalent form s_{i+1} rho_i rho_{i+1} = rho_i rho_{i+1} s_i
    for (int i = 1; i <= n - 2; ++i) {
        rel("(8)[i=" + std::to_string(i) + "]",
            {R(i), S(i + 1), S(i)}, {S(i + 1), S(i), R(i + 1)});
    }
    for (int i = 1; i <= n - 2; ++i) {
        rel("(8eq)[i=" + std::to_string(i) + "]",
            {S(i + 1), R(i), R(i + 1)}, {R(i), R(i + 1), S(i)});
    }
    return p;
}

namespace {

// One sweep of the deletion phase: find a pair of equal generators that can
// be made adjacent using only the distant commutations, delete both.
bool delete_one_pair(std::vector<int>& g) {
    for (std::size_t p = 0; p < g.size(); ++p) {
        for (std::size_t q = p + 1; q < g.size(); ++q) {
            if (g[q] == g[p]) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(q));
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(p));
                return true;
            }
            if (std::abs(g[q] - g[p]) < 2) {
                break;  // blocked by a non-commuting letter
            }
        }
    }
    return false;
}

// Lexicographically least linearization of the trace: repeatedly emit the
// least generator whose whole left context commutes with it.
std::vector<int> lex_least_linearization(std::vector<int> g) {
    std::vector<int> out;
    out.reserve(g.size());
    while (!g.empty()) {
        std::size_t best = g.size();
        for (std::size_t p = 0; p < g.size(); ++p) {
            bool available = true;
            for (std::size_t r = 0; r < p; ++r) {
                if (std::abs(g[r] - g[p]) < 2) {
                    available = false;
                    break;
                }
            }
            if (available && (best == g.size() || g[p] < g[best])) {
                best = p;
            }
        }
        out.push_back(g[best]);
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

} // namespace

TwinWord normal_form_T(const TwinWord& word) {
    if (word.kind() != GroupKind::T) {
        throw Error(ErrorKind::KindMismatch, "normal form is defined for T_n words");
    }
    std::vector<int> g;
    g.reserve(word.length());
    for (const auto& letter : word.letters()) {
        g.push_back(letter.index);
    }
    while (delete_one_pair(g)) {
    }
    g = lex_least_linearization(std::move(g));
    return make_s_word(GroupKind::T, word.strands(), g);
}

std::vector<TwinWord> enumerate_T_elements(int n, int maxlen) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    std::vector<TwinWord> out;
    std::vector<TwinWord> level;
    std::set<std::string> seen;
    TwinWord identity(GroupKind::T, n);
    out.push_back(identity);
    level.push_back(identity);
    seen.insert(identity.to_string());
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<TwinWord> next;
        for (const auto& w : level) {
            for (int i = 1; i <= n - 1; ++i) {
                TwinWord cand = normal_form_T(w.concat(make_s_word(GroupKind::T, n, {i})));
                if (static_cast<int>(cand.length()) != len) {
                    continue;  // not a geodesic extension
                }
                if (seen.insert(cand.to_string()).second) {
                    next.push_back(cand);
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const TwinWord& a, const TwinWord& b) {
            const auto& x = a.letters();
            const auto& y = b.letters();
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k].index != y[k].index) {
                    return x[k].index < y[k].index;
                }
            }
            return false;
        });
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
        if (level.empty()) {
            break;
        }
    }
    return out;
}

bool words_equal_in_T(const TwinWord& u, const TwinWord& v) {
    if (u.kind() != GroupKind::T || v.kind() != GroupKind::T || u.strands() != v.strands()) {
        throw Error(ErrorKind::KindMismatch, "equality test requires words in the same T_n");
    }
    return normal_form_T(u) == normal_form_T(v);
}

} // namespace twinrep
