#include "twinrep/freegroup.hpp"

#include <cctype>
#include <sstream>

namespace twinrep {

void FreeWord::push_reduced(int gen, long exp) {
    if (exp == 0) {
        return;
    }
    if (!syllables_.empty() && syllables_.back().gen == gen) {
        syllables_.back().exp += exp;
        if (syllables_.back().exp == 0) {
            syllables_.pop_back();
        }
        return;
    }
    syllables_.push_back({gen, exp});
}

FreeWord FreeWord::from_letters(int rank, const std::vector<std::pair<int, long>>& letters) {
    FreeWord w(rank);
    for (const auto& [gen, exp] : letters) {
        if (gen < 1 || gen > rank) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "generator x" + std::to_string(gen) + " outside rank " + std::to_string(rank));
        }
        w.push_reduced(gen, exp);
    }
    return w;
}

FreeWord FreeWord::generator(int rank, int index, long exp) {
    return from_letters(rank, {{index, exp}});
}

long FreeWord::length() const {
    long len = 0;
    for (const auto& s : syllables_) {
        len += s.exp < 0 ? -s.exp : s.exp;
    }
    return len;
}

long FreeWord::exponent_sum() const {
    long sum = 0;
    for (const auto& s : syllables_) {
        sum += s.exp;
    }
    return sum;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
    if (rank_ != rhs.rank_) {
        throw Error(ErrorKind::RankMismatch, "free word ranks differ");
    }
    FreeWord out = *this;
    for (const auto& s : rhs.syllables_) {
        out.push_reduced(s.gen, s.exp);
    }
    return out;
}

FreeWord FreeWord::inverse() const {
    FreeWord out(rank_);
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
        out.syllables_.push_back({it->gen, -it->exp});
    }
    return out;
}

std::vector<std::pair<int, int>> FreeWord::letters() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : syllables_) {
        long count = s.exp < 0 ? -s.exp : s.exp;
        int sign = s.exp < 0 ? -1 : 1;
        for (long i = 0; i < count; ++i) {
            out.emplace_back(s.gen, sign);
        }
    }
    return out;
}

int FreeWord::compare(const FreeWord& a, const FreeWord& b) {
    long la = a.length();
    long lb = b.length();
    if (la != lb) {
        return la < lb ? -1 : 1;
    }
    auto xs = a.letters();
    auto ys = b.letters();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].first != ys[i].first) {
            return xs[i].first < ys[i].first ? -1 : 1;
        }
        if (xs[i].second != ys[i].second) {
            // positive letter sorts before its inverse
            return xs[i].second > ys[i].second ? -1 : 1;
        }
    }
    return 0;
}

std::string FreeWord::to_string() const {
    if (is_identity()) {
        return "1";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& s : syllables_) {
        if (!first) {
            out << "*";
        }
        first = false;
        out << "x" << s.gen;
        if (s.exp != 1) {
            out << "^" << s.exp;
        }
    }
    return out.str();
}

namespace {

long bounded_digits(const std::string& text, std::size_t start, std::size_t end) {
    long value = 0;
    for (std::size_t i = start; i < end; ++i) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) {
            throw SyntaxError("number out of range", start);
        }
    }
    return value;
}

} // namespace

FreeWord parse_freeword(const std::string& text, int rank) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) {
            throw SyntaxError("trailing characters after identity word", pos);
        }
        return FreeWord(rank);
    }
    std::vector<std::pair<int, long>> letters;
    for (;;) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') {
            throw SyntaxError("expected 'x'", pos);
        }
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            throw SyntaxError("expected generator index", pos);
        }
        int gen = static_cast<int>(bounded_digits(text, start, pos));
        long exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                neg = text[pos] == '-';
                ++pos;
            }
            std::size_t es = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (pos == es) {
                throw SyntaxError("expected exponent digits", pos);
            }
            exp = bounded_digits(text, es, pos);
            if (neg) {
                exp = -exp;
            }
        }
        letters.emplace_back(gen, exp);
        skip_ws();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '*') {
            throw SyntaxError("expected '*' between letters", pos);
        }
        ++pos;
    }
    return FreeWord::from_letters(rank, letters);
}

FreeAut::FreeAut(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_) {
        throw Error(ErrorKind::RankMismatch, "expected one image per generator");
    }
    for (const auto& w : images_) {
        if (w.rank() != rank_) {
            throw Error(ErrorKind::RankMismatch, "image rank differs from automorphism rank");
        }
    }
}

FreeAut FreeAut::identity(int rank) {
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) {
        images.push_back(FreeWord::generator(rank, i));
    }
    return FreeAut(rank, std::move(images));
}

const FreeWord& FreeAut::image(int index) const {
    if (index < 1 || index > rank_) {
        throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(index));
    }
    return images_[static_cast<std::size_t>(index - 1)];
}

FreeWord FreeAut::apply(const FreeWord& word) const {
    if (word.rank() != rank_) {
        throw Error(ErrorKind::RankMismatch, "word rank differs from automorphism rank");
    }
    FreeWord out(rank_);
    for (const auto& s : word.syllables()) {
        const FreeWord& img = images_[static_cast<std::size_t>(s.gen - 1)];
        FreeWord factor = s.exp > 0 ? img : img.inverse();
        long count = s.exp < 0 ? -s.exp : s.exp;
        for (long i = 0; i < count; ++i) {
            out = out * factor;
        }
    }
    return out;
}

bool FreeAut::is_involution() const {
    for (int i = 1; i <= rank_; ++i) {
        FreeWord gen = FreeWord::generator(rank_, i);
        if (apply(apply(gen)) != gen) {
            return false;
        }
    }
    return true;
}

GroupRingElt GroupRingElt::from_word(const FreeWord& word, const Int& coeff) {
    GroupRingElt out(word.rank());
    out.add_term(word, coeff);
    return out;
}

void GroupRingElt::add_term(const FreeWord& word, const Int& coeff) {
    if (coeff == 0) {
        return;
    }
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GroupRingElt GroupRingElt::operator-() const {
    GroupRingElt out(rank_);
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, -c);
    }
    return out;
}

GroupRingElt GroupRingElt::operator+(const GroupRingElt& rhs) const {
    if (rank_ != rhs.rank_) {
        throw Error(ErrorKind::RankMismatch, "group ring ranks differ");
    }
    GroupRingElt out = *this;
    for (const auto& [w, c] : rhs.terms_) {
        out.add_term(w, c);
    }
    return out;
}

GroupRingElt GroupRingElt::operator-(const GroupRingElt& rhs) const {
    return *this + (-rhs);
}

GroupRingElt GroupRingElt::operator*(const GroupRingElt& rhs) const {
    if (rank_ != rhs.rank_) {
        throw Error(ErrorKind::RankMismatch, "group ring ranks differ");
    }
    GroupRingElt out(rank_);
    for (const auto& [u, a] : terms_) {
        for (const auto& [v, b] : rhs.terms_) {
            out.add_term(u * v, a * b);
        }
    }
    return out;
}

GroupRingElt GroupRingElt::scaled(const Int& c) const {
    GroupRingElt out(rank_);
    if (c == 0) {
        return out;
    }
    for (const auto& [w, k] : terms_) {
        out.terms_.emplace(w, k * c);
    }
    return out;
}

Int GroupRingElt::augmentation() const {
    Int sum(0);
    for (const auto& [w, c] : terms_) {
        sum += c;
    }
    return sum;
}

std::string GroupRingElt::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (w.is_identity()) {
            out << mag.str();
        } else {
            if (mag != 1) {
                out << mag.str() << "*";
            }
            out << w.to_string();
        }
    }
    return out.str();
}

GroupRingElt fox_derivative(const FreeWord& word, int k) {
    int rank = word.rank();
    if (k < 1 || k > rank) {
        throw Error(ErrorKind::IndexOutOfRange, "fox derivative index " + std::to_string(k));
    }
    GroupRingElt out(rank);
    FreeWord prefix(rank);
    for (const auto& [gen, sign] : word.letters()) {
        if (gen == k) {
            if (sign > 0) {
                // D_k(x_k) = 1, contributed with the left prefix
                out = out + GroupRingElt::from_word(prefix);
            } else {
                // D_k(x_k^-1) = -x_k^-1
                FreeWord w = prefix * FreeWord::generator(rank, gen, -1);
                out = out + GroupRingElt::from_word(w, Int(-1));
            }
        }
        prefix = prefix * FreeWord::generator(rank, gen, sign);
    }
    return out;
}

GroupRingElt fox_derivative(const GroupRingElt& elt, int k) {
    GroupRingElt out(elt.rank());
    for (const auto& [w, c] : elt.terms()) {
        out = out + fox_derivative(w, k).scaled(c);
    }
    return out;
}

GroupRingMatrix jacobian_matrix(const FreeAut& phi) {
    int n = phi.rank();
    GroupRingMatrix j;
    j.reserve(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
        std::vector<GroupRingElt> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            row.push_back(fox_derivative(phi.image(r), k));
        }
        j.push_back(std::move(row));
    }
    return j;
}

LaurentPoly magnus_specialize(const GroupRingElt& elt) {
    LaurentPoly out;
    for (const auto& [w, c] : elt.terms()) {
        out = out + LaurentPoly::monomial(c, w.exponent_sum());
    }
    return out;
}

LaurentMatrix magnus_specialize(const GroupRingMatrix& m) {
    LaurentMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<LaurentPoly> r;
        r.reserve(row.size());
        for (const auto& e : row) {
            r.push_back(magnus_specialize(e));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace twinrep
