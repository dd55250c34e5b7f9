#include "twinrep/reps.hpp"

#include <sstream>

namespace twinrep {

namespace {

RfMatrix two_local_image(std::size_t degree, int i, const RfMatrix& block) {
    RfMatrix m = RfMatrix::identity(degree);
    std::size_t r = static_cast<std::size_t>(i - 1);
    m.at(r, r) = block.at(0, 0);
    m.at(r, r + 1) = block.at(0, 1);
    m.at(r + 1, r) = block.at(1, 0);
    m.at(r + 1, r + 1) = block.at(1, 1);
    return m;
}

RfMatrix eta1_block() {
    // [[1-t, t], [2-t, t-1]]
    RfMatrix b(2, 2);
    LaurentPoly t = LaurentPoly::t();
    b.at(0, 0) = LaurentPoly(1) - t;
    b.at(0, 1) = t;
    b.at(1, 0) = LaurentPoly(2) - t;
    b.at(1, 1) = t - LaurentPoly(1);
    return b;
}

RfMatrix swap_block(const LaurentPoly& top) {
    // [[0, f], [1/f, 0]]
    if (top.is_zero()) {
        throw Error(ErrorKind::ZeroScalar, "block scalar must be nonzero");
    }
    RfMatrix b(2, 2);
    b.at(0, 1) = RatFunc(top);
    b.at(1, 0) = RatFunc(top).inverse();
    return b;
}

bool is_two_local_image(const RfMatrix& m, int i) {
    std::size_t r = static_cast<std::size_t>(i - 1);
    for (std::size_t row = 0; row < m.rows(); ++row) {
        for (std::size_t col = 0; col < m.cols(); ++col) {
            if (row >= r && row <= r + 1 && col >= r && col <= r + 1) {
                continue;
            }
            if (m.at(row, col) != (row == col ? RatFunc(1) : RatFunc(0))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

MatrixRep::MatrixRep(GroupKind kind, int n, std::vector<RfMatrix> s_images,
                     std::vector<RfMatrix> rho_images, std::string tag,
                     std::map<std::string, std::string> params, bool claims_two_local)
    : kind_(kind),
      n_(n),
      degree_(s_images.empty() ? 0 : s_images.front().rows()),
      s_images_(std::move(s_images)),
      rho_images_(std::move(rho_images)),
      tag_(std::move(tag)),
      params_(std::move(params)),
      two_local_(claims_two_local) {
    if (n_ < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    if (static_cast<int>(s_images_.size()) != n_ - 1) {
        throw Error(ErrorKind::BadArgument, "expected one s-image per generator");
    }
    if (!rho_images_.empty() && static_cast<int>(rho_images_.size()) != n_ - 1) {
        throw Error(ErrorKind::BadArgument, "expected one rho-image per generator");
    }
    if (kind_ == GroupKind::T && !rho_images_.empty()) {
        throw Error(ErrorKind::KindMismatch, "T_n representation cannot have rho images");
    }
    auto check = [&](const RfMatrix& m, const std::string& what, int i) {
        if (m.rows() != degree_ || m.cols() != degree_) {
            throw Error(ErrorKind::DegreeMismatch, "image degrees differ");
        }
        if (determinant(m).is_zero()) {
            throw Error(ErrorKind::BadArgument, what + " image is singular");
        }
        if (two_local_ && !is_two_local_image(m, i)) {
            throw Error(ErrorKind::BlockStructureViolation,
                        what + std::to_string(i) + " image is not 2-local");
        }
    };
    for (int i = 1; i <= n_ - 1; ++i) {
        check(s_images_[static_cast<std::size_t>(i - 1)], "s", i);
    }
    for (int i = 1; i <= static_cast<int>(rho_images_.size()); ++i) {
        check(rho_images_[static_cast<std::size_t>(i - 1)], "rho", i);
    }
}

const RfMatrix& MatrixRep::s_image(int index) const {
    if (index < 1 || index > n_ - 1) {
        throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(index));
    }
    return s_images_[static_cast<std::size_t>(index - 1)];
}

const RfMatrix& MatrixRep::rho_image(int index) const {
    if (rho_images_.empty()) {
        throw Error(ErrorKind::KindMismatch, "representation has no rho images");
    }
    if (index < 1 || index > n_ - 1) {
        throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(index));
    }
    return rho_images_[static_cast<std::size_t>(index - 1)];
}

const RfMatrix& MatrixRep::image(const TwinLetter& letter) const {
    return letter.is_rho ? rho_image(letter.index) : s_image(letter.index);
}

std::string MatrixRep::describe() const {
    std::ostringstream out;
    out << tag_ << "(n=" << n_;
    for (const auto& [k, v] : params_) {
        out << ", " << k << "=" << v;
    }
    out << ")";
    return out.str();
}

FreeAut eta1_automorphism(int n, int i) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    if (i < 1 || i > n - 1) {
        throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i));
    }
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        if (k == i) {
            images.push_back(FreeWord::from_letters(n, {{i, 1}, {i + 1, 1}, {i, -1}}));
        } else if (k == i + 1) {
            images.push_back(
                FreeWord::from_letters(n, {{i, 1}, {i + 1, -1}, {i, 1}, {i + 1, 1}, {i, -1}}));
        } else {
            images.push_back(FreeWord::generator(n, k));
        }
    }
    FreeAut phi(n, std::move(images));
    if (!phi.is_involution()) {
        throw Error(ErrorKind::BadArgument, "generator substitution failed the involution check");
    }
    return phi;
}

MatrixRep eta1_matrix(int n) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    std::vector<RfMatrix> images;
    RfMatrix block = eta1_block();
    for (int i = 1; i <= n - 1; ++i) {
        images.push_back(two_local_image(static_cast<std::size_t>(n), i, block));
    }
    return MatrixRep(GroupKind::T, n, std::move(images), {}, "eta1", {}, true);
}

MatrixRep eta1_composition_factor(int n) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    std::size_t d = static_cast<std::size_t>(n);
    // Basis change v_i = e_i (i < n), v_n = e_1 + ... + e_n.
    RfMatrix p(d, d);
    RfMatrix p_inv(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        p.at(r, r) = RatFunc(1);
        p.at(r, d - 1) = RatFunc(1);
        p_inv.at(r, r) = RatFunc(1);
        if (r + 1 < d) {
            p_inv.at(r, d - 1) = RatFunc(-1);
        }
    }

    MatrixRep full = eta1_matrix(n);
    std::vector<RfMatrix> images;
    for (int i = 1; i <= n - 1; ++i) {
        RfMatrix c = p_inv * full.s_image(i) * p;
        for (std::size_t r = 0; r < d; ++r) {
            if (c.at(r, d - 1) != (r == d - 1 ? RatFunc(1) : RatFunc(0))) {
                throw Error(ErrorKind::BlockStructureViolation,
                            "conjugated image of s" + std::to_string(i) +
                                " does not fix the all-ones direction");
            }
        }
        RfMatrix stripped(d - 1, d - 1);
        for (std::size_t r = 0; r + 1 < d; ++r) {
            for (std::size_t col = 0; col + 1 < d; ++col) {
                stripped.at(r, col) = c.at(r, col);
            }
        }
        // The classical display writes the last generator's image with its
        // basis-vector images as rows; that is the transpose of the
        // column-action matrix produced by the conjugation.
        images.push_back(i == n - 1 ? stripped.transpose() : stripped);
    }

    // Postcondition: the display form, entry by entry.
    LaurentPoly t = LaurentPoly::t();
    RfMatrix block = eta1_block();
    for (int i = 1; i <= n - 2; ++i) {
        RfMatrix expected = two_local_image(d - 1, i, block);
        if (images[static_cast<std::size_t>(i - 1)] != expected) {
            throw Error(ErrorKind::BlockStructureViolation,
                        "composition factor image of s" + std::to_string(i) +
                            " deviates from the 2-local display");
        }
    }
    RfMatrix last = RfMatrix::identity(d - 1);
    for (std::size_t col = 0; col + 1 < d - 1; ++col) {
        last.at(d - 2, col) = t - LaurentPoly(2);
    }
    last.at(d - 2, d - 2) = RatFunc(-1);
    if (images.back() != last) {
        throw Error(ErrorKind::BlockStructureViolation,
                    "composition factor image of s" + std::to_string(n - 1) +
                        " deviates from the final-row display");
    }

    return MatrixRep(GroupKind::T, n, std::move(images), {}, "eta1p", {}, false);
}

MatrixRep eta2_matrix(int n, const LaurentPoly& f) {
    if (n < 2) {
        throw Error(ErrorKind::BadStrandCount, "strand count must be at least 2");
    }
    if (f.is_zero()) {
        throw Error(ErrorKind::ZeroScalar, "f must be nonzero");
    }
    std::vector<RfMatrix> images;
    RfMatrix block = swap_block(f);
    for (int i = 1; i <= n - 1; ++i) {
        images.push_back(two_local_image(static_cast<std::size_t>(n), i, block));
    }
    return MatrixRep(GroupKind::T, n, std::move(images), {}, "eta2", {{"f", f.to_string()}}, true);
}

MatrixRep vt_extension_eta1(int n, const LaurentPoly& b) {
    if (n < 3) {
        throw Error(ErrorKind::BadStrandCount, "VT extension requires n >= 3");
    }
    if (b.is_zero()) {
        throw Error(ErrorKind::ZeroScalar, "b must be nonzero");
    }
    std::vector<RfMatrix> s_images;
    std::vector<RfMatrix> rho_images;
    RfMatrix sblock = eta1_block();
    RfMatrix rblock = swap_block(b);
    for (int i = 1; i <= n - 1; ++i) {
        s_images.push_back(two_local_image(static_cast<std::size_t>(n), i, sblock));
        rho_images.push_back(two_local_image(static_cast<std::size_t>(n), i, rblock));
    }
    return MatrixRep(GroupKind::VT, n, std::move(s_images), std::move(rho_images), "vt1",
                     {{"b", b.to_string()}}, true);
}

MatrixRep two_local_family_T2(int family, const T2FamilyParams& params) {
    if (family < 1 || family > 5) {
        throw Error(ErrorKind::BadFamilyTag, "family tag must be 1..5");
    }
    RfMatrix rho(2, 2);
    std::map<std::string, std::string> shown;
    shown["family"] = std::to_string(family);
    switch (family) {
    case 1: {
        if (params.b.is_zero()) {
            throw Error(ErrorKind::ZeroScalar, "family 1 requires b != 0");
        }
        RatFunc a(params.a);
        RatFunc b(params.b);
        rho.at(0, 0) = a;
        rho.at(0, 1) = b;
        rho.at(1, 0) = (RatFunc(1) - a * a) / b;
        rho.at(1, 1) = -a;
        shown["a"] = params.a.to_string();
        shown["b"] = params.b.to_string();
        break;
    }
    case 2:
        rho.at(0, 0) = RatFunc(1);
        rho.at(1, 0) = RatFunc(params.c);
        rho.at(1, 1) = RatFunc(-1);
        shown["c"] = params.c.to_string();
        break;
    case 3:
        rho.at(0, 0) = RatFunc(-1);
        rho.at(1, 0) = RatFunc(params.c);
        rho.at(1, 1) = RatFunc(1);
        shown["c"] = params.c.to_string();
        break;
    case 4:
        rho.at(0, 0) = RatFunc(-1);
        rho.at(1, 1) = RatFunc(-1);
        break;
    case 5:
        rho = RfMatrix::identity(2);
        break;
    default:
        break;
    }
    std::vector<RfMatrix> s_images{eta1_block()};
    std::vector<RfMatrix> rho_images{std::move(rho)};
    return MatrixRep(GroupKind::VT, 2, std::move(s_images), std::move(rho_images), "t2fam",
                     std::move(shown), true);
}

MatrixRep vt_wt_extension_eta2(int n, const LaurentPoly& f, const LaurentPoly& g, GroupKind kind) {
    if (n < 3) {
        throw Error(ErrorKind::BadStrandCount, "extension requires n >= 3");
    }
    if (kind == GroupKind::T) {
        throw Error(ErrorKind::KindMismatch, "extension target must be VT or WT");
    }
    if (f.is_zero() || g.is_zero()) {
        throw Error(ErrorKind::ZeroScalar, "f and g must be nonzero");
    }
    std::vector<RfMatrix> s_images;
    std::vector<RfMatrix> rho_images;
    RfMatrix sblock = swap_block(f);
    RfMatrix rblock = swap_block(g);
    for (int i = 1; i <= n - 1; ++i) {
        s_images.push_back(two_local_image(static_cast<std::size_t>(n), i, sblock));
        rho_images.push_back(two_local_image(static_cast<std::size_t>(n), i, rblock));
    }
    return MatrixRep(kind, n, std::move(s_images), std::move(rho_images), "vtwt2",
                     {{"f", f.to_string()}, {"g", g.to_string()}}, true);
}

RfMatrix evaluate_word(const MatrixRep& rep, const TwinWord& word) {
    if (word.strands() != rep.strands()) {
        throw Error(ErrorKind::KindMismatch, "word strand count differs from representation");
    }
    for (const auto& letter : word.letters()) {
        if (letter.is_rho && !rep.has_rho_images()) {
            throw Error(ErrorKind::KindMismatch,
                        "word uses rho letters but the representation has no rho images");
        }
    }
    RfMatrix acc = RfMatrix::identity(rep.degree());
    for (const auto& letter : word.letters()) {
        acc = acc * rep.image(letter);
    }
    return acc;
}

RfMatrix to_rf_matrix(const LaurentMatrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m.front().size();
    RfMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.at(r, c) = RatFunc(m[r][c]);
        }
    }
    return out;
}

} // namespace twinrep
