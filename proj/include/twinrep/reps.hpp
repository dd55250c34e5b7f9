#pragma once

#include <map>
#include <string>
#include <vector>

#include "twinrep/freegroup.hpp"
#include "twinrep/matrix.hpp"
#include "twinrep/presentations.hpp"

namespace twinrep {

/// Assignment of an invertible RatFunc matrix to each generator of a
/// presentation. Values are immutable after construction; every image is
/// checked to have nonzero determinant, and constructors that promise the
/// 2-local shape verify it.
class MatrixRep {
public:
    MatrixRep(GroupKind kind, int n, std::vector<RfMatrix> s_images,
              std::vector<RfMatrix> rho_images, std::string tag,
              std::map<std::string, std::string> params, bool claims_two_local);

    GroupKind kind() const noexcept { return kind_; }
    int strands() const noexcept { return n_; }
    std::size_t degree() const noexcept { return degree_; }
    bool has_rho_images() const noexcept { return !rho_images_.empty(); }
    bool two_local() const noexcept { return two_local_; }

    const RfMatrix& s_image(int index) const;
    const RfMatrix& rho_image(int index) const;
    const RfMatrix& image(const TwinLetter& letter) const;

    const std::string& tag() const noexcept { return tag_; }
    const std::map<std::string, std::string>& params() const noexcept { return params_; }
    /// Human-readable identifier, e.g. "eta2(n=3, f=t)".
    std::string describe() const;

private:
    GroupKind kind_;
    int n_;
    std::size_t degree_;
    std::vector<RfMatrix> s_images_;
    std::vector<RfMatrix> rho_images_;
    std::string tag_;
    std::map<std::string, std::string> params_;
    bool two_local_;
};

/// The free-group substitution sending x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i x_{i+1}^-1 x_i x_{i+1} x_i^-1 and fixing the other
/// generators; verified to be an involution. Throws IndexOutOfRange.
FreeAut eta1_automorphism(int n, int i);

/// Degree-n 2-local representation with central block
/// [[1-t, t], [2-t, t-1]]. Throws BadStrandCount when n < 2.
MatrixRep eta1_matrix(int n);

/// Degree-(n-1) composition factor: computed by conjugating eta1_matrix with
/// the basis e_1, ..., e_{n-1}, (1,...,1)^T, checking that the last column of
/// every conjugated image is e_n, stripping the last row and column, and
/// rendering the result in the classical display (2-local blocks for
/// i <= n-2; the last generator is the identity except for a final row
/// (t-2, ..., t-2, -1)). Throws BlockStructureViolation when the conjugated
/// matrices do not reproduce that display.
MatrixRep eta1_composition_factor(int n);

/// Monomial family: s_i has block [[0, f], [1/f, 0]].
/// Throws ZeroScalar when f == 0.
MatrixRep eta2_matrix(int n, const LaurentPoly& f);

/// The unique 2-local extension shape of eta1 to VT_n: rho_i has block
/// [[0, b], [1/b, 0]]. Throws ZeroScalar / BadStrandCount (n < 3).
MatrixRep vt_extension_eta1(int n, const LaurentPoly& b);

struct T2FamilyParams {
    LaurentPoly a;  // families 1
    LaurentPoly b;  // family 1, must be nonzero
    LaurentPoly c;  // families 2, 3
};

/// The five involution families extending eta1 on two strands:
/// (1) [[a, b], [(1-a^2)/b, -a]]   (2) [[1, 0], [c, -1]]
/// (3) [[-1, 0], [c, 1]]           (4) -I                 (5) I.
/// Throws BadFamilyTag / ZeroScalar (family 1 with b == 0).
MatrixRep two_local_family_T2(int family, const T2FamilyParams& params);

/// The 2-local extension family of eta2 to VT_n / WT_n: s_i from
/// eta2_matrix(n, f), rho_i with block [[0, g], [1/g, 0]].
/// Throws ZeroScalar / BadStrandCount (n < 3) / KindMismatch (kind == T).
MatrixRep vt_wt_extension_eta2(int n, const LaurentPoly& f, const LaurentPoly& g,
                               GroupKind kind = GroupKind::WT);

/// Ordered product of the generator images along the word. All generators
/// are involutions, so inverse letters evaluate to the same image.
/// Throws KindMismatch when the word does not fit the representation.
RfMatrix evaluate_word(const MatrixRep& rep, const TwinWord& word);

/// Laurent matrix -> RatFunc matrix, for comparing a Magnus-specialized
/// Jacobian against a MatrixRep image.
RfMatrix to_rf_matrix(const LaurentMatrix& m);

} // namespace twinrep
