#pragma once

#include <cstdint>
#include <span>

#include "motivic/fp.hpp"

namespace motivic {

/// Alternating bilinear form on F_p^n: zero diagonal and m[j][i] = -m[i][j].
/// Both conditions are enforced; in characteristic 2 the zero diagonal is
/// not implied by antisymmetry and point counts are wrong without it.
class SkewForm {
public:
    /// NotAlternatingError unless the matrix satisfies both conditions.
    explicit SkewForm(FpMatrix matrix);

    static SkewForm zero(int n, std::uint32_t p);

    /// The standard form of even rank r on n-space, in hyperbolic block
    /// layout: m[i][r/2 + i] = 1 and m[r/2 + i][i] = -1 for i < r/2, zeros
    /// elsewhere (basis vector i pairs with basis vector r/2 + i).
    static SkewForm standard(int n, int rank, std::uint32_t p);

    /// Builds the form from its strict upper triangle, row-major:
    /// (0,1), (0,2), ..., (n-2,n-1). upper.size() must be n(n-1)/2.
    static SkewForm from_upper_triangle(int n, std::uint32_t p,
                                        std::span<const std::uint32_t> upper);

    int dim() const { return matrix_.rows(); }
    std::uint32_t modulus() const { return matrix_.modulus(); }
    const FpMatrix& matrix() const { return matrix_; }
    int rank() const { return matrix_rank(matrix_); }

    friend bool operator==(const SkewForm& a, const SkewForm& b) {
        return a.matrix_ == b.matrix_;
    }

private:
    FpMatrix matrix_;
};

/// u^T * w * v. A 2-plane spanned by u, v is isotropic iff this vanishes
/// (the form vanishes on (u,u) and (v,v) automatically). Entries must be
/// reduced mod p; DimensionMismatchError if a length differs from dim.
FpScalar evaluate_form(const SkewForm& w, std::span<const std::uint32_t> u,
                       std::span<const std::uint32_t> v);

struct CongruenceNormalForm {
    FpMatrix transform;  // invertible P with P^T * w * P standard
    int rank;            // always even
};

/// Symplectic elimination: repeatedly pick the first basis pair (i, j) in
/// lexicographic order with w(b_i, b_j) != 0, normalize it to a hyperbolic
/// pair, make the remaining vectors orthogonal to the pair, and recurse.
/// The returned transform has the hyperbolic pairs first (all "u" vectors,
/// then all "v" vectors), then a basis of the kernel, so P^T * w * P equals
/// SkewForm::standard(n, rank, p).
CongruenceNormalForm congruence_normal_form(const SkewForm& w);

}  // namespace motivic
