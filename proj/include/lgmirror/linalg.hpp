// Exact integer and rational linear algebra: determinants, ranks, Smith form,
// lattice bases of subspaces and linear solves.
#pragma once

#include <optional>

#include "lgmirror/arith.hpp"

namespace lgm {

// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Int det(Mat a);

// Rank over Q.
int rank(const Mat& a);

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... . Only the nonzero diagonal entries are reported.
struct SmithForm {
    Mat U, V, D;
    Vec divisors;  // nonzero elementary divisors (positive)
};
SmithForm smith_normal_form(const Mat& a);

// Inverse of a unimodular integer matrix.
Mat unimodular_inverse(const Mat& u);

// Basis of the saturated lattice (span_Q rows) ∩ Z^n, extended to a basis of
// Z^n: the first r rows of `full` span the saturation, r = rank.
struct LatticeBasis {
    int r = 0;
    Mat full;      // n x n unimodular, rows are the basis
    Mat full_inv;  // inverse of `full`
};
LatticeBasis saturated_basis(const Mat& rows, int n);

// Integer basis of {x in Z^n : A x = 0} (right kernel), saturated.
Mat integer_kernel(const Mat& a, int n);

// Primitive normal vector to the hyperplane through the origin spanned by
// n-1 vectors in Z^n, via signed maximal minors. Zero if dependent.
Vec cofactor_normal(const Mat& rows, int n);

// Solves A x = b over Q. Returns nullopt if inconsistent; if underdetermined,
// returns one solution with free variables set to zero.
std::optional<RVec> rational_solve(const RMat& a, const RVec& b);

// Affine rank of a point set (dimension of its affine hull); -1 if empty.
int affine_dim(const std::vector<Vec>& pts);

}  // namespace lgm
