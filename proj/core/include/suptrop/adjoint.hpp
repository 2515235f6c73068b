#pragma once

#include <utility>
#include <vector>

#include "suptrop/matrix.hpp"

namespace suptrop {

/// The (i,j)-minor: a with row i and column j deleted. 0-based, n ≥ 2.
Matrix minor_of(const Matrix& a, int i, int j);

/// adj(a): transpose of the matrix of minor determinants; adj of a 1×1 matrix
/// is [[0]] (empty-product convention, so the Laplace expansion holds at n=1).
Matrix adjoint(const Matrix& a);

/// A^∇ = adj(A) ⊙ lift(|A|)⁻¹. When |A| is ghost the division is by the
/// tangible lift of the determinant; |A| = -inf has no quasi-inverse.
Matrix quasi_inverse(const Matrix& a);

struct QuasiPair {
  Matrix left;   // I_A  = A · A^∇
  Matrix right;  // I'_A = A^∇ · A
};

QuasiPair quasi_identities(const Matrix& a);

/// True iff e has diagonal exactly 0 (the one), ghost-or-bottom off-diagonal,
/// e·e = e, and e is nonsingular.
bool is_quasi_identity(const Matrix& e);

struct VnReport {
  bool regular = false;
  std::vector<std::pair<int, int>> mismatches;  // 0-based positions
};

/// Von Neumann regularity check: compares A·adj(A)·A against |A|⊙A by
/// ν-value, entrywise. (A·adj(A)·A always ghost-surpasses |A|⊙A; the
/// genuine failures are the positions where even the ν-values differ.)
VnReport vn_regular(const Matrix& a);

/// Solves Aw = v + ghost as w = A^∇·v; every entry of A·w ghost-surpasses
/// the matching entry of v. Throws for strictly singular A.
Vec solve_ghost(const Matrix& a, const Vec& v);

}  // namespace suptrop
