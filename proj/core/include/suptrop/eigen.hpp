#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "suptrop/matrix.hpp"
#include "suptrop/poly.hpp"

namespace suptrop {

/// A tropical-dependence certificate: tangible-or-bottom coefficients, not
/// all bottom, whose ⊕-combination of the given vectors is entirely
/// ghost-or-bottom.
struct Witness {
  Vec gamma;
  Vec combination;
};

/// For det(A) = -inf: k rows and a column set of size ≥ n+1-k on which those
/// rows are all bottom (Hall-violator certificate). Absent iff det(A) ≠ -inf.
std::optional<std::pair<std::vector<int>, std::vector<int>>> rank_defect_cover(
    const Matrix& a);

/// Constructive tropical dependence for n (or n+1, padded by a bottom
/// column) vectors of length n. Absent iff the matrix of rows is
/// nonsingular. The witness follows the constructive proof: normalize an
/// attaining permutation to the identity, then either two attaining
/// permutations (Case I) or a ghost diagonal entry (Case II) yield the
/// coefficients as tangible-lifted minors down one column; strictly singular
/// matrices recurse through the rank-defect cover.
std::optional<Witness> dependence_witness(const std::vector<Vec>& vectors);

bool verify_witness(const std::vector<Vec>& vectors, const Witness& w);

struct EigenPair {
  Element eigenvalue;   // tangible
  Vec eigenvector;      // tangible-or-bottom entries, not all bottom
  bool exact;           // A·v = β⊙v with no ghost slack
};

/// One pair per corner root β of the essential tangible characteristic
/// polynomial, descending by eigenvalue. The eigenvector is the dependence
/// witness of the columns of A ⊕ β⊙I; entrywise A·v ⊨ β⊙v.
std::vector<EigenPair> eigen_pairs(const Matrix& a);

/// True iff every entry of A^m·v ⊕ β^m⊙v is ghost-or-bottom (weak form;
/// v need not be tangible). β must be tangible, m ≥ 1.
bool is_weak_eigenpair(const Matrix& a, const Vec& v, const Element& beta,
                       int m);

/// A^∇ · B · A; requires |A| tangible (invertible).
Matrix conjugate(const Matrix& b, const Matrix& a);

/// For a separable matrix: U with eigenvector columns and D = diag of
/// eigenvalues, with U^∇·A·U entrywise ghost-surpassing D. Absent when the
/// characteristic polynomial is not separable or U is singular.
std::optional<std::pair<Matrix, Matrix>> diagonalize(const Matrix& a);

namespace detail {

enum class WitnessBranch { two_attaining, ghost_diagonal, strictly_singular };

struct WitnessInfo {
  Vec gamma;
  WitnessBranch branch;
  /// Case I scaling anchor: smallest index fixed by the second attaining
  /// permutation, or the minor column when it has none. -1 otherwise.
  int norm_index = -1;
};

/// Dependence of the rows of a square singular matrix (value layer ghost or
/// bottom); the caller guarantees non-nonsingularity.
WitnessInfo row_dependence(const Matrix& m);

}  // namespace detail

}  // namespace suptrop
