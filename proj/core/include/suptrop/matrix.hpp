#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "suptrop/element.hpp"

namespace suptrop {

using Vec = std::vector<Element>;
using Perm = std::vector<int>;  // perm[i] = image of row i (0-based)

/// A vector is tangible when every entry is tangible-or-bottom and at least
/// one entry is non-bottom.
bool is_tangible_vec(const Vec& v);
bool all_ghost_or_bottom(const Vec& v);
Vec scale_vec(const Element& c, const Vec& v);
std::string vec_str(const Vec& v);

/// Dense supertropical matrix. Entrywise ⊕ is operator+, the row-by-column
/// ⊕/⊙ product is operator*. Matrices are immutable in spirit: operations
/// return fresh values.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Element>> rows);

  static Matrix identity(int n);
  static Matrix diag(const Vec& d);
  static Matrix permutation(const Perm& p);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Element& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }
  Element& operator()(int i, int j) { return at(i, j); }
  const Element& operator()(int i, int j) const { return at(i, j); }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  Matrix transpose() const;
  Matrix pow(int m) const;  // m ≥ 0; pow(0) = identity
  Matrix submatrix(const std::vector<int>& rows,
                   const std::vector<int>& cols) const;

  Matrix nu() const;             // entrywise ν
  Matrix lift() const;           // entrywise tangible lift
  Matrix tangible_part() const;  // ghost entries replaced by bottom

  bool all_ghost_or_bottom() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Element& c, const Matrix& a);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::string shape_str() const;

 private:
  int rows_, cols_;
  std::vector<Element> e_;
};

enum class DetClass { nonsingular, singular, strictly_singular };

std::string to_string(DetClass c);

/// Result of the tropical determinant (permanent). The classification follows
/// the layer of the value: tangible → nonsingular, ghost → singular,
/// bottom → strictly singular. The witness is the lexicographically smallest
/// permutation attaining the determinant, absent when the value is bottom.
struct DetResult {
  Element value;
  std::optional<Perm> witness;
  DetClass classification;
};

/// Permanent over the supertropical semiring, computed as a linear assignment
/// problem on ν-values (no permutation enumeration). The result is ghost iff
/// a second optimal assignment of equal total exists or the unique optimal
/// assignment crosses a ghost entry.
DetResult tropical_det(const Matrix& a);

/// All permutations whose product reaches ν(det), enumerated for
/// n ≤ enum_cap; above the cap only the assignment solver's witness is
/// reported. Empty when det = -inf (no permutation is considered attaining).
std::vector<Perm> attaining_permutations(const Matrix& a, int enum_cap = 8);

/// A = P_σ · D for a tangible invertible diagonal D, iff A is multiplicatively
/// invertible; absent otherwise.
std::optional<std::pair<Perm, Matrix>> invertible_decomposition(
    const Matrix& a);

}  // namespace suptrop
