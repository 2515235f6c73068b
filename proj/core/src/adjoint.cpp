#include "suptrop/adjoint.hpp"

#include "suptrop/errors.hpp"

namespace suptrop {

Matrix minor_of(const Matrix& a, int i, int j) {
  if (!a.is_square())
    throw DimensionError("minor requires square matrix (got " + a.shape_str() +
                         ")");
  const int n = a.rows();
  if (n < 2) throw DomainError("minor of a 1x1 matrix");
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw DomainError("minor index out of range");
  std::vector<int> rows, cols;
  for (int k = 0; k < n; ++k) {
    if (k != i) rows.push_back(k);
    if (k != j) cols.push_back(k);
  }
  return a.submatrix(rows, cols);
}

Matrix adjoint(const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("adjoint requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  if (n == 1) return Matrix{{Element::one()}};
  Matrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      adj.at(i, j) = tropical_det(minor_of(a, j, i)).value;
  return adj;
}

Matrix quasi_inverse(const Matrix& a) {
  DetResult d = tropical_det(a);
  if (d.value.is_bottom())
    throw DomainError("strictly singular matrix has no quasi-inverse");
  return d.value.lift().inv() * adjoint(a);
}

QuasiPair quasi_identities(const Matrix& a) {
  Matrix qi = quasi_inverse(a);
  return {a * qi, qi * a};
}

bool is_quasi_identity(const Matrix& e) {
  if (!e.is_square()) return false;
  const int n = e.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !(e.at(i, j) == Element::one())) return false;
      if (i != j && !e.at(i, j).ghost_or_bottom()) return false;
    }
  if (!(e * e == e)) return false;
  return tropical_det(e).classification == DetClass::nonsingular;
}

VnReport vn_regular(const Matrix& a) {
  Matrix lhs = a * adjoint(a) * a;
  Matrix rhs = tropical_det(a).value * a;
  VnReport r;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!nu_eq(lhs.at(i, j), rhs.at(i, j))) r.mismatches.emplace_back(i, j);
  r.regular = r.mismatches.empty();
  return r;
}

Vec solve_ghost(const Matrix& a, const Vec& v) {
  return quasi_inverse(a) * v;  // throws for strictly singular a
}

}  // namespace suptrop
