#include "suptrop/eigen.hpp"

#include <algorithm>

#include "suptrop/adjoint.hpp"
#include "suptrop/charpoly.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matching.hpp"

namespace suptrop {

namespace {

std::vector<std::vector<int>> pattern_adj(const Matrix& a) {
  std::vector<std::vector<int>> adj(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_bottom()) adj[i].push_back(j);
  return adj;
}

Element minor_det(const Matrix& m, int i, int j) {
  const int n = m.rows();
  if (n == 1) return Element::one();
  std::vector<int> rows, cols;
  for (int k = 0; k < n; ++k) {
    if (k != i) rows.push_back(k);
    if (k != j) cols.push_back(k);
  }
  return tropical_det(m.submatrix(rows, cols)).value;
}

// Coefficients from the tangible-lifted minor determinants down column j0.
Vec lifted_minor_column(const Matrix& m, int j0) {
  Vec gamma(m.rows());
  for (int i = 0; i < m.rows(); ++i) gamma[i] = minor_det(m, i, j0).lift();
  return gamma;
}

// Lexicographically smallest attaining permutation that is not the identity,
// given that the identity attains ν(det) = target. The longest identity
// prefix is lexicographically smallest, then the smallest divergent image,
// then the smallest completion.
std::optional<Perm> second_attaining(const Matrix& m, const Element& det) {
  const int n = m.rows();
  for (int t = n - 1; t >= 0; --t) {
    // π(i) = i for i < t, π(t) ≠ t: mask the diagonal entry (t,t) and pin the
    // prefix by shrinking to the suffix block on rows/cols ≥ t.
    std::vector<int> idx;
    for (int k = t; k < n; ++k) idx.push_back(k);
    Matrix block = m.submatrix(idx, idx);
    Element prefix = Element::one();
    for (int k = 0; k < t; ++k) prefix = prefix * m.at(k, k);
    if (prefix.is_bottom()) continue;
    Matrix masked = block;
    masked.at(0, 0) = Element::bottom();
    DetResult d = tropical_det(masked);
    if (d.value.is_bottom() || !nu_eq(prefix * d.value, det)) continue;
    Perm p(n);
    for (int k = 0; k < t; ++k) p[k] = k;
    for (int k = t; k < n; ++k) p[k] = idx[(*d.witness)[k - t]];
    return p;
  }
  return std::nullopt;
}

detail::WitnessInfo strict_dependence(const Matrix& m);

// Dependence of the rows of Q whose first column is all bottom. Lifted minor
// determinants down that column combine every other column into a
// two-matched-columns determinant, hence a ghost; when the leading minor is
// itself bottom the problem shrinks by one row and column.
detail::WitnessInfo padded_dependence(const Matrix& q) {
  const int k = q.rows();
  detail::WitnessInfo info;
  info.branch = detail::WitnessBranch::strictly_singular;
  if (k == 1) {
    info.gamma = {Element::one()};
    return info;
  }
  Element head = minor_det(q, 0, 0);
  if (!head.is_bottom()) {
    info.gamma = lifted_minor_column(q, 0);
    return info;
  }
  std::vector<int> rows, cols;
  for (int i = 1; i < k; ++i) rows.push_back(i);
  for (int j = 1; j < k; ++j) cols.push_back(j);
  detail::WitnessInfo sub = strict_dependence(q.submatrix(rows, cols));
  info.gamma.assign(k, Element::bottom());
  for (int i = 1; i < k; ++i) info.gamma[i] = sub.gamma[i - 1];
  return info;
}

detail::WitnessInfo strict_dependence(const Matrix& m) {
  const int n = m.rows();
  detail::WitnessInfo info;
  info.branch = detail::WitnessBranch::strictly_singular;
  for (int i = 0; i < n; ++i) {
    bool all_bottom = true;
    for (int j = 0; j < n && all_bottom; ++j)
      if (!m.at(i, j).is_bottom()) all_bottom = false;
    if (all_bottom) {
      info.gamma.assign(n, Element::bottom());
      info.gamma[i] = Element::one();
      return info;
    }
  }
  auto cover = hall_violator(pattern_adj(m), n);
  if (!cover) throw DomainError("internal: strictly singular without cover");
  std::vector<int> rows = *cover;
  std::sort(rows.begin(), rows.end());
  std::vector<bool> col_used(n, false);
  for (int r : rows)
    for (int j = 0; j < n; ++j)
      if (!m.at(r, j).is_bottom()) col_used[j] = true;
  std::vector<int> cols;  // N(S), the columns the defect rows still touch
  for (int j = 0; j < n; ++j)
    if (col_used[j]) cols.push_back(j);

  const int k = static_cast<int>(rows.size());
  Matrix q(k, k);  // bottom columns pad N(S) up to a square block
  const int pad = k - static_cast<int>(cols.size());
  for (int i = 0; i < k; ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      q.at(i, pad + static_cast<int>(j)) = m.at(rows[i], cols[j]);
  detail::WitnessInfo sub = padded_dependence(q);
  info.gamma.assign(n, Element::bottom());
  for (int i = 0; i < k; ++i) info.gamma[rows[i]] = sub.gamma[i];
  return info;
}

}  // namespace

namespace detail {

WitnessInfo row_dependence(const Matrix& m) {
  const int n = m.rows();
  DetResult d = tropical_det(m);
  if (d.classification == DetClass::nonsingular)
    throw DomainError("internal: dependence of a nonsingular matrix");
  if (d.classification == DetClass::strictly_singular)
    return strict_dependence(m);

  // Normalize the lex-smallest attaining permutation to the identity by a
  // column shuffle; rows keep their indices, so gamma needs no remapping.
  const Perm& sigma = *d.witness;
  std::vector<int> all_rows(n);
  for (int i = 0; i < n; ++i) all_rows[i] = i;
  Matrix norm = m.submatrix(all_rows, sigma);

  WitnessInfo info;
  std::optional<Perm> pi = second_attaining(norm, d.value);
  if (pi) {
    info.branch = WitnessBranch::two_attaining;
    int moved = -1, fixed = -1;
    for (int i = 0; i < n; ++i) {
      if ((*pi)[i] != i && moved == -1) moved = i;
      if ((*pi)[i] == i && fixed == -1) fixed = i;
    }
    info.gamma = lifted_minor_column(norm, moved);
    info.norm_index = fixed != -1 ? fixed : moved;
  } else {
    info.branch = WitnessBranch::ghost_diagonal;
    int g = -1;
    for (int i = 0; i < n && g == -1; ++i)
      if (norm.at(i, i).is_ghost()) g = i;
    if (g == -1)
      throw DomainError("internal: ghost determinant without tie or ghost entry");
    info.gamma = lifted_minor_column(norm, g);
  }
  return info;
}

}  // namespace detail

std::optional<std::pair<std::vector<int>, std::vector<int>>> rank_defect_cover(
    const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("rank defect cover requires square matrix (got " +
                         a.shape_str() + ")");
  auto violator = hall_violator(pattern_adj(a), a.rows());
  if (!violator) return std::nullopt;
  std::vector<int> rows = *violator;
  std::sort(rows.begin(), rows.end());
  std::vector<bool> touched(a.cols(), false);
  for (int r : rows)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(r, j).is_bottom()) touched[j] = true;
  std::vector<int> cols;
  for (int j = 0; j < a.cols(); ++j)
    if (!touched[j]) cols.push_back(j);
  return std::make_pair(rows, cols);
}

std::optional<Witness> dependence_witness(const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw DomainError("no vectors given");
  const size_t d = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != d)
      throw DimensionError("vectors of mixed lengths " + std::to_string(d) +
                           " and " + std::to_string(v.size()));
  const size_t m = vectors.size();
  Matrix mat;
  if (m == d) {
    mat = Matrix::from_rows(vectors);
  } else if (m == d + 1) {
    // n+1 vectors in R^(n): prepend a bottom column; the padded square
    // matrix is strictly singular, so a witness always exists.
    mat = Matrix(static_cast<int>(m), static_cast<int>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < d; ++j)
        mat.at(static_cast<int>(i), static_cast<int>(j) + 1) = vectors[i][j];
  } else {
    throw DimensionError("need n or n+1 vectors of length n, got " +
                         std::to_string(m) + " of length " +
                         std::to_string(d));
  }

  if (tropical_det(mat).classification == DetClass::nonsingular)
    return std::nullopt;
  detail::WitnessInfo info = detail::row_dependence(mat);

  Witness w;
  w.gamma = info.gamma;
  w.combination.assign(d, Element::bottom());
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < m; ++i)
      w.combination[j] = w.combination[j] + info.gamma[i] * vectors[i][j];
  return w;
}

bool verify_witness(const std::vector<Vec>& vectors, const Witness& w) {
  if (vectors.empty() || w.gamma.size() != vectors.size()) return false;
  const size_t d = vectors[0].size();
  bool some = false;
  for (const auto& g : w.gamma) {
    if (g.is_ghost()) return false;
    if (!g.is_bottom()) some = true;
  }
  if (!some) return false;
  for (size_t j = 0; j < d; ++j) {
    Element acc = Element::bottom();
    for (size_t i = 0; i < vectors.size(); ++i)
      acc = acc + w.gamma[i] * vectors[i][j];
    if (!acc.ghost_or_bottom()) return false;
  }
  return true;
}

std::vector<EigenPair> eigen_pairs(const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("eigen pairs require square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  Poly fhat = tangible_char_poly(a);
  RootSet roots = tangible_roots(fhat);

  std::vector<EigenPair> out;
  for (const Element& beta : roots.corner_roots) {
    Matrix b = a + beta * Matrix::identity(n);
    DetResult db = tropical_det(b);
    if (db.classification == DetClass::nonsingular)
      throw DomainError("internal: A + beta*I nonsingular at a root");
    // Columns of B are tropically dependent; witness them as rows of B^t.
    detail::WitnessInfo info = detail::row_dependence(b.transpose());
    Vec v = info.gamma;
    if (info.branch == detail::WitnessBranch::two_attaining) {
      // Scale so the anchor coordinate becomes the one; ghost-diagonal
      // witnesses are reported unscaled.
      int k = info.norm_index;
      if (k < 0 || v[k].is_bottom()) {
        k = 0;
        while (k < n && v[k].is_bottom()) ++k;
      }
      if (k < n) v = scale_vec(v[k].lift().inv(), v);
    }
    bool exact = a * v == scale_vec(beta, v);
    out.push_back({beta, v, exact});
  }
  return out;
}

bool is_weak_eigenpair(const Matrix& a, const Vec& v, const Element& beta,
                       int m) {
  if (!beta.is_tangible())
    throw DomainError("weak eigenvalue must be tangible");
  if (m < 1) throw DomainError("weak eigenpair needs m >= 1");
  Vec lhs = a.pow(m) * v;
  Vec rhs = scale_vec(beta.pow(m), v);
  for (size_t i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] + rhs[i]).ghost_or_bottom()) return false;
  return true;
}

Matrix conjugate(const Matrix& b, const Matrix& a) {
  DetResult d = tropical_det(a);
  if (d.classification != DetClass::nonsingular)
    throw DomainError("conjugation requires a nonsingular matrix, det is " +
                      d.value.str());
  return quasi_inverse(a) * b * a;
}

std::optional<std::pair<Matrix, Matrix>> diagonalize(const Matrix& a) {
  Poly f = char_poly(a);
  if (!is_separable(f)) return std::nullopt;
  std::vector<EigenPair> pairs = eigen_pairs(a);
  const int n = a.rows();
  if (static_cast<int>(pairs.size()) != n) return std::nullopt;

  Matrix u(n, n);
  Vec d(n);
  for (int j = 0; j < n; ++j) {
    d[j] = pairs[j].eigenvalue;
    for (int i = 0; i < n; ++i) u.at(i, j) = pairs[j].eigenvector[i];
  }
  if (tropical_det(u).classification != DetClass::nonsingular)
    return std::nullopt;
  Matrix dd = Matrix::diag(d);
  Matrix conj = conjugate(a, u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!surpasses(conj.at(i, j), dd.at(i, j)))
        throw DomainError("internal: conjugation does not surpass the diagonal");
  return std::make_pair(u, dd);
}

}  // namespace suptrop
