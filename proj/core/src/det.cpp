#include <algorithm>
#include <numeric>

#include "suptrop/assignment.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/matrix.hpp"

namespace suptrop {

namespace {

AssignWeights nu_weights(const Matrix& a) {
  const int n = a.rows();
  AssignWeights w(n, std::vector<std::optional<Rat>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!a.at(i, j).is_bottom()) w[i][j] = a.at(i, j).value();
  return w;
}

std::optional<Rat> best_total(const AssignWeights& w) {
  Assignment s = assign_max(w);
  if (!s.feasible) return std::nullopt;
  return s.total;
}

// Optimal total over the rows [row_from, n) restricted to the free columns.
std::optional<Rat> completion_total(const AssignWeights& w, int row_from,
                                    const std::vector<bool>& col_used) {
  const int n = static_cast<int>(w.size());
  std::vector<int> cols;
  for (int j = 0; j < n; ++j)
    if (!col_used[j]) cols.push_back(j);
  AssignWeights sub(n - row_from,
                    std::vector<std::optional<Rat>>(cols.size()));
  for (int i = row_from; i < n; ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      sub[i - row_from][j] = w[i][cols[j]];
  std::optional<Rat> t = best_total(sub);
  return t;
}

// Greedy column choice per row, each candidate validated by an exact
// completion solve, so the result is the lexicographically smallest
// permutation whose product attains the given total.
Perm lex_smallest_attaining(const AssignWeights& w, const Rat& target) {
  const int n = static_cast<int>(w.size());
  Perm p(n, -1);
  std::vector<bool> used(n, false);
  Rat prefix(0);
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
      if (used[j] || !w[i][j]) continue;
      used[j] = true;
      Rat with = prefix + *w[i][j];
      if (i + 1 == n) {
        if (with == target) {
          p[i] = j;
          found = true;
          prefix = with;
        }
      } else {
        auto rest = completion_total(w, i + 1, used);
        if (rest && with + *rest == target) {
          p[i] = j;
          found = true;
          prefix = with;
        }
      }
      if (!found) used[j] = false;
    }
    if (!found) throw DomainError("internal: no attaining completion");
  }
  return p;
}

}  // namespace

DetResult tropical_det(const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("determinant requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  if (n == 0)
    return {Element::one(), Perm{}, DetClass::nonsingular};

  AssignWeights w = nu_weights(a);
  Assignment s = assign_max(w);
  if (!s.feasible)
    return {Element::bottom(), std::nullopt, DetClass::strictly_singular};

  const Rat total = s.total;

  bool ghost = false;
  for (int i = 0; i < n && !ghost; ++i)
    if (a.at(i, s.col_of_row[i]).is_ghost()) ghost = true;
  // A second optimal assignment also makes the determinant ghost; probe by
  // forbidding each optimal edge in turn.
  for (int i = 0; i < n && !ghost; ++i) {
    AssignWeights w2 = w;
    w2[i][s.col_of_row[i]].reset();
    auto t2 = best_total(w2);
    if (t2 && *t2 == total) ghost = true;
  }

  DetResult r;
  r.value = ghost ? Element::ghost(total) : Element::tangible(total);
  r.witness = lex_smallest_attaining(w, total);
  r.classification = ghost ? DetClass::singular : DetClass::nonsingular;
  return r;
}

std::vector<Perm> attaining_permutations(const Matrix& a, int enum_cap) {
  if (!a.is_square())
    throw DimensionError("determinant requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  DetResult d = tropical_det(a);
  if (d.value.is_bottom()) return {};
  if (n > enum_cap) return {*d.witness};

  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    Element prod = Element::one();
    for (int i = 0; i < n; ++i) prod = prod * a.at(i, p[i]);
    if (!prod.is_bottom() && nu_eq(prod, d.value)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<std::pair<Perm, Matrix>> invertible_decomposition(
    const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("decomposition requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  Perm sigma(n, -1);
  std::vector<int> col_count(n, 0);
  for (int i = 0; i < n; ++i) {
    int nonzero = 0;
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j).is_bottom()) continue;
      ++nonzero;
      if (!a.at(i, j).is_tangible()) return std::nullopt;
      sigma[i] = j;
      ++col_count[j];
    }
    if (nonzero != 1) return std::nullopt;
  }
  for (int j = 0; j < n; ++j)
    if (col_count[j] != 1) return std::nullopt;

  Vec d(n);
  for (int i = 0; i < n; ++i) d[sigma[i]] = a.at(i, sigma[i]);
  return std::make_pair(sigma, Matrix::diag(d));
}

}  // namespace suptrop
