#include "suptrop/assignment.hpp"

namespace suptrop {

namespace {
using OptRat = std::optional<Rat>;  // nullopt = +inf in min-cost space
}

// Hungarian algorithm with potentials (shortest augmenting paths), running on
// negated weights so the maximum-total assignment becomes min-cost. Forbidden
// edges stay +inf; a +inf delta means no augmenting path exists and the whole
// instance is infeasible.
Assignment assign_max(const AssignWeights& w) {
  const int n = static_cast<int>(w.size());
  Assignment res;
  if (n == 0) {
    res.feasible = true;
    res.total = Rat(0);
    return res;
  }

  std::vector<Rat> u(n + 1, Rat(0)), v(n + 1, Rat(0));
  std::vector<int> p(n + 1, 0), way(n + 1, 0);  // p[j] = row matched to col j

  auto cost = [&](int i, int j) -> OptRat {  // 1-based, negated
    const auto& cell = w[i - 1][j - 1];
    if (!cell) return std::nullopt;
    return -*cell;
  };

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<OptRat> minv(n + 1, std::nullopt);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      int i0 = p[j0];
      int j1 = -1;
      OptRat delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        OptRat c = cost(i0, j);
        if (c) {
          Rat cur = *c - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!delta) return res;  // no augmenting path: no perfect matching
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          minv[j] = *minv[j] - *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  res.col_of_row.assign(n, -1);
  Rat total(0);
  for (int j = 1; j <= n; ++j) {
    res.col_of_row[p[j] - 1] = j - 1;
    total += *w[p[j] - 1][j - 1];
  }
  res.total = total;
  res.feasible = true;
  return res;
}

}  // namespace suptrop
