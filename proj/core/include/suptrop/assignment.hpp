#pragma once

#include <optional>
#include <vector>

#include "suptrop/rational.hpp"

namespace suptrop {

/// Weight table for a linear assignment instance: w[i][j] is the ν-value of
/// entry (i,j), nullopt marks a forbidden (bottom) edge.
using AssignWeights = std::vector<std::vector<std::optional<Rat>>>;

struct Assignment {
  bool feasible = false;
  Rat total;                    // meaningful only when feasible
  std::vector<int> col_of_row;  // the optimal matching, row → column
};

/// Maximum-total assignment via the Hungarian algorithm with potentials,
/// O(n³), exact arithmetic throughout. Infeasible when no perfect matching
/// avoids forbidden edges.
Assignment assign_max(const AssignWeights& w);

}  // namespace suptrop
