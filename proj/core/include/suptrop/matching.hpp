#pragma once

#include <optional>
#include <vector>

namespace suptrop {

/// Maximum bipartite matching on an n_left × n_right adjacency list
/// (Kuhn's algorithm) plus the König-style certificate extracted from a
/// failed perfect matching.
struct BipartiteResult {
  int size = 0;
  std::vector<int> match_of_left;   // -1 if unmatched
  std::vector<int> match_of_right;  // -1 if unmatched
};

BipartiteResult max_bipartite_matching(
    const std::vector<std::vector<int>>& adj, int n_right);

/// Rows S violating Hall's condition (|N(S)| < |S|) when the matching is not
/// perfect: the union of rows reachable by alternating paths from unmatched
/// rows. Absent when a perfect matching exists (requires square n_left ==
/// n_right usage for the Hall reading).
std::optional<std::vector<int>> hall_violator(
    const std::vector<std::vector<int>>& adj, int n_right);

}  // namespace suptrop
