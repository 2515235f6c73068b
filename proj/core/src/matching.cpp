#include "suptrop/matching.hpp"

#include <algorithm>

namespace suptrop {

namespace {

bool try_kuhn(int u, const std::vector<std::vector<int>>& adj,
              std::vector<bool>& seen, std::vector<int>& match_of_right) {
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = true;
    if (match_of_right[v] == -1 ||
        try_kuhn(match_of_right[v], adj, seen, match_of_right)) {
      match_of_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteResult max_bipartite_matching(
    const std::vector<std::vector<int>>& adj, int n_right) {
  const int n_left = static_cast<int>(adj.size());
  BipartiteResult r;
  r.match_of_right.assign(n_right, -1);
  for (int u = 0; u < n_left; ++u) {
    std::vector<bool> seen(n_right, false);
    if (try_kuhn(u, adj, seen, r.match_of_right)) ++r.size;
  }
  r.match_of_left.assign(n_left, -1);
  for (int v = 0; v < n_right; ++v)
    if (r.match_of_right[v] != -1) r.match_of_left[r.match_of_right[v]] = v;
  return r;
}

std::optional<std::vector<int>> hall_violator(
    const std::vector<std::vector<int>>& adj, int n_right) {
  const int n_left = static_cast<int>(adj.size());
  BipartiteResult m = max_bipartite_matching(adj, n_right);
  if (m.size == n_left) return std::nullopt;

  // Alternating-path reachability from every unmatched left vertex:
  // left→right along any edge, right→left along matching edges.
  std::vector<bool> left_vis(n_left, false), right_vis(n_right, false);
  std::vector<int> stack;
  for (int u = 0; u < n_left; ++u)
    if (m.match_of_left[u] == -1 && !left_vis[u]) {
      left_vis[u] = true;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (right_vis[v]) continue;
      right_vis[v] = true;
      int w = m.match_of_right[v];
      if (w != -1 && !left_vis[w]) {
        left_vis[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> s;
  for (int u = 0; u < n_left; ++u)
    if (left_vis[u]) s.push_back(u);
  return s;
}

}  // namespace suptrop
