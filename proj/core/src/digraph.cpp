#include "suptrop/digraph.hpp"

#include <algorithm>

#include "suptrop/errors.hpp"
#include "suptrop/matching.hpp"

namespace suptrop {

namespace {

// Iterative Tarjan SCC; returns component id per vertex.
std::vector<int> scc_ids(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> comp(n, -1), low(n), num(n, -1), stk;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comps = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stk.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stk.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            int w = stk.back();
            stk.pop_back();
            on_stack[w] = false;
            comp[w] = comps;
            if (w == f.v) break;
          }
          ++comps;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return comp;
}

std::vector<std::vector<int>> pattern_adj(const Digraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);
  return adj;
}

void next_combination_init(std::vector<int>& idx, int k) {
  idx.resize(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
}

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Digraph from_matrix(const Matrix& a) {
  if (!a.is_square())
    throw DimensionError("digraph requires square matrix (got " +
                         a.shape_str() + ")");
  Digraph g;
  g.n = a.rows();
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (!a.at(i, j).is_bottom()) g.edges.push_back({i, j, a.at(i, j)});
  return g;
}

Matrix to_matrix(const Digraph& g) {
  Matrix a(g.n, g.n);
  for (const auto& e : g.edges) a.at(e.src, e.dst) = e.weight;
  return a;
}

Digraph reduced(const Digraph& g) {
  std::vector<int> comp = scc_ids(g.n, pattern_adj(g));
  Digraph r;
  r.n = g.n;
  for (const auto& e : g.edges)
    if (comp[e.src] == comp[e.dst]) r.edges.push_back(e);
  return r;
}

Element best_k_multicycle(const Digraph& g, int k, int subset_cap) {
  if (k < 1 || k > g.n)
    throw DomainError("k-multicycle requires 1 <= k <= n, got k=" +
                      std::to_string(k) + ", n=" + std::to_string(g.n));
  if (g.n > subset_cap)
    throw DomainError("multicycle enumeration capped at n <= " +
                      std::to_string(subset_cap));
  Matrix a = to_matrix(reduced(g));
  Element acc = Element::bottom();
  std::vector<int> idx;
  next_combination_init(idx, k);
  do {
    acc = acc + tropical_det(a.submatrix(idx, idx)).value;
  } while (next_combination(idx, g.n));
  return acc;
}

bool has_cyclic_cover(const Digraph& g) {
  return max_bipartite_matching(pattern_adj(g), g.n).size == g.n;
}

std::optional<std::vector<int>> hall_violation(const Digraph& g) {
  return hall_violator(pattern_adj(g), g.n);
}

Element average_weight(const Element& w, int length) {
  if (length <= 0) throw DomainError("average weight of empty path");
  if (w.is_bottom()) return w;
  Rat avg = w.value() / Rat(length);
  return Element::of(avg, w.layer());
}

}  // namespace suptrop
