#pragma once

#include <optional>
#include <vector>

#include "suptrop/matrix.hpp"

namespace suptrop {

struct Edge {
  int src;
  int dst;
  Element weight;
};

/// Weighted digraph of a square matrix: one edge per non-bottom entry.
struct Digraph {
  int n = 0;
  std::vector<Edge> edges;
};

/// A set of pairwise vertex-disjoint simple cycles; length is the total edge
/// count, weight the ⊙-product of edge weights.
struct Multicycle {
  std::vector<std::vector<int>> cycles;  // each cycle as a vertex sequence
  int length = 0;
  Element weight = Element::one();
};

Digraph from_matrix(const Matrix& a);
Matrix to_matrix(const Digraph& g);

/// Erases every edge not lying on a cycle: edge (i,j) survives iff i and j
/// are in the same strongly connected component. Idempotent.
Digraph reduced(const Digraph& g);

/// Supertropical ⊕ over all k-multicycles of their weights: value is the
/// maximal weight, ghost when the maximum is attained by two distinct
/// multicycles or the maximal multicycle crosses a ghost edge, -inf when no
/// k-multicycle exists. Computed as ⊕ over k×k principal submatrices of the
/// reduced digraph of their tropical determinants; subset enumeration is
/// capped (C(n,k) growth).
Element best_k_multicycle(const Digraph& g, int k, int subset_cap = 12);

/// True iff the bipartite double of g has a perfect matching, i.e. some
/// n-multicycle (cyclic cover) exists.
bool has_cyclic_cover(const Digraph& g);

/// A set S of row-vertices with |N(S)| < |S| when no cyclic cover exists;
/// absent otherwise. Dual certificate of has_cyclic_cover.
std::optional<std::vector<int>> hall_violation(const Digraph& g);

/// Average weight of a path/cycle: the ℓ-th tropical root of w, i.e. w/ℓ.
Element average_weight(const Element& w, int length);

}  // namespace suptrop
