#pragma once

#include "suptrop/digraph.hpp"
#include "suptrop/matrix.hpp"
#include "suptrop/poly.hpp"

namespace suptrop {

/// Brute-force reference implementations used by tests and the CLI's
/// --oracle flag; never called by production paths.
namespace oracle {

/// Literal supertropical ⊕ over all n! permutation products. n ≤ cap.
Element brute_det(const Matrix& a, int cap = 8);

/// α_{n-k} = ⊕ of brute_det over all C(n,k) principal submatrices. n ≤ cap.
Poly brute_charpoly(const Matrix& a, int cap = 6);

/// Every k-multicycle of g: all sets of vertex-disjoint simple cycles with
/// lengths summing to k, each with its ⊙-weight.
std::vector<Multicycle> all_k_multicycles(const Digraph& g, int k);

/// Exhaustive enumeration of all k-multicycles, ⊕-aggregated.
Element brute_best_k_multicycle(const Digraph& g, int k);

/// Tangible grid points lo, lo+step, ... ≤ hi with ghost-or-bottom
/// evaluation, plus every pairwise monomial intersection point in range.
/// Sorted ascending, deduplicated.
std::vector<Element> scan_roots(const Poly& f, const Rat& lo, const Rat& hi,
                                const Rat& step);

}  // namespace oracle

}  // namespace suptrop
