#include "suptrop/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "suptrop/errors.hpp"

namespace suptrop {
namespace oracle {

Element brute_det(const Matrix& a, int cap) {
  if (!a.is_square())
    throw DimensionError("determinant requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  if (n > cap)
    throw DomainError("brute determinant capped at n <= " +
                      std::to_string(cap));
  if (n == 0) return Element::one();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  Element acc = Element::bottom();
  do {
    Element prod = Element::one();
    for (int i = 0; i < n; ++i) prod = prod * a.at(i, p[i]);
    acc = acc + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

Poly brute_charpoly(const Matrix& a, int cap) {
  if (!a.is_square())
    throw DimensionError("characteristic polynomial requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  if (n > cap)
    throw DomainError("brute charpoly capped at n <= " + std::to_string(cap));
  std::vector<Element> c(n + 1);
  c[n] = Element::one();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    int k = static_cast<int>(idx.size());
    c[n - k] = c[n - k] + brute_det(a.submatrix(idx, idx), cap);
  }
  return Poly(std::move(c));
}

namespace {

// All simple cycles, each recorded once, rooted at its smallest vertex.
struct SimpleCycle {
  unsigned mask;
  Element weight;
  std::vector<int> path;
};

void cycles_from(const Matrix& a, int root, int v, unsigned mask,
                 const Element& w, std::vector<int>& path,
                 std::vector<SimpleCycle>& out) {
  const int n = a.rows();
  for (int u = 0; u < n; ++u) {
    if (a.at(v, u).is_bottom()) continue;
    if (u == root) {
      out.push_back({mask, w * a.at(v, u), path});
    } else if (u > root && !(mask & (1u << u))) {
      path.push_back(u);
      cycles_from(a, root, u, mask | (1u << u), w * a.at(v, u), path, out);
      path.pop_back();
    }
  }
}

void combine(const std::vector<SimpleCycle>& cycles, size_t from, int len,
             unsigned mask, Multicycle& cur, int k,
             std::vector<Multicycle>& out) {
  if (len == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < cycles.size(); ++i) {
    const SimpleCycle& c = cycles[i];
    int clen = __builtin_popcount(c.mask);
    if (len + clen > k || (mask & c.mask)) continue;
    Element saved = cur.weight;
    cur.cycles.push_back(c.path);
    cur.length += clen;
    cur.weight = cur.weight * c.weight;
    combine(cycles, i + 1, len + clen, mask | c.mask, cur, k, out);
    cur.cycles.pop_back();
    cur.length -= clen;
    cur.weight = saved;
  }
}

}  // namespace

std::vector<Multicycle> all_k_multicycles(const Digraph& g, int k) {
  if (k < 1 || k > g.n)
    throw DomainError("k-multicycle requires 1 <= k <= n");
  Matrix a = to_matrix(g);
  std::vector<SimpleCycle> cycles;
  for (int root = 0; root < g.n; ++root) {
    std::vector<int> path{root};
    cycles_from(a, root, root, 1u << root, Element::one(), path, cycles);
  }
  std::vector<Multicycle> out;
  Multicycle cur;
  combine(cycles, 0, 0, 0u, cur, k, out);
  return out;
}

Element brute_best_k_multicycle(const Digraph& g, int k) {
  Element acc = Element::bottom();
  for (const Multicycle& m : all_k_multicycles(g, k)) acc = acc + m.weight;
  return acc;
}

std::vector<Element> scan_roots(const Poly& f, const Rat& lo, const Rat& hi,
                                const Rat& step) {
  if (!(Rat(0) < step)) throw DomainError("scan step must be positive");
  std::vector<Rat> candidates;
  for (Rat x = lo; !(hi < x); x += step) candidates.push_back(x);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coef(i).is_bottom()) continue;
    for (int j = i + 1; j <= f.degree(); ++j) {
      if (f.coef(j).is_bottom()) continue;
      Rat x = (f.coef(i).value() - f.coef(j).value()) / Rat(j - i);
      if (!(x < lo) && !(hi < x)) candidates.push_back(x);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<Element> out;
  for (const Rat& x : candidates) {
    Element v = f(Element::tangible(x));
    if (v.ghost_or_bottom()) out.push_back(Element::tangible(x));
  }
  return out;
}

}  // namespace oracle
}  // namespace suptrop
