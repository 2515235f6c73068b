#include "suptrop/charpoly.hpp"

#include "suptrop/digraph.hpp"
#include "suptrop/errors.hpp"

namespace suptrop {

Poly char_poly(const Matrix& a, int subset_cap) {
  if (!a.is_square())
    throw DimensionError("characteristic polynomial requires square matrix (got " +
                         a.shape_str() + ")");
  const int n = a.rows();
  Digraph g = from_matrix(a);
  std::vector<Element> c(n + 1);
  c[n] = Element::one();
  for (int k = 1; k <= n; ++k) c[n - k] = best_k_multicycle(g, k, subset_cap);
  return Poly(std::move(c));
}

Poly tangible_char_poly(const Matrix& a, int subset_cap) {
  Poly f = char_poly(a, subset_cap);
  std::vector<Element> c;
  c.reserve(f.coeffs().size());
  for (const auto& e : f.coeffs()) c.push_back(e.lift());
  return Poly(std::move(c));
}

bool satisfies(const Matrix& a, const Poly& f) {
  return f(a).all_ghost_or_bottom();
}

}  // namespace suptrop
