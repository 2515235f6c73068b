#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suptrop/matrix.hpp"

namespace suptrop {

/// Univariate supertropical polynomial as a dense coefficient sequence,
/// index = exponent. The degree is the largest non-bottom index.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Element> coeffs) : c_(std::move(coeffs)) {}

  static Poly constant(Element c) { return Poly({std::move(c)}); }
  /// λ ⊕ c
  static Poly linear(Element c);

  int degree() const;  // -1 for the zero polynomial
  const Element& coef(int i) const;
  const std::vector<Element>& coeffs() const { return c_; }
  bool is_monic() const;  // leading coefficient is the one

  Element operator()(const Element& a) const;
  /// Matrix substitution; the constant term contributes α₀⊙I.
  Matrix operator()(const Matrix& a) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Renders "l^3 + 14 l + 9"; the one coefficient is omitted before a power
  /// of l, bottom coefficients skip their term.
  std::string str() const;

 private:
  std::vector<Element> c_;
};

/// Keeps coefficient α_i iff its monomial strictly dominates all others at
/// some tangible λ (strict vertex of the upper concave hull of the points
/// (i, ν(α_i))); the rest become -inf.
Poly essential_part(const Poly& f);

/// Exponents of the essential monomials, ascending.
std::vector<int> essential_exponents(const Poly& f);

/// f̃: drop the constant term, shift exponents down by one, tangible-lift
/// every coefficient. Requires f monic.
Poly tilde_poly(const Poly& f);

/// A closed interval of values; absent endpoints are unbounded.
struct Interval {
  std::optional<Rat> lo, hi;
};

struct RootSet {
  /// Corner roots, descending: values where two hull monomials of the
  /// tangible lift tie. Every corner root evaluates to a ghost.
  std::vector<Element> corner_roots;
  /// Maximal closed ranges where a ghost coefficient's monomial weakly
  /// dominates the whole polynomial.
  std::vector<Interval> ghost_intervals;
};

RootSet tangible_roots(const Poly& f);

/// A polynomial is separable when every coefficient is tangible non-bottom
/// and every monomial is essential; it then splits into distinct monic
/// linear tangible factors.
bool is_separable(const Poly& f);

}  // namespace suptrop
