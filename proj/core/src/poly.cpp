#include "suptrop/poly.hpp"

#include <algorithm>

#include "suptrop/errors.hpp"

namespace suptrop {

Poly Poly::linear(Element c) {
  return Poly({std::move(c), Element::one()});
}

int Poly::degree() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (!c_[i].is_bottom()) return i;
  return -1;
}

const Element& Poly::coef(int i) const {
  static const Element kBottom = Element::bottom();
  if (i < 0 || i >= static_cast<int>(c_.size())) return kBottom;
  return c_[i];
}

bool Poly::is_monic() const {
  int d = degree();
  return d >= 0 && c_[d] == Element::one();
}

Element Poly::operator()(const Element& a) const {
  Element acc = Element::bottom();
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    acc = acc + c_[i] * a.pow(i);
  return acc;
}

Matrix Poly::operator()(const Matrix& a) const {
  if (!a.is_square())
    throw DimensionError("polynomial of non-square matrix " + a.shape_str());
  Matrix acc(a.rows(), a.cols());
  Matrix power = Matrix::identity(a.rows());
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (!c_[i].is_bottom()) acc = acc + c_[i] * power;
    if (i + 1 < static_cast<int>(c_.size())) power = power * a;
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Element> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coef(static_cast<int>(i)) + b.coef(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.degree() < 0 || b.degree() < 0) return Poly();
  std::vector<Element> c(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      c[i + j] = c[i + j] + a.coef(i) * b.coef(j);
  return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  int n = std::max(a.degree(), b.degree());
  for (int i = 0; i <= n; ++i)
    if (!(a.coef(i) == b.coef(i))) return false;
  return true;
}

std::string Poly::str() const {
  int d = degree();
  if (d < 0) return "-inf";
  std::string s;
  for (int i = d; i >= 0; --i) {
    if (c_[i].is_bottom()) continue;
    if (!s.empty()) s += " + ";
    bool is_one = c_[i] == Element::one();
    if (i == 0) {
      s += c_[i].str();
    } else {
      if (!is_one) s += c_[i].str() + " ";
      s += (i == 1) ? "l" : "l^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

// λ-range (open at both ends) where monomial i strictly dominates every other
// non-bottom monomial of f, by ν-value; empty when lo >= hi.
struct OpenRange {
  std::optional<Rat> lo, hi;  // nullopt = unbounded
  bool feasible = true;
};

OpenRange strict_dominance_range(const Poly& f, int i) {
  OpenRange r;
  const Rat vi = f.coef(i).value();
  for (int j = 0; j <= f.degree(); ++j) {
    if (j == i || f.coef(j).is_bottom()) continue;
    const Rat vj = f.coef(j).value();
    if (j < i) {
      Rat bound = (vj - vi) / Rat(i - j);  // need λ > bound
      if (!r.lo || bound > *r.lo) r.lo = bound;
    } else {
      Rat bound = (vi - vj) / Rat(j - i);  // need λ < bound
      if (!r.hi || bound < *r.hi) r.hi = bound;
    }
  }
  if (r.lo && r.hi && !(*r.lo < *r.hi)) r.feasible = false;
  return r;
}

}  // namespace

std::vector<int> essential_exponents(const Poly& f) {
  std::vector<int> out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coef(i).is_bottom()) continue;
    if (strict_dominance_range(f, i).feasible) out.push_back(i);
  }
  return out;
}

Poly essential_part(const Poly& f) {
  std::vector<int> ess = essential_exponents(f);
  std::vector<Element> c(f.degree() + 1);
  for (int i : ess) c[i] = f.coef(i);
  return Poly(std::move(c));
}

Poly tilde_poly(const Poly& f) {
  if (!f.is_monic()) throw DomainError("tilde of a non-monic polynomial");
  int d = f.degree();
  std::vector<Element> c(d);
  for (int i = 1; i <= d; ++i) c[i - 1] = f.coef(i).lift();
  return Poly(std::move(c));
}

RootSet tangible_roots(const Poly& f) {
  RootSet rs;
  // Corner roots: ties of consecutive hull monomials of the tangible lift.
  Poly hat(f.coeffs());
  {
    std::vector<Element> lifted;
    for (const auto& e : f.coeffs()) lifted.push_back(e.lift());
    hat = Poly(std::move(lifted));
  }
  std::vector<int> ess = essential_exponents(hat);
  for (size_t t = 0; t + 1 < ess.size(); ++t) {
    int lo = ess[t], hi = ess[t + 1];
    Rat beta = (hat.coef(lo).value() - hat.coef(hi).value()) / Rat(hi - lo);
    rs.corner_roots.push_back(Element::tangible(beta));
  }
  // Hull slopes decrease with the exponent, so the roots above are ascending.
  std::reverse(rs.corner_roots.begin(), rs.corner_roots.end());

  // Ghost intervals: weak dominance ranges of ghost coefficients, merged.
  std::vector<Interval> raw;
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f.coef(i).is_ghost()) continue;
    const Rat vi = f.coef(i).value();
    Interval iv;
    bool empty = false;
    for (int j = 0; j <= f.degree(); ++j) {
      if (j == i || f.coef(j).is_bottom()) continue;
      const Rat vj = f.coef(j).value();
      if (j < i) {
        Rat bound = (vj - vi) / Rat(i - j);  // λ ≥ bound
        if (!iv.lo || bound > *iv.lo) iv.lo = bound;
      } else {
        Rat bound = (vi - vj) / Rat(j - i);  // λ ≤ bound
        if (!iv.hi || bound < *iv.hi) iv.hi = bound;
      }
    }
    if (iv.lo && iv.hi && *iv.lo > *iv.hi) empty = true;
    if (!empty) raw.push_back(iv);
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (!a.lo) return static_cast<bool>(b.lo);
    if (!b.lo) return false;
    return *a.lo < *b.lo;
  });
  for (const auto& iv : raw) {
    if (!rs.ghost_intervals.empty()) {
      Interval& last = rs.ghost_intervals.back();
      bool overlaps = !last.hi || !iv.lo || !(*last.hi < *iv.lo);
      if (overlaps) {
        if (last.hi && (!iv.hi || *iv.hi > *last.hi)) last.hi = iv.hi;
        if (!iv.hi) last.hi.reset();
        continue;
      }
    }
    rs.ghost_intervals.push_back(iv);
  }
  return rs;
}

bool is_separable(const Poly& f) {
  int d = f.degree();
  if (d < 1) return false;
  for (int i = 0; i <= d; ++i)
    if (!f.coef(i).is_tangible()) return false;
  return static_cast<int>(essential_exponents(f).size()) == d + 1;
}

}  // namespace suptrop
