#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "suptrop/rational.hpp"

namespace suptrop {

enum class Layer { tangible, ghost };

/// A supertropical scalar in logarithmic notation: an exact rational value
/// carrying a layer (tangible or ghost), or bottom (-inf, the additive zero).
/// ⊕ is maximum with ghost formation on ν-ties, ⊙ is numeric addition.
/// Bottom is canonically tangible, so the zero has a single representation.
/// Elements are immutable values; every operation is a pure function.
class Element {
 public:
  Element() = default;  // bottom

  static Element bottom() { return Element(); }
  static Element tangible(Rat v) { return Element(std::move(v), false); }
  static Element ghost(Rat v) { return Element(std::move(v), true); }
  static Element one() { return tangible(Rat(0)); }
  static Element of(Rat v, Layer l) {
    return Element(std::move(v), l == Layer::ghost);
  }

  bool is_bottom() const { return !val_.has_value(); }
  bool is_ghost() const { return ghost_; }
  bool is_tangible() const { return !ghost_ && val_.has_value(); }
  bool ghost_or_bottom() const { return ghost_ || !val_.has_value(); }
  Layer layer() const { return ghost_ ? Layer::ghost : Layer::tangible; }

  /// The finite value; throws std::bad_optional_access on bottom.
  const Rat& value() const { return val_.value(); }
  const std::optional<Rat>& value_opt() const { return val_; }

  /// ν(a) = a ⊕ a: the ghost of the same value; fixes ghosts and bottom.
  Element nu() const {
    return is_bottom() ? bottom() : ghost(*val_);
  }

  /// The hat operator: same value, tangible layer (ν restricted to tangibles
  /// is 1:1 in this model, so the lift is well defined).
  Element lift() const {
    return is_bottom() ? bottom() : tangible(*val_);
  }

  /// ⊙-inverse of a non-bottom element: negated value, same layer.
  Element inv() const;

  /// k-th ⊙-power; a^0 = one() for every a, including bottom.
  Element pow(long long k) const;

  friend Element operator+(const Element& a, const Element& b);  // ⊕
  friend Element operator*(const Element& a, const Element& b);  // ⊙

  friend bool operator==(const Element& a, const Element& b) {
    return a.ghost_ == b.ghost_ && a.val_ == b.val_;
  }

  /// Renders "3", "-4/3", "3g", "-inf".
  std::string str() const;

  /// SCALAR := '-inf' | RATIONAL 'g'?
  static Element parse(std::string_view text);

 private:
  Element(Rat v, bool g) : val_(std::move(v)), ghost_(g) {}

  std::optional<Rat> val_;  // nullopt = bottom
  bool ghost_ = false;
};

/// Compare ν-values: bottom below every finite value.
bool nu_eq(const Element& a, const Element& b);
bool nu_lt(const Element& a, const Element& b);
inline bool nu_leq(const Element& a, const Element& b) {
  return nu_lt(a, b) || nu_eq(a, b);
}

/// a ⊨ b ("a = b + ghost"): a equals b exactly, or a is ghost with ν(a) ≥ ν(b).
bool surpasses(const Element& a, const Element& b);

}  // namespace suptrop
