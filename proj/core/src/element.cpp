#include "suptrop/element.hpp"

namespace suptrop {

Element Element::inv() const {
  if (is_bottom()) throw DomainError("bottom has no tropical inverse");
  return Element(-*val_, ghost_);
}

Element Element::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  if (k == 0) return one();
  if (is_bottom()) return bottom();
  Rat v = *val_;
  Rat acc = v * Rat(k);
  return Element(acc, ghost_);
}

Element operator+(const Element& a, const Element& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (*a.val_ > *b.val_) return a;
  if (*a.val_ < *b.val_) return b;
  return Element::ghost(*a.val_);
}

Element operator*(const Element& a, const Element& b) {
  if (a.is_bottom() || b.is_bottom()) return Element::bottom();
  return Element(*a.val_ + *b.val_, a.ghost_ || b.ghost_);
}

std::string Element::str() const {
  if (is_bottom()) return "-inf";
  std::string s = val_->str();
  if (ghost_) s += "g";
  return s;
}

Element Element::parse(std::string_view text) {
  if (text == "-inf") return bottom();
  bool ghost = false;
  if (!text.empty() && text.back() == 'g') {
    ghost = true;
    text.remove_suffix(1);
  }
  Rat v = Rat::parse(text);  // throws DomainError on bad literal
  return ghost ? Element::ghost(v) : Element::tangible(v);
}

bool nu_eq(const Element& a, const Element& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
  return a.value() == b.value();
}

bool nu_lt(const Element& a, const Element& b) {
  if (b.is_bottom()) return false;
  if (a.is_bottom()) return true;
  return a.value() < b.value();
}

bool surpasses(const Element& a, const Element& b) {
  if (a == b) return true;
  return a.is_ghost() && !nu_lt(a, b);
}

}  // namespace suptrop
