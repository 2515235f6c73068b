#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "suptrop/errors.hpp"

namespace suptrop {

/// Exact rational number with int64 numerator/denominator, always stored in
/// lowest terms with a positive denominator. All arithmetic is checked; an
/// intermediate that does not fit back into int64 throws std::overflow_error.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// Canonical form: "7", "-5", "16/3", "-4/3".
  std::string str() const;

  /// Accepts "16/3", "-4", "3.25" (decimals are converted exactly).
  static Rat parse(std::string_view text);

 private:
  long long num_;
  long long den_;
};

}  // namespace suptrop
