#include "suptrop/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace suptrop {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rat::Rat(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = narrow(-i128(num_));
    den_ = narrow(-i128(den_));
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = narrow(-i128(num_));
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  i128 n = i128(num_) * o.num_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  Rat inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = narrow(-i128(inv.num_));
    inv.den_ = narrow(-i128(inv.den_));
  }
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  i128 lhs = i128(a.num_) * b.den_;
  i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += "/";
    s += std::to_string(den_);
  }
  return s;
}

Rat Rat::parse(std::string_view text) {
  // RATIONAL := '-'? DIGITS ('/' DIGITS)? | '-'? DIGITS '.' DIGITS
  auto fail = [&]() -> Rat {
    throw DomainError("bad rational literal: '" + std::string(text) + "'");
  };
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  auto digits = [&](long long& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return false;
    i128 v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > std::numeric_limits<long long>::max()) return false;
      ++i;
    }
    out = static_cast<long long>(v);
    return true;
  };
  long long whole = 0;
  if (!digits(whole)) return fail();
  if (i == text.size()) return neg ? Rat(-whole) : Rat(whole);
  if (text[i] == '/') {
    ++i;
    long long den = 0;
    if (!digits(den) || i != text.size() || den == 0) return fail();
    return Rat(neg ? -whole : whole, den);
  }
  if (text[i] == '.') {
    ++i;
    size_t frac_begin = i;
    long long frac = 0;
    if (!digits(frac) || i != text.size()) return fail();
    size_t places = i - frac_begin;
    i128 den = 1;
    for (size_t k = 0; k < places; ++k) {
      den *= 10;
      if (den > std::numeric_limits<long long>::max()) return fail();
    }
    i128 num = i128(whole) * den + frac;
    Rat r(narrow(num), static_cast<long long>(den));
    return neg ? -r : r;
  }
  return fail();
}

}  // namespace suptrop
