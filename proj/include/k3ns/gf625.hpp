#ifndef K3NS_GF625_HPP
#define K3NS_GF625_HPP

// GF(625) as GF(25)[u]/(u^2 - r2); r2 is a non-square in GF(25).  Only the
// tangent-line classification needs this (contact points of multiplicity-5
// tangents live in GF(625) \ GF(25)), so the type stays minimal.

#include "k3ns/gf25.hpp"

namespace k3ns {

struct Gf4 {
  Gf lo, hi;  // lo + hi*u

  constexpr Gf4() = default;
  constexpr Gf4(Gf l, Gf h) : lo(l), hi(h) {}
  static constexpr Gf4 from25(Gf x) { return Gf4(x, Gf()); }

  bool is_zero() const { return lo.is_zero() && hi.is_zero(); }
  bool in_gf25() const { return hi.is_zero(); }
  bool operator==(const Gf4&) const = default;

  Gf4 operator+(Gf4 o) const { return {lo + o.lo, hi + o.hi}; }
  Gf4 operator-(Gf4 o) const { return {lo - o.lo, hi - o.hi}; }
  Gf4 operator-() const { return {-lo, -hi}; }
  Gf4 operator*(Gf4 o) const {
    // (a + b u)(c + d u) = ac + bd*r2 + (ad + bc) u
    return {lo * o.lo + hi * o.hi * Gf::r2(), lo * o.hi + hi * o.lo};
  }
  Gf4& operator+=(Gf4 o) { *this = *this + o; return *this; }
  Gf4& operator*=(Gf4 o) { *this = *this * o; return *this; }

  Gf4 inv() const {
    // norm = (a + b u)(a - b u) = a^2 - b^2 r2 in GF(25)
    Gf n = lo * lo - hi * hi * Gf::r2();
    Gf ni = n.inv();
    return {lo * ni, -hi * ni};
  }
  Gf4 operator/(Gf4 o) const { return *this * o.inv(); }

  // x -> x^25, the Galois involution of GF(625)/GF(25).
  Gf4 frob25() const;

  Gf4 pow(long e) const;
};

inline Gf4 Gf4::pow(long e) const {
  long m = ((e % 624) + 624) % 624;
  if (is_zero()) return e == 0 ? from25(Gf::from_int(1)) : Gf4();
  Gf4 r = from25(Gf::from_int(1)), base = *this;
  while (m) {
    if (m & 1) r *= base;
    base *= base;
    m >>= 1;
  }
  return r;
}

inline Gf4 Gf4::frob25() const { return pow(25); }

}  // namespace k3ns

#endif
