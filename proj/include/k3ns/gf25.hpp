#ifndef K3NS_GF25_HPP
#define K3NS_GF25_HPP

// Arithmetic in GF(25) = F_5(r2), r2^2 = 2.  2 is a non-square mod 5, so
// every element is uniquely a + b*r2 with a, b in {0..4}.  Elements are
// encoded as v = 5*a + b; the numeric order on v is the (a, b) lex order
// used for all deterministic tie-breaks (sqrt, canonical forms).

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace k3ns {

class Gf {
public:
  constexpr Gf() : v_(0) {}
  constexpr explicit Gf(uint8_t enc) : v_(enc) {}
  static constexpr Gf make(int a, int b) {
    return Gf(static_cast<uint8_t>(((a % 5 + 5) % 5) * 5 + ((b % 5 + 5) % 5)));
  }
  static constexpr Gf from_int(long n) { return make(static_cast<int>(n % 5), 0); }
  static constexpr Gf r2() { return make(0, 1); }

  constexpr int a() const { return v_ / 5; }
  constexpr int b() const { return v_ % 5; }
  constexpr uint8_t enc() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool in_prime_field() const { return b() == 0; }

  constexpr Gf operator+(Gf o) const { return make(a() + o.a(), b() + o.b()); }
  constexpr Gf operator-(Gf o) const { return make(a() - o.a(), b() - o.b()); }
  constexpr Gf operator-() const { return make(-a(), -b()); }
  constexpr Gf operator*(Gf o) const {
    // (a1 + b1 r2)(a2 + b2 r2) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) r2
    return make(a() * o.a() + 2 * b() * o.b(), a() * o.b() + o.a() * b());
  }
  Gf& operator+=(Gf o) { *this = *this + o; return *this; }
  Gf& operator-=(Gf o) { *this = *this - o; return *this; }
  Gf& operator*=(Gf o) { *this = *this * o; return *this; }

  constexpr bool operator==(const Gf&) const = default;
  constexpr bool operator<(Gf o) const { return v_ < o.v_; }

  // Frobenius x -> x^5 is conjugation r2 -> -r2.
  constexpr Gf frob() const { return make(a(), -b()); }

  Gf inv() const;                  // aborts on zero
  Gf operator/(Gf o) const { return *this * o.inv(); }
  Gf pow(long e) const;
  bool is_square() const;
  std::optional<Gf> sqrt() const;  // smallest root in encoding order

  // Printed as "a+b*r2" (both parts always present, e.g. "3+0*r2").
  std::string str() const;

private:
  uint8_t v_;
};

// All 25 elements in encoding order.
std::array<Gf, 25> gf_all();
// The 24 nonzero elements.
std::array<Gf, 24> gf_units();
// mu_6 = sixth roots of unity (6 elements), in encoding order.
std::array<Gf, 6> gf_mu6();
// The 12 nonzero squares, in encoding order.
std::array<Gf, 12> gf_squares();

// Parse "a+b*r2" / "a-b*r2" / "a" / "b*r2" style scalars; returns nullopt on
// malformed input.
std::optional<Gf> gf_parse(const std::string& s);

}  // namespace k3ns

#endif
