#ifndef K3NS_POLY_HPP
#define K3NS_POLY_HPP

// Sparse polynomials over GF(25) in three variables, ordered by
// grevlex with variable precedence var0 > var1 > var2.
//
// Two conventions share this type:
//   affine chart   : (var0, var1, var2) = (w, x, y), z = 1, weight(w) = 3
//   plane curves   : (var0, var1, var2) = (x, y, z), ordinary grading
//
// Terms are kept sorted descending (leading term first), zero
// coefficients never stored.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "k3ns/gf25.hpp"

namespace k3ns {

using Mono = std::array<uint16_t, 3>;

inline int mono_deg(const Mono& m) { return m[0] + m[1] + m[2]; }

// grevlex: higher total degree wins; ties broken by smaller exponent in the
// last variable (scanning var2, var1, var0).
int mono_cmp(const Mono& a, const Mono& b);  // >0 if a > b

inline Mono mono_mul(const Mono& a, const Mono& b) {
  return {static_cast<uint16_t>(a[0] + b[0]), static_cast<uint16_t>(a[1] + b[1]),
          static_cast<uint16_t>(a[2] + b[2])};
}
inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}
inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a
  return {static_cast<uint16_t>(b[0] - a[0]), static_cast<uint16_t>(b[1] - a[1]),
          static_cast<uint16_t>(b[2] - a[2])};
}
inline Mono mono_lcm(const Mono& a, const Mono& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

class Poly {
public:
  using Term = std::pair<Mono, Gf>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(Gf c);
  static Poly term(const Mono& m, Gf c);
  static Poly variable(int i, int e = 1);

  // Builds from an unsorted, possibly repeating term list.
  static Poly from_terms(std::vector<Term> ts);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  int degree() const;               // total degree, -1 for 0
  int degree_in(int var) const;     // max exponent of one variable
  Gf coeff(const Mono& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Gf c) const;
  Poly mul_term(const Mono& m, Gf c) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Gf eval(Gf v0, Gf v1, Gf v2) const;
  // Substitute a polynomial for each variable.
  Poly subst(const Poly& p0, const Poly& p1, const Poly& p2) const;
  Poly derivative(int var) const;
  // Frobenius on coefficients (r2 -> -r2).
  Poly conj() const;

  // Printing with explicit variable names, e.g. {"w","x","y"}.
  std::string str(const std::array<std::string, 3>& names) const;
  static std::optional<Poly> parse(const std::string& s,
                                   const std::array<std::string, 3>& names);

private:
  std::vector<Term> terms_;  // descending grevlex, no zero coeffs
};

// ---- affine chart helpers (var0 = w, var1 = x, var2 = y) ----

inline const std::array<std::string, 3>& wxy_names() {
  static const std::array<std::string, 3> n{"w", "x", "y"};
  return n;
}
inline const std::array<std::string, 3>& xyz_names() {
  static const std::array<std::string, 3> n{"x", "y", "z"};
  return n;
}

// F = w^2 - x^6 - y^6 - 1, the affine surface relation.
Poly surface_relation();

// Unique representative w*f + h (f, h free of w) of g mod (F).
Poly normal_form_F(const Poly& g);

// Monomial basis of V_m = { w f + h : deg f <= m-3, deg h <= m },
// in a fixed deterministic order; size m^2 + 2 for m >= 3.
std::vector<Mono> vm_basis(int m);

// The 28 degree-6 monomials in (x, y, z), descending grevlex; the
// coefficient order used for sextic curve coefficient vectors.
const std::vector<Mono>& sextic_monomials();

}  // namespace k3ns

#endif
