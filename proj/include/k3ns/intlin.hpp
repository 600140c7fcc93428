#ifndef K3NS_INTLIN_HPP
#define K3NS_INTLIN_HPP

// Exact integer linear algebra (GMP): Smith normal form, solving x*A = b
// over Z, determinants, rational inverses.  Construction-time only; the
// enumeration hot path works on the derived data.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace k3ns {

using Zi = mpz_class;
using Qi = mpq_class;

struct ZMat {
  size_t rows = 0, cols = 0;
  std::vector<Zi> a;
  ZMat() = default;
  ZMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Zi& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Zi& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct Snf {
  ZMat d;  // U * A * V = D, diagonal
  ZMat u;  // unimodular rows x rows
  ZMat v;  // unimodular cols x cols
};

Snf smith_normal_form(ZMat a);

// Solution set of x * A = b (x a row vector): origin + Z-basis of the
// direction lattice; nullopt when no integer solution exists.
struct AffineSolution {
  std::vector<Zi> origin;
  std::vector<std::vector<Zi>> basis;
};
std::optional<AffineSolution> solve_left(const ZMat& a, const std::vector<Zi>& b);

Zi det_bareiss(ZMat a);  // square only

// Inverse over Q via Gauss-Jordan; aborts on singular input.
std::vector<std::vector<Qi>> invert_rational(const ZMat& a);

// Unimodular matrix whose first row is the given primitive vector.
// (Completes a primitive vector to a Z-basis.)
std::vector<std::vector<Zi>> complete_primitive(const std::vector<Zi>& h);

// True when the rows of A generate all of Z^cols (all elementary
// divisors 1).
bool rows_generate_full_lattice(const ZMat& a);

}  // namespace k3ns

#endif
