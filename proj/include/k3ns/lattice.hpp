#ifndef K3NS_LATTICE_HPP
#define K3NS_LATTICE_HPP

// The two hyperbolic-lattice applications of the triple enumerator:
//   * solve_fixed_norm: { x : <x,v_i> = a_i, <x,x> = d } on an affine
//     slice where the restricted form is negative definite;
//   * separating_roots: { r : <r,h> > 0, <r,v> < 0, <r,r> = d } via the
//     projection to <h>-perp and exact rational lifting.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "k3ns/qt.hpp"

namespace k3ns {

using IVec = std::vector<int64_t>;

struct IntLattice {
  int n = 0;
  std::vector<int64_t> gram;  // n*n symmetric

  int64_t g(int i, int j) const { return gram[i * n + j]; }
  int64_t pair(const IVec& x, const IVec& y) const;
  int64_t norm(const IVec& x) const { return pair(x, x); }
};

struct LinearConstraint {
  IVec v;
  int64_t a;
};

struct AffineSlice {
  IVec origin;                  // c0
  std::vector<IVec> basis;      // rows span the direction lattice
  std::vector<LinearConstraint> constraints;
};

// Integer solutions of <x, v_i> = a_i; nullopt when the system has no
// integer point (the "empty slice" status).
std::optional<AffineSlice> build_slice(const IntLattice& lat,
                                       const std::vector<LinearConstraint>& cons);

enum class SliceStatus { kOk, kEmpty };

struct FixedNormResult {
  SliceStatus status = SliceStatus::kOk;
  std::vector<IVec> vectors;  // sorted
};

// Full solution set of the constrained norm equation.  Requires some
// constraint vector of positive norm so the restriction is negative
// definite.
FixedNormResult solve_fixed_norm(const IntLattice& lat, const std::vector<LinearConstraint>& cons,
                                 int64_t d, bool parallel = false);

// Streaming/counting variants over the same slice; sink receives lattice
// coordinates.  Used by the big degree-5 runs.
SliceStatus solve_fixed_norm_stream(const IntLattice& lat,
                                    const std::vector<LinearConstraint>& cons, int64_t d,
                                    const std::function<void(const IVec&)>& sink, bool parallel);
std::optional<unsigned long long> solve_fixed_norm_count(const IntLattice& lat,
                                                         const std::vector<LinearConstraint>& cons,
                                                         int64_t d, bool parallel);

// S = { r : <r,h> > 0, <r,v> < 0, <r,r> = d }; preconditions
// <h,h> > 0, <v,v> > 0, <h,v> > 0.
std::vector<IVec> separating_roots(const IntLattice& lat, const IVec& h, const IVec& v, int64_t d);

}  // namespace k3ns

#endif
