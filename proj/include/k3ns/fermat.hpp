#ifndef K3NS_FERMAT_HPP
#define K3NS_FERMAT_HPP

// Concrete geometry of the Fermat sextic double plane in characteristic 5:
// the 126 GF(25)-points of the Hermitian branch sextic, the 252 splitting
// lines with their ideals and sign normalization, the 22-line basis with
// its Gram matrix, the order-756,000 polarized automorphism group, and the
// Frobenius action on the lattice.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "k3ns/gf625.hpp"
#include "k3ns/gflinalg.hpp"
#include "k3ns/groebner.hpp"
#include "k3ns/intlin.hpp"
#include "k3ns/lattice.hpp"
#include "k3ns/nsvec.hpp"
#include "k3ns/poly.hpp"

namespace k3ns {

// Lines are stored by their homogeneous data in (x, y, z):
//   lform: the tangent linear form, monic at its leading variable;
//   cubic: G with w = G on the component, reduced modulo lform.
struct HLine {
  int point_index = -1;  // into Geometry::hermitian
  int sign = +1;
  Gf3 lform{};
  Poly cubic;
  Gf3 sample{};   // plane point on the line with w-value != 0
  Gf wsample{};   // = cubic(sample)
  NSVec cls{};
};

struct GroupElem {
  Gf sigma;   // w -> sigma * w, sigma = +-1 after canonicalization
  GfMat3 t;   // (x,y,z) -> (x,y,z) * t, unitary
};

struct Geometry {
  std::vector<Gf3> plane_points;        // all 651 points of P^2(GF(25))
  std::vector<int> hermitian;           // indices of the 126 branch points
  std::vector<HLine> lines;             // 252, 0-based storage of lines 1..252
  std::vector<int> deck_partner;        // line j <-> other component over same point
  IntLattice ns;                        // 22x22 Gram, det -25
  std::vector<std::vector<Qi>> gram_inv;
  std::vector<GroupElem> group;         // all 756,000 elements
  std::vector<std::array<uint8_t, kRank>> group_images;  // images of lines 1..22 (1-based)
  Mat22 frobenius{};                    // Gamma_NS

  // fast lookups built once at the end of the geometry build
  std::vector<int> line_plus, line_minus;          // by hermitian point index
  std::unordered_map<uint32_t, int> herm_of_point;  // packed point -> hermitian index

  NSVec h_fermat() const {
    NSVec h{};
    h[0] = h[1] = 1;
    return h;
  }
  int64_t pair(const NSVec& a, const NSVec& b) const;
  int64_t norm(const NSVec& a) const { return pair(a, a); }

  // line index resolution (0-based positions in `lines`)
  int line_at(int point_index, int sign) const;
  int line_of_ideal(const Gf3& lform, const Poly& cubic) const;  // -1 if absent

  Mat22 elem_matrix(size_t gi) const;  // T_gamma from the stored images
  // image of line j (0-based) under element (sigma, t)
  int apply_to_line(const GroupElem& e, int j) const;

  // seed generators (indices into `group` are not stable; these are the
  // actual elements): used for orbit BFS downstream
  std::vector<GroupElem> seeds;
};

// ---- free operations (the geometry build pipeline) ----

std::vector<Gf3> all_plane_points();
bool on_hermitian(const Gf3& p);
Gf3 normalize_point(const Gf3& p);

// all GF(25)-rational zeros of x^6+y^6+z^6 in the fixed global order
std::vector<Gf3> hermitian_points();

enum class TangentClass { kMult6Rational, kMult5NonRational };
struct TangentInfo {
  TangentClass tag;
  std::array<Gf4, 3> contact;    // tangency point (GF(625) coords)
  std::array<Gf4, 3> residual;   // transverse point in the mult-5 case
};
// Classifies a line (GF(625) coefficients) tangent to the Hermitian curve;
// nullopt for non-tangent lines.
std::optional<TangentInfo> classify_tangent(const std::array<Gf4, 3>& line);

// the two components over a rational branch point: (lform, +-cubic)
struct SplitPair {
  Gf3 lform;
  Poly cubic;  // the component w = cubic; the partner is w = -cubic
};
SplitPair split_line(const Gf3& p);

// scheme length of the intersection of two distinct line components,
// summed over the three chart strata
long line_intersection(const HLine& a, const HLine& b);

Geometry build_geometry(bool verbose = false);

// checks "every stored T is an isometry of the Gram matrix";
// parallel over elements
bool verify_group_isometries(const Geometry& g, bool parallel = true);

// hardcoded ground truth (Table 1)
struct Table1Row {
  Gf3 point;
  int sign;
  Gf3 lform;
  Poly cubic;  // normalized like HLine::cubic
};
const std::vector<Table1Row>& table1();

// deterministic parametrization of the plane line lform = 0:
// (s,t) -> s*a + t*b
void line_param(const Gf3& lform, Gf3& a, Gf3& b);

}  // namespace k3ns

#endif
