#include "k3ns/fermat.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3ns {

namespace {

uint32_t point_key(const Gf3& p) {
  return static_cast<uint32_t>(p[0].enc()) | (static_cast<uint32_t>(p[1].enc()) << 8) |
         (static_cast<uint32_t>(p[2].enc()) << 16);
}

Gf sextic_value(const Gf3& p) { return p[0].pow(6) + p[1].pow(6) + p[2].pow(6); }

Gf3 normalize_lform(Gf3 l) {
  for (int i = 0; i < 3; ++i) {
    if (!l[i].is_zero()) {
      Gf inv = l[i].inv();
      for (int j = 0; j < 3; ++j) l[j] *= inv;
      return l;
    }
  }
  std::fprintf(stderr, "k3ns: zero linear form\n");
  std::abort();
}

Poly reduce_mod_linear(const Poly& g, const Gf3& l) {
  int lead = 0;
  while (l[lead].is_zero()) ++lead;
  std::array<Poly, 3> sub{Poly::variable(0), Poly::variable(1), Poly::variable(2)};
  Poly repl;
  for (int j = lead + 1; j < 3; ++j) repl -= Poly::variable(j).scaled(l[j]);
  sub[lead] = repl;
  return g.subst(sub[0], sub[1], sub[2]);
}

Poly lform_poly(const Gf3& l) {
  Poly p;
  for (int i = 0; i < 3; ++i) p += Poly::variable(i).scaled(l[i]);
  return p;
}

// binomial(6,k) mod 5 for the restriction of the Fermat sextic
constexpr int kBinom6[7] = {1, 1, 0, 0, 0, 1, 1};

// coefficients S[k] of s^(6-k) t^k in sum_i (s a_i + t b_i)^6
std::array<Gf, 7> restrict_sextic(const Gf3& a, const Gf3& b) {
  std::array<Gf, 7> s{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= 6; ++k) {
      if (kBinom6[k] == 0) continue;
      s[k] += Gf::from_int(kBinom6[k]) * a[i].pow(6 - k) * b[i].pow(k);
    }
  return s;
}

// g with g*g = S as binary forms (g cubic); aborts when S is not a square
std::array<Gf, 4> binary_sextic_sqrt(const std::array<Gf, 7>& s) {
  int lead = 0;
  while (lead <= 6 && s[lead].is_zero()) ++lead;
  if (lead > 6 || (lead & 1)) {
    std::fprintf(stderr, "k3ns: restricted sextic is not a square (lead)\n");
    std::abort();
  }
  int m0 = lead / 2;
  std::array<Gf, 4> g{};
  auto r = s[lead].sqrt();
  if (!r) {
    std::fprintf(stderr, "k3ns: restricted sextic is not a square (coeff)\n");
    std::abort();
  }
  g[m0] = *r;
  Gf two_inv = Gf::from_int(2).inv();
  for (int m = m0 + 1; m <= 3; ++m) {
    Gf inner;
    for (int j = m0 + 1; j < m; ++j) {
      int k = m0 + m - j;
      if (k >= m0 && k <= 3 && k > j) inner += g[j] * g[k] * Gf::from_int(2);
      if (k == j) inner += g[j] * g[j];
    }
    g[m] = (s[m0 + m] - inner) * two_inv * g[m0].inv();
  }
  // verify the full convolution
  for (int k = 0; k <= 6; ++k) {
    Gf conv;
    for (int j = std::max(0, k - 3); j <= std::min(3, k); ++j) conv += g[j] * g[k - j];
    if (!(conv == s[k])) {
      std::fprintf(stderr, "k3ns: restricted sextic is not a square (check)\n");
      std::abort();
    }
  }
  return g;
}

// dual linear forms u, v with u(s*a + t*b) = s, v(s*a + t*b) = t
void dual_forms(const Gf3& a, const Gf3& b, Gf3& u, Gf3& v) {
  for (int e = 0; e < 3; ++e) {
    GfMat3 m{};
    m[0] = a;
    m[1] = b;
    m[2] = Gf3{};
    m[2][e] = Gf::from_int(1);
    auto inv = mat3_inv(m);
    if (!inv) continue;
    for (int i = 0; i < 3; ++i) {
      u[i] = (*inv)[i][0];
      v[i] = (*inv)[i][1];
    }
    return;
  }
  std::abort();
}

// (x,y,z)-polynomial to an affine chart in wxy-variable order.
// chart = 2: (x,y,1) -> vars (1,2) of the w-chart poly;
// chart = 1: (x,1,z); chart = 0: (1,y,z).
Poly xyz_to_chart(const Poly& p, int chart) {
  Poly one = Poly::constant(Gf::from_int(1));
  switch (chart) {
    case 2: return p.subst(Poly::variable(1), Poly::variable(2), one);
    case 1: return p.subst(Poly::variable(1), one, Poly::variable(2));
    default: return p.subst(one, Poly::variable(1), Poly::variable(2));
  }
}

long chart_length(const HLine& a, const HLine& b, int chart) {
  std::vector<Poly> gens;
  Poly w = Poly::variable(0);
  gens.push_back(xyz_to_chart(lform_poly(a.lform), chart));
  gens.push_back(w - xyz_to_chart(a.cubic, chart));
  gens.push_back(xyz_to_chart(lform_poly(b.lform), chart));
  gens.push_back(w - xyz_to_chart(b.cubic, chart));
  if (chart <= 1) gens.push_back(Poly::variable(2));  // z = 0 stratum
  if (chart == 0) gens.push_back(Poly::variable(1));  // y = 0 stratum
  auto gb = buchberger(std::move(gens));
  auto d = quotient_dimension(gb);
  if (!d) {
    std::fprintf(stderr, "k3ns: infinite intersection length (equal lines?)\n");
    std::abort();
  }
  return *d;
}

struct ElemKey {
  std::array<uint8_t, 10> k;
  bool operator==(const ElemKey&) const = default;
};
struct ElemKeyHash {
  size_t operator()(const ElemKey& e) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : e.k) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

ElemKey encode_elem(const GroupElem& e) {
  ElemKey k;
  k.k[0] = e.sigma.enc();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k.k[1 + 3 * i + j] = e.t[i][j].enc();
  return k;
}

GroupElem canonical_elem(const GroupElem& e) {
  GroupElem best = e;
  ElemKey bk = encode_elem(e);
  for (Gf lam : gf_mu6()) {
    GroupElem cand{e.sigma * lam.pow(3), mat3_scaled(e.t, lam)};
    ElemKey ck = encode_elem(cand);
    if (ck.k < bk.k) {
      bk = ck;
      best = cand;
    }
  }
  return best;
}

bool is_unitary(const GfMat3& m) {
  GfMat3 prod = mat3_mul(m, mat3_transpose(mat3_conj(m)));
  return prod == mat3_id();
}

Gf eval3(const Poly& p, const Gf3& v) { return p.eval(v[0], v[1], v[2]); }

}  // namespace

std::vector<Gf3> all_plane_points() {
  std::vector<Gf3> pts;
  Gf one = Gf::from_int(1);
  for (Gf y : gf_all())
    for (Gf z : gf_all()) pts.push_back({one, y, z});
  for (Gf z : gf_all()) pts.push_back({Gf(), one, z});
  pts.push_back({Gf(), Gf(), one});
  return pts;
}

Gf3 normalize_point(const Gf3& p) {
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_zero()) {
      Gf inv = p[i].inv();
      return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
  std::abort();
}

bool on_hermitian(const Gf3& p) { return sextic_value(p).is_zero(); }

std::vector<Gf3> hermitian_points() {
  std::vector<Gf3> out;
  for (auto& p : all_plane_points())
    if (on_hermitian(p)) out.push_back(p);
  return out;
}

void line_param(const Gf3& l, Gf3& a, Gf3& b) {
  if (!l[0].is_zero()) {
    Gf i0 = l[0].inv();
    a = {-l[1] * i0, Gf::from_int(1), Gf()};
    b = {-l[2] * i0, Gf(), Gf::from_int(1)};
  } else if (!l[1].is_zero()) {
    Gf i1 = l[1].inv();
    a = {Gf::from_int(1), Gf(), Gf()};
    b = {Gf(), -l[2] * i1, Gf::from_int(1)};
  } else {
    a = {Gf::from_int(1), Gf(), Gf()};
    b = {Gf(), Gf::from_int(1), Gf()};
  }
}

SplitPair split_line(const Gf3& p) {
  assert(on_hermitian(p));
  Gf3 l{p[0].pow(5), p[1].pow(5), p[2].pow(5)};
  l = normalize_lform(l);
  Gf3 a, b;
  line_param(l, a, b);
  auto s = restrict_sextic(a, b);
  auto g = binary_sextic_sqrt(s);
  Gf3 u, v;
  dual_forms(a, b, u, v);
  Poly up = lform_poly(u), vp = lform_poly(v);
  Poly cubic;
  for (int j = 0; j <= 3; ++j) {
    if (g[j].is_zero()) continue;
    Poly term = Poly::constant(g[j]);
    for (int k = 0; k < 3 - j; ++k) term *= up;
    for (int k = 0; k < j; ++k) term *= vp;
    cubic += term;
  }
  cubic = reduce_mod_linear(cubic, l);
  // w = cubic squares to the branch sextic on the line
  Poly sx = Poly::variable(0, 6) + Poly::variable(1, 6) + Poly::variable(2, 6);
  assert(reduce_mod_linear(cubic * cubic - sx, l).is_zero());
  return SplitPair{l, cubic};
}

std::optional<TangentInfo> classify_tangent(const std::array<Gf4, 3>& line) {
  // parametrize the line over GF(625)
  std::array<Gf4, 3> a{}, b{};
  Gf4 one = Gf4::from25(Gf::from_int(1));
  if (!line[0].is_zero()) {
    Gf4 i = line[0].inv();
    a = {-line[1] * i, one, Gf4()};
    b = {-line[2] * i, Gf4(), one};
  } else if (!line[1].is_zero()) {
    Gf4 i = line[1].inv();
    a = {one, Gf4(), Gf4()};
    b = {Gf4(), -line[2] * i, one};
  } else {
    a = {one, Gf4(), Gf4()};
    b = {Gf4(), one, Gf4()};
  }
  std::array<Gf4, 7> s{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k <= 6; ++k) {
      if (kBinom6[k] == 0) continue;
      s[k] += Gf4::from25(Gf::from_int(kBinom6[k])) * a[i].pow(6 - k) * b[i].pow(k);
    }
  bool all_zero = true;
  for (auto& c : s) all_zero = all_zero && c.is_zero();
  if (all_zero) {
    std::fprintf(stderr, "k3ns: line contained in the branch sextic?\n");
    std::abort();
  }
  // roots of the binary sextic over GF(625) with multiplicities
  std::vector<std::pair<std::pair<Gf4, Gf4>, int>> roots;  // ((s0,t0), mult)
  // chart s = 1: polynomial in t with coefficients s[k]
  std::vector<Gf4> poly(s.begin(), s.end());  // poly[k] coeff of t^k
  int deg = 6;
  while (deg > 0 && poly[deg].is_zero()) --deg;
  if (deg < 6) roots.push_back({{Gf4(), one}, 6 - deg});  // root at (0:1)
  // enumerate all GF(625) values
  for (int lo = 0; lo < 25; ++lo)
    for (int hi = 0; hi < 25; ++hi) {
      Gf4 r(Gf(static_cast<uint8_t>(lo)), Gf(static_cast<uint8_t>(hi)));
      // multiplicity by synthetic division
      std::vector<Gf4> cur(poly.begin(), poly.begin() + deg + 1);
      int mult = 0;
      for (;;) {
        Gf4 val;
        Gf4 pw = one;
        for (size_t k = 0; k < cur.size(); ++k) {
          val += cur[k] * pw;
          pw *= r;
        }
        if (!val.is_zero()) break;
        ++mult;
        // synthetic division by (t - r)
        std::vector<Gf4> q(cur.size() - 1);
        Gf4 carry;
        for (int k = static_cast<int>(cur.size()) - 1; k >= 1; --k) {
          carry = cur[k] + carry * r;
          q[k - 1] = carry;
        }
        cur = q;
        if (cur.empty()) break;
      }
      if (mult > 0) roots.push_back({{one, r}, mult});
    }
  int maxm = 0;
  for (auto& rt : roots) maxm = std::max(maxm, rt.second);
  if (maxm < 2) return std::nullopt;  // secant or transversal line
  if (maxm != 5 && maxm != 6) {
    std::fprintf(stderr, "k3ns: unexpected tangency multiplicity %d\n", maxm);
    std::abort();
  }
  TangentInfo info;
  for (auto& rt : roots) {
    std::array<Gf4, 3> pt{a[0] * rt.first.first + b[0] * rt.first.second,
                          a[1] * rt.first.first + b[1] * rt.first.second,
                          a[2] * rt.first.first + b[2] * rt.first.second};
    if (rt.second == maxm)
      info.contact = pt;
    else
      info.residual = pt;
  }
  info.tag = maxm == 6 ? TangentClass::kMult6Rational : TangentClass::kMult5NonRational;
  return info;
}

long line_intersection(const HLine& a, const HLine& b) {
  return chart_length(a, b, 2) + chart_length(a, b, 1) + chart_length(a, b, 0);
}

int64_t Geometry::pair(const NSVec& x, const NSVec& y) const {
  int64_t acc = 0;
  for (int i = 0; i < kRank; ++i) {
    if (x[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < kRank; ++j) row += ns.gram[i * kRank + j] * y[j];
    acc += x[i] * row;
  }
  return acc;
}

int Geometry::line_at(int point_index, int sign) const {
  for (size_t j = 0; j < lines.size(); ++j)
    if (lines[j].point_index == point_index && lines[j].sign == sign) return static_cast<int>(j);
  return -1;
}

namespace {
std::string ideal_key(const Gf3& l, const Poly& cubic) {
  std::string k;
  for (int i = 0; i < 3; ++i) k.push_back(static_cast<char>(l[i].enc()));
  for (auto& t : cubic.terms()) {
    k.push_back(static_cast<char>(t.first[0]));
    k.push_back(static_cast<char>(t.first[1]));
    k.push_back(static_cast<char>(t.first[2]));
    k.push_back(static_cast<char>(t.second.enc()));
  }
  return k;
}
}  // namespace

int Geometry::line_of_ideal(const Gf3& lform, const Poly& cubic) const {
  std::string key = ideal_key(lform, cubic);
  for (size_t j = 0; j < lines.size(); ++j)
    if (ideal_key(lines[j].lform, lines[j].cubic) == key) return static_cast<int>(j);
  return -1;
}

Mat22 Geometry::elem_matrix(size_t gi) const {
  Mat22 t{};
  for (int i = 0; i < kRank; ++i) t[i] = lines[group_images[gi][i] - 1].cls;
  return t;
}

int Geometry::apply_to_line(const GroupElem& e, int j) const {
  const HLine& ln = lines[j];
  const Gf3& p = plane_points[hermitian[ln.point_index]];
  Gf3 pi = normalize_point(vec3_mul(p, e.t));
  auto it = herm_of_point.find(point_key(pi));
  assert(it != herm_of_point.end());
  int target = it->second;
  int plus = line_plus[target];
  Gf3 vimg = vec3_mul(ln.sample, e.t);
  Gf w_img = e.sigma * ln.wsample;
  if (eval3(lines[plus].cubic, vimg) == w_img) return plus;
  assert(eval3(lines[line_minus[target]].cubic, vimg) == w_img);
  return line_minus[target];
}

bool verify_group_isometries(const Geometry& g, bool parallel) {
  std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#else
  (void)parallel;
#endif
  for (long gi = 0; gi < static_cast<long>(g.group.size()); ++gi) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    Mat22 t = g.elem_matrix(gi);
    bool good = true;
    for (int i = 0; i < kRank && good; ++i)
      for (int j = i; j < kRank; ++j) {
        int64_t acc = 0;
        for (int k = 0; k < kRank; ++k) {
          int64_t row = 0;
          for (int l = 0; l < kRank; ++l) row += g.ns.gram[k * kRank + l] * t[j][l];
          acc += t[i][k] * row;
        }
        if (acc != g.ns.g(i, j)) {
          good = false;
          break;
        }
      }
    if (!good) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

Geometry build_geometry(bool verbose) {
  Geometry g;
  g.plane_points = all_plane_points();
  for (size_t i = 0; i < g.plane_points.size(); ++i)
    if (on_hermitian(g.plane_points[i])) g.hermitian.push_back(static_cast<int>(i));
  if (g.hermitian.size() != 126) {
    std::fprintf(stderr, "k3ns: expected 126 branch points, got %zu\n", g.hermitian.size());
    std::abort();
  }

  // split all 126 tangent lines
  struct Component {
    int point_index;
    Gf3 lform;
    Poly cubic;
  };
  std::vector<Component> comps;
  for (size_t h = 0; h < g.hermitian.size(); ++h) {
    SplitPair sp = split_line(g.plane_points[g.hermitian[h]]);
    comps.push_back({static_cast<int>(h), sp.lform, sp.cubic});
    comps.push_back({static_cast<int>(h), sp.lform, -sp.cubic});
  }
  assert(comps.size() == 252);

  // match Table 1 rows against the derived components (identical ideals)
  const auto& t1 = table1();
  auto comp_key = [](const Gf3& l, const Poly& c) { return ideal_key(l, c); };
  std::unordered_map<std::string, int> comp_index;
  for (size_t i = 0; i < comps.size(); ++i)
    comp_index[comp_key(comps[i].lform, comps[i].cubic)] = static_cast<int>(i);

  std::vector<int> table_comp;  // component index per table row
  for (auto& row : t1) {
    auto it = comp_index.find(comp_key(row.lform, row.cubic));
    if (it == comp_index.end()) {
      std::fprintf(stderr, "k3ns: Table 1 ideal not re-derived by split_line\n");
      std::abort();
    }
    table_comp.push_back(it->second);
  }

  // provisional lines: table rows first (indices 1..22), remaining
  // components sorted by (point index, table order irrelevant)
  std::vector<bool> used(comps.size(), false);
  auto add_line = [&](int ci, int sign) {
    HLine ln;
    ln.point_index = comps[ci].point_index;
    ln.sign = sign;
    ln.lform = comps[ci].lform;
    ln.cubic = comps[ci].cubic;
    // sample point with nonzero w
    Gf3 a, b;
    line_param(ln.lform, a, b);
    bool found = false;
    for (Gf t : gf_all()) {
      Gf3 pt{a[0] + t * b[0], a[1] + t * b[1], a[2] + t * b[2]};
      Gf w = eval3(ln.cubic, pt);
      if (!w.is_zero()) {
        ln.sample = pt;
        ln.wsample = w;
        found = true;
        break;
      }
    }
    if (!found) {
      Gf w = eval3(ln.cubic, b);
      assert(!w.is_zero());
      ln.sample = b;
      ln.wsample = w;
    }
    g.lines.push_back(std::move(ln));
    used[ci] = true;
  };
  for (size_t r = 0; r < t1.size(); ++r) add_line(table_comp[r], t1[r].sign);

  // sign normalization for the rest: pairing 1 with line 1 = ell^+(P0)
  struct Pending {
    int ci;
    int point_index;
  };
  std::vector<Pending> pending;
  for (size_t i = 0; i < comps.size(); ++i)
    if (!used[i]) pending.push_back({static_cast<int>(i), comps[i].point_index});
  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return a.point_index < b.point_index; });

  const HLine& ref = g.lines[0];  // ell^+(P0), fixed by fiat
  int p0_index = g.lines[0].point_index;
  std::vector<std::pair<int, int>> signed_pending;  // (ci, sign)
  for (auto& p : pending) {
    HLine tmp;
    tmp.point_index = p.point_index;
    tmp.sign = 0;
    tmp.lform = comps[p.ci].lform;
    tmp.cubic = comps[p.ci].cubic;
    int sign;
    if (p.point_index == p0_index) {
      // partner components of P0 are already rows 1,2
      std::abort();
    }
    long n = line_intersection(tmp, ref);
    if (n == 1)
      sign = +1;
    else if (n == 0)
      sign = -1;
    else {
      std::fprintf(stderr, "k3ns: ambiguous sign (pairing %ld)\n", n);
      std::abort();
    }
    signed_pending.push_back({p.ci, sign});
  }
  // exactly one + per point
  {
    std::unordered_map<int, int> plus_count;
    for (size_t i = 0; i < signed_pending.size(); ++i)
      if (signed_pending[i].second == +1) plus_count[comps[signed_pending[i].first].point_index]++;
    for (auto& [pt, cnt] : plus_count) {
      if (cnt != 1) {
        std::fprintf(stderr, "k3ns: point %d has %d plus components\n", pt, cnt);
        std::abort();
      }
    }
  }
  std::stable_sort(signed_pending.begin(), signed_pending.end(),
                   [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                     int pa = comps[a.first].point_index, pb = comps[b.first].point_index;
                     if (pa != pb) return pa < pb;
                     return a.second > b.second;  // + before -
                   });
  for (auto& [ci, sign] : signed_pending) add_line(ci, sign);
  assert(g.lines.size() == 252);

  // table rows over points != P0 must carry the sign the normalization
  // derives; rows 1,2 are the fiat choice
  for (size_t r = 2; r < t1.size(); ++r) {
    HLine tmp = g.lines[r];
    long n = line_intersection(tmp, ref);
    int derived = n == 1 ? +1 : -1;
    if (derived != t1[r].sign) {
      std::fprintf(stderr, "k3ns: Table 1 sign mismatch at row %zu\n", r + 1);
      std::abort();
    }
  }

  // deck partners and lookup tables
  g.deck_partner.assign(252, -1);
  for (int j = 0; j < 252; ++j) {
    for (int k = 0; k < 252; ++k) {
      if (k != j && g.lines[k].point_index == g.lines[j].point_index) {
        g.deck_partner[j] = k;
        break;
      }
    }
    assert(g.deck_partner[j] >= 0);
  }
  g.line_plus.assign(g.hermitian.size(), -1);
  g.line_minus.assign(g.hermitian.size(), -1);
  for (int j = 0; j < 252; ++j) {
    if (g.lines[j].sign > 0)
      g.line_plus[g.lines[j].point_index] = j;
    else
      g.line_minus[g.lines[j].point_index] = j;
  }
  for (size_t h = 0; h < g.hermitian.size(); ++h) {
    assert(g.line_plus[h] >= 0 && g.line_minus[h] >= 0);
    g.herm_of_point.emplace(point_key(g.plane_points[g.hermitian[h]]), static_cast<int>(h));
  }

  // Gram matrix of the 22 basis lines
  g.ns.n = kRank;
  g.ns.gram.assign(kRank * kRank, 0);
  for (int i = 0; i < kRank; ++i) g.ns.gram[i * kRank + i] = -2;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j) {
      long n = line_intersection(g.lines[i], g.lines[j]);
      g.ns.gram[i * kRank + j] = n;
      g.ns.gram[j * kRank + i] = n;
    }
  ZMat m(kRank, kRank);
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) m.at(i, j) = static_cast<long>(g.ns.g(i, j));
  Zi det = det_bareiss(m);
  if (det != -25) {
    std::fprintf(stderr, "k3ns: det M_NS = %s, expected -25\n", det.get_str().c_str());
    std::abort();
  }
  g.gram_inv = invert_rational(m);

  // classes of all 252 lines
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int j = 0; j < 252; ++j) {
    std::array<long, kRank> pairing{};
    for (int i = 0; i < kRank; ++i)
      pairing[i] = j == i ? -2 : line_intersection(g.lines[j], g.lines[i]);
    NSVec cls{};
    for (int c = 0; c < kRank; ++c) {
      Qi acc;
      for (int i = 0; i < kRank; ++i) acc += Qi(pairing[i]) * g.gram_inv[i][c];
      acc.canonicalize();
      if (acc.get_den() != 1) {
        std::fprintf(stderr, "k3ns: non-integral line class (line %d)\n", j + 1);
        std::abort();
      }
      cls[c] = static_cast<int32_t>(acc.get_num().get_si());
    }
    g.lines[j].cls = cls;
  }
  // sanity: basis rows are the identity; deck pairs sum to h_F
  for (int i = 0; i < kRank; ++i)
    for (int c = 0; c < kRank; ++c) assert(g.lines[i].cls[c] == (i == c ? 1 : 0));
  NSVec hf = g.h_fermat();
  for (int j = 0; j < 252; ++j) {
    NSVec sum = g.lines[j].cls + g.lines[g.deck_partner[j]].cls;
    if (sum != hf) {
      std::fprintf(stderr, "k3ns: deck pair %d does not sum to h_F\n", j + 1);
      std::abort();
    }
    if (g.pair(g.lines[j].cls, g.lines[j].cls) != -2 || g.pair(g.lines[j].cls, hf) != 1) {
      std::fprintf(stderr, "k3ns: line class invariants failed (line %d)\n", j + 1);
      std::abort();
    }
  }

  // ---- group closure over (sigma, T) pairs ----
  std::vector<GroupElem> seeds;
  {
    Gf one = Gf::from_int(1);
    GfMat3 rot{};  // x->y->z->x
    rot[0][1] = one;
    rot[1][2] = one;
    rot[2][0] = one;
    GfMat3 swap = mat3_id();
    std::swap(swap[0], swap[1]);
    Gf gen6;
    for (Gf x : gf_mu6()) {
      bool ord6 = x.pow(6) == one && !(x.pow(2) == one) && !(x.pow(3) == one);
      if (ord6) {
        gen6 = x;
        break;
      }
    }
    GfMat3 d1 = mat3_id(), d2 = mat3_id();
    d1[1][1] = gen6;
    d2[2][2] = gen6;
    // unitary reflections
    GfMat3 r1{};
    r1[0] = {Gf::from_int(3), Gf::make(0, 2), Gf()};
    r1[1] = {Gf::make(0, 3), Gf::from_int(2), Gf()};
    r1[2] = {Gf(), Gf(), one};
    GfMat3 r2{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r2[i][j] = Gf::from_int(i == j ? 2 : 1);
    for (const GfMat3& t : {rot, swap, d1, d2, r1, r2}) {
      if (!is_unitary(t)) {
        std::fprintf(stderr, "k3ns: seed matrix not unitary\n");
        std::abort();
      }
      seeds.push_back(GroupElem{one, t});
    }
    seeds.push_back(GroupElem{-one, mat3_id()});  // deck involution
  }
  g.seeds = seeds;

  std::unordered_set<ElemKey, ElemKeyHash> seen;
  std::deque<GroupElem> queue;
  GroupElem id{Gf::from_int(1), mat3_id()};
  id = canonical_elem(id);
  seen.insert(encode_elem(id));
  queue.push_back(id);
  g.group.push_back(id);
  while (!queue.empty()) {
    GroupElem cur = queue.front();
    queue.pop_front();
    for (const auto& s : seeds) {
      GroupElem nxt{cur.sigma * s.sigma, mat3_mul(cur.t, s.t)};
      nxt = canonical_elem(nxt);
      if (seen.insert(encode_elem(nxt)).second) {
        queue.push_back(nxt);
        g.group.push_back(nxt);
      }
    }
  }
  if (g.group.size() != 756000) {
    std::fprintf(stderr, "k3ns: group closure has %zu elements, expected 756000\n",
                 g.group.size());
    std::abort();
  }
  if (verbose) std::fprintf(stderr, "k3ns: group closure done (%zu)\n", g.group.size());

  // images of the 22 basis lines for every element
  g.group_images.resize(g.group.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long gi = 0; gi < static_cast<long>(g.group.size()); ++gi) {
    for (int i = 0; i < kRank; ++i)
      g.group_images[gi][i] = static_cast<uint8_t>(g.apply_to_line(g.group[gi], i) + 1);
  }
  // faithfulness: distinct images
  {
    std::vector<std::array<uint8_t, kRank>> sorted = g.group_images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      std::fprintf(stderr, "k3ns: representation not faithful\n");
      std::abort();
    }
  }

  // Frobenius action: conjugate each basis line's ideal
  for (int i = 0; i < kRank; ++i) {
    Gf3 lc{g.lines[i].lform[0].frob(), g.lines[i].lform[1].frob(), g.lines[i].lform[2].frob()};
    Poly cc = g.lines[i].cubic.conj();
    int img = g.line_of_ideal(lc, cc);
    if (img < 0) {
      std::fprintf(stderr, "k3ns: Frobenius image of line %d is not a line\n", i + 1);
      std::abort();
    }
    g.frobenius[i] = g.lines[img].cls;
  }
  Mat22 g2 = mat_mul(g.frobenius, g.frobenius);
  if (!is_identity(g2)) {
    std::fprintf(stderr, "k3ns: Gamma_NS^2 != Id\n");
    std::abort();
  }
  if (mul(hf, g.frobenius) != hf) {
    std::fprintf(stderr, "k3ns: Gamma_NS does not fix h_F\n");
    std::abort();
  }
  return g;
}

std::string nsvec_str(const NSVec& v) {
  std::string s;
  for (int i = 0; i < kRank; ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace k3ns
