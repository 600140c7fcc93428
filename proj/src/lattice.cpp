#include "k3ns/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3ns {

int64_t IntLattice::pair(const IVec& x, const IVec& y) const {
  assert(static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n);
  int64_t acc = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    int64_t row = 0;
    for (int j = 0; j < n; ++j) row += g(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

std::optional<AffineSlice> build_slice(const IntLattice& lat,
                                       const std::vector<LinearConstraint>& cons) {
  int n = lat.n;
  size_t k = cons.size();
  // <x, v_i> = a_i  <=>  x * (M v_i^t) = a_i: stack the columns M v_i^t.
  ZMat a(n, k);
  std::vector<Zi> b(k);
  for (size_t c = 0; c < k; ++c) {
    assert(static_cast<int>(cons[c].v.size()) == n);
    for (int i = 0; i < n; ++i) {
      int64_t acc = 0;
      for (int j = 0; j < n; ++j) acc += lat.g(i, j) * cons[c].v[j];
      a.at(i, c) = static_cast<long>(acc);
    }
    b[c] = static_cast<long>(cons[c].a);
  }
  auto sol = solve_left(a, b);
  if (!sol) return std::nullopt;
  AffineSlice s;
  s.origin.resize(n);
  for (int i = 0; i < n; ++i) {
    assert(sol->origin[i].fits_slong_p());
    s.origin[i] = sol->origin[i].get_si();
  }
  for (auto& row : sol->basis) {
    IVec r(n);
    for (int i = 0; i < n; ++i) {
      assert(row[i].fits_slong_p());
      r[i] = row[i].get_si();
    }
    s.basis.push_back(std::move(r));
  }
  s.constraints = cons;
  return s;
}

namespace {

// Negated quadratic triple of t -> <c0 + tB, c0 + tB> - d on the slice;
// enumerating its nonpositive set gives { norm >= d }.
QuadTriple slice_triple(const IntLattice& lat, const AffineSlice& s, int64_t d) {
  int m = static_cast<int>(s.basis.size());
  QuadTriple qt;
  qt.n = m;
  qt.q.resize(m * m);
  qt.lin.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) qt.qat(i, j) = -Qi(static_cast<long>(lat.pair(s.basis[i], s.basis[j])));
    qt.lin[i] = -Qi(static_cast<long>(lat.pair(s.basis[i], s.origin)));
  }
  qt.c = Qi(static_cast<long>(d - lat.norm(s.origin)));
  return qt;
}

IVec slice_point(const AffineSlice& s, std::span<const int64_t> t) {
  IVec x = s.origin;
  for (size_t i = 0; i < s.basis.size(); ++i) {
    if (t[i] == 0) continue;
    for (size_t j = 0; j < x.size(); ++j) x[j] += t[i] * s.basis[i][j];
  }
  return x;
}

}  // namespace

SliceStatus solve_fixed_norm_stream(const IntLattice& lat,
                                    const std::vector<LinearConstraint>& cons, int64_t d,
                                    const std::function<void(const IVec&)>& sink, bool parallel) {
  bool some_positive = false;
  for (auto& c : cons) some_positive = some_positive || lat.norm(c.v) > 0;
  if (!some_positive) {
    std::fprintf(stderr, "k3ns: solve_fixed_norm needs a positive-norm constraint\n");
    std::abort();
  }
  auto slice = build_slice(lat, cons);
  if (!slice) return SliceStatus::kEmpty;
  if (slice->basis.empty()) {
    // zero-dimensional slice: single point
    if (lat.norm(slice->origin) == d) sink(slice->origin);
    return SliceStatus::kOk;
  }
  QuadTriple qt = slice_triple(lat, *slice, d);
  enumerate_nonpositive_stream(
      qt,
      [&](std::span<const int64_t> t) {
        IVec x = slice_point(*slice, t);
        if (lat.norm(x) == d) sink(x);
      },
      parallel);
  return SliceStatus::kOk;
}

FixedNormResult solve_fixed_norm(const IntLattice& lat, const std::vector<LinearConstraint>& cons,
                                 int64_t d, bool parallel) {
  FixedNormResult out;
  std::vector<IVec> acc;
  if (parallel) {
    std::vector<IVec> shared;
#ifdef _OPENMP
    omp_lock_t lock;
    omp_init_lock(&lock);
    out.status = solve_fixed_norm_stream(
        lat, cons, d,
        [&](const IVec& x) {
          omp_set_lock(&lock);
          shared.push_back(x);
          omp_unset_lock(&lock);
        },
        true);
    omp_destroy_lock(&lock);
#else
    out.status = solve_fixed_norm_stream(lat, cons, d,
                                         [&](const IVec& x) { shared.push_back(x); }, false);
#endif
    acc = std::move(shared);
  } else {
    out.status =
        solve_fixed_norm_stream(lat, cons, d, [&](const IVec& x) { acc.push_back(x); }, false);
  }
  std::sort(acc.begin(), acc.end());
  out.vectors = std::move(acc);
  return out;
}

std::optional<unsigned long long> solve_fixed_norm_count(const IntLattice& lat,
                                                         const std::vector<LinearConstraint>& cons,
                                                         int64_t d, bool parallel) {
  std::atomic<unsigned long long> n{0};
  SliceStatus st = solve_fixed_norm_stream(
      lat, cons, d, [&](const IVec&) { n.fetch_add(1, std::memory_order_relaxed); }, parallel);
  if (st == SliceStatus::kEmpty) return std::nullopt;
  return n.load();
}

std::vector<IVec> separating_roots(const IntLattice& lat, const IVec& h, const IVec& v,
                                   int64_t d) {
  int n = lat.n;
  int64_t ch = lat.norm(h);
  int64_t cv = lat.pair(h, v);
  if (!(ch > 0 && lat.norm(v) > 0 && cv > 0)) {
    std::fprintf(stderr, "k3ns: separating_roots precondition violated\n");
    std::abort();
  }
  // primitive part of h
  IVec h0 = h;
  int64_t g = 0;
  for (auto x : h0) g = std::gcd(g, std::abs(x));
  for (auto& x : h0) x /= g;
  std::vector<Zi> h0z(h0.begin(), h0.end());
  auto nbasis = complete_primitive(h0z);  // row 0 = h0
  // W basis = projections of rows 1..n-1; Gram and <., v>-functional.
  int m = n - 1;
  std::vector<IVec> rows(m);
  std::vector<Qi> bh(m);  // <b_i, h>
  for (int i = 0; i < m; ++i) {
    IVec r(n);
    for (int j = 0; j < n; ++j) {
      assert(nbasis[i + 1][j].fits_slong_p());
      r[j] = nbasis[i + 1][j].get_si();
    }
    bh[i] = Qi(static_cast<long>(lat.pair(r, h)));
    rows[i] = std::move(r);
  }
  Qi chq(static_cast<long>(ch)), cvq(static_cast<long>(cv));
  // Gram of W and the functional m_i = <pr2(b_i), v>
  std::vector<Qi> gw(m * m);
  std::vector<Qi> mv(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      gw[i * m + j] = Qi(static_cast<long>(lat.pair(rows[i], rows[j]))) - bh[i] * bh[j] / chq;
    mv[i] = Qi(static_cast<long>(lat.pair(rows[i], v))) - bh[i] * cvq / chq;
  }
  // f_inf(t) = t Gw t^T + (t . mv)^2 ch / cv^2; enumerate f_inf >= d.
  QuadTriple qt;
  qt.n = m;
  qt.q.resize(m * m);
  qt.lin.resize(m);
  Qi factor = chq / (cvq * cvq);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) qt.qat(i, j) = -(gw[i * m + j] + factor * mv[i] * mv[j]);
  qt.c = Qi(static_cast<long>(d));
  std::vector<IVec> out;
  enumerate_nonpositive_stream(
      qt,
      [&](std::span<const int64_t> t) {
        // r' = sum t_i pr2(b_i); rho'^2 = (d - <r',r'>_W)/ch
        Qi rr;
        for (int i = 0; i < m; ++i) {
          if (t[i] == 0) continue;
          Qi row;
          for (int j = 0; j < m; ++j)
            if (t[j] != 0) row += gw[i * m + j] * Qi(static_cast<long>(t[j]));
          rr += Qi(static_cast<long>(t[i])) * row;
        }
        Qi rho2 = (Qi(static_cast<long>(d)) - rr) / chq;
        if (rho2 <= 0) return;
        rho2.canonicalize();
        Zi sn = sqrt(rho2.get_num()), sd = sqrt(rho2.get_den());
        if (sn * sn != rho2.get_num() || sd * sd != rho2.get_den()) return;
        Qi rho(sn, sd);
        // r = rho*h + sum t_i (b_i - (<b_i,h>/ch) h)
        std::vector<Qi> rq(n);
        Qi hcoef = rho;
        for (int i = 0; i < m; ++i)
          if (t[i] != 0) hcoef -= Qi(static_cast<long>(t[i])) * bh[i] / chq;
        for (int j = 0; j < n; ++j) {
          Qi acc = hcoef * Qi(static_cast<long>(h[j]));
          for (int i = 0; i < m; ++i)
            if (t[i] != 0) acc += Qi(static_cast<long>(t[i] * rows[i][j]));
          rq[j] = acc;
        }
        IVec r(n);
        for (int j = 0; j < n; ++j) {
          rq[j].canonicalize();
          if (rq[j].get_den() != 1) return;
          assert(rq[j].get_num().fits_slong_p());
          r[j] = rq[j].get_num().get_si();
        }
        if (lat.pair(r, h) > 0 && lat.pair(r, v) < 0 && lat.norm(r) == d) out.push_back(r);
      },
      false);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3ns
