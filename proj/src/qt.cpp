#include "k3ns/qt.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3ns {

QuadTriple QuadTriple::from_int_rows(const std::vector<std::vector<long>>& rows,
                                     const std::vector<long>& lin, long c) {
  QuadTriple qt;
  qt.n = static_cast<int>(rows.size());
  qt.q.resize(qt.n * qt.n);
  qt.lin.resize(qt.n);
  for (int i = 0; i < qt.n; ++i) {
    assert(static_cast<int>(rows[i].size()) == qt.n);
    for (int j = 0; j < qt.n; ++j) qt.qat(i, j) = rows[i][j];
    qt.lin[i] = lin[i];
  }
  qt.c = c;
  return qt;
}

Qi eval_qt(const QuadTriple& qt, std::span<const int64_t> x) {
  assert(static_cast<int>(x.size()) == qt.n);
  Qi acc = qt.c;
  for (int i = 0; i < qt.n; ++i) {
    if (x[i] == 0) continue;
    Qi row;
    for (int j = 0; j < qt.n; ++j) {
      if (x[j] == 0) continue;
      row += qt.qat(i, j) * Qi(static_cast<long>(x[j]));
    }
    acc += Qi(static_cast<long>(x[i])) * row;
    acc += 2 * Qi(static_cast<long>(x[i])) * qt.lin[i];
  }
  return acc;
}

Qi eval_qt_rational(const QuadTriple& qt, const std::vector<Qi>& x) {
  Qi acc = qt.c;
  for (int i = 0; i < qt.n; ++i) {
    Qi row;
    for (int j = 0; j < qt.n; ++j) row += qt.qat(i, j) * x[j];
    acc += x[i] * row + 2 * x[i] * qt.lin[i];
  }
  return acc;
}

bool qt_is_positive(const QuadTriple& qt) {
  // Gaussian elimination tracking leading-minor signs: all pivots of the
  // LDL^t pass must be positive.
  std::vector<Qi> m = qt.q;
  int n = qt.n;
  for (int t = 0; t < n; ++t) {
    if (m[t * n + t] <= 0) return false;
    for (int i = t + 1; i < n; ++i) {
      Qi f = m[i * n + t] / m[t * n + t];
      for (int j = t; j < n; ++j) m[i * n + j] -= f * m[t * n + j];
    }
  }
  return true;
}

QuadTriple project_qt(const QuadTriple& qt) {
  assert(qt.n >= 2);
  const Qi& r = qt.qat(qt.n - 1, qt.n - 1);
  if (r <= 0) {
    std::fprintf(stderr, "k3ns: project_qt needs a positive triple\n");
    std::abort();
  }
  QuadTriple out;
  out.n = qt.n - 1;
  out.q.resize(out.n * out.n);
  out.lin.resize(out.n);
  const Qi& m = qt.lin[qt.n - 1];
  for (int i = 0; i < out.n; ++i) {
    const Qi& pi = qt.qat(i, qt.n - 1);
    for (int j = 0; j < out.n; ++j) out.q[i * out.n + j] = qt.qat(i, j) - pi * qt.qat(j, qt.n - 1) / r;
    out.lin[i] = qt.lin[i] - m * pi / r;
  }
  out.c = qt.c - m * m / r;
  return out;
}

QuadTriple restrict_qt(const Qi& a, const QuadTriple& qt) {
  assert(qt.n >= 2);
  QuadTriple out;
  out.n = qt.n - 1;
  out.q.resize(out.n * out.n);
  out.lin.resize(out.n);
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) out.q[i * out.n + j] = qt.qat(i + 1, j + 1);
    out.lin[i] = a * qt.qat(i + 1, 0) + qt.lin[i + 1];
  }
  out.c = a * a * qt.qat(0, 0) + 2 * a * qt.lin[0] + qt.c;
  return out;
}

namespace {

// Integer range of q t^2 + 2 l t + c <= 0 with q > 0; empty when lo > hi.
// Clears denominators, takes the integer sqrt of the discriminant, and
// trims the endpoints by exact evaluation.
struct OneVarRange {
  int64_t lo = 0, hi = -1;
};

OneVarRange one_var_range(const Qi& q, const Qi& l, const Qi& c) {
  Zi den = lcm(lcm(q.get_den(), l.get_den()), c.get_den());
  Zi A = q.get_num() * (den / q.get_den());
  Zi B = l.get_num() * (den / l.get_den());
  Zi C = c.get_num() * (den / c.get_den());
  assert(A > 0);
  Zi disc = B * B - A * C;
  OneVarRange r;
  if (disc < 0) return r;
  Zi s = sqrt(disc);
  auto val = [&](const Zi& t) -> Zi { return A * t * t + 2 * B * t + C; };
  Zi lo, hi;
  mpz_cdiv_q(lo.get_mpz_t(), Zi(-B - s - 1).get_mpz_t(), A.get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), Zi(-B + s + 1).get_mpz_t(), A.get_mpz_t());
  while (lo <= hi && val(lo) > 0) ++lo;
  while (lo <= hi && val(hi) > 0) --hi;
  if (lo > hi) return r;
  assert(lo.fits_slong_p() && hi.fits_slong_p());
  r.lo = lo.get_si();
  r.hi = hi.get_si();
  return r;
}

// Shared precomputation: QT_mu^0 for mu = n .. 1 (repeated projections).
struct Tower {
  int n;
  std::vector<QuadTriple> level;  // level[mu] has mu variables, mu = 1..n

  explicit Tower(const QuadTriple& qt) : n(qt.n) {
    level.resize(n + 1);
    level[n] = qt;
    for (int mu = n - 1; mu >= 1; --mu) level[mu] = project_qt(level[mu + 1]);
  }
};

// Mutable per-branch state: the linear and constant parts of QT_mu^nu.
// The quadratic parts never change (trailing submatrices of the tower).
struct Workspace {
  // lin[mu] holds the current linear part of QT_mu (length mu - depth),
  // cst[mu] the constant part.
  std::vector<std::vector<Qi>> lin;
  std::vector<Qi> cst;
  std::vector<int64_t> coords;

  explicit Workspace(const Tower& tw) {
    int n = tw.n;
    lin.resize(n + 1);
    cst.resize(n + 1);
    for (int mu = 1; mu <= n; ++mu) {
      lin[mu] = tw.level[mu].lin;
      cst[mu] = tw.level[mu].c;
    }
    coords.assign(n, 0);
  }
};

void descend(const Tower& tw, Workspace& ws, int depth,
             const std::function<void(std::span<const int64_t>)>& sink) {
  int n = tw.n;
  // one-variable triple: QT_{depth+1} with `depth` coordinates pinned
  const Qi& q1 = tw.level[depth + 1].qat(depth, depth);
  OneVarRange r = one_var_range(q1, ws.lin[depth + 1][0], ws.cst[depth + 1]);
  if (r.lo > r.hi) return;
  if (depth + 1 == n) {
    for (int64_t b = r.lo; b <= r.hi; ++b) {
      ws.coords[depth] = b;
      sink(std::span<const int64_t>(ws.coords.data(), n));
    }
    return;
  }
  // save the states this level will overwrite
  std::vector<std::vector<Qi>> save_lin(n + 1);
  std::vector<Qi> save_cst(n + 1);
  for (int mu = depth + 2; mu <= n; ++mu) {
    save_lin[mu] = ws.lin[mu];
    save_cst[mu] = ws.cst[mu];
  }
  for (int64_t b = r.lo; b <= r.hi; ++b) {
    ws.coords[depth] = b;
    Qi bq(static_cast<long>(b));
    for (int mu = depth + 2; mu <= n; ++mu) {
      const QuadTriple& base = tw.level[mu];
      const auto& prev_lin = save_lin[mu];
      auto& cur = ws.lin[mu];
      cur.resize(mu - depth - 1);
      for (int i = 0; i < mu - depth - 1; ++i)
        cur[i] = bq * base.qat(depth + 1 + i, depth) + prev_lin[i + 1];
      ws.cst[mu] = bq * bq * base.qat(depth, depth) + 2 * bq * prev_lin[0] + save_cst[mu];
    }
    descend(tw, ws, depth + 1, sink);
  }
  for (int mu = depth + 2; mu <= n; ++mu) {
    ws.lin[mu] = std::move(save_lin[mu]);
    ws.cst[mu] = std::move(save_cst[mu]);
  }
}

void require_positive(const QuadTriple& qt) {
  if (!qt_is_positive(qt)) {
    std::fprintf(stderr, "k3ns: enumeration requires a positive quadratic triple\n");
    std::abort();
  }
}

}  // namespace

std::vector<int64_t> qt_solve_one_var(const Qi& q, const Qi& l, const Qi& c) {
  OneVarRange r = one_var_range(q, l, c);
  std::vector<int64_t> out;
  for (int64_t t = r.lo; t <= r.hi; ++t) out.push_back(t);
  return out;
}

void enumerate_nonpositive_stream(const QuadTriple& qt,
                                  const std::function<void(std::span<const int64_t>)>& sink,
                                  bool parallel) {
  require_positive(qt);
  if (qt.n == 1) {
    OneVarRange r = one_var_range(qt.qat(0, 0), qt.lin[0], qt.c);
    int64_t x[1];
    for (int64_t b = r.lo; b <= r.hi; ++b) {
      x[0] = b;
      sink(std::span<const int64_t>(x, 1));
    }
    return;
  }
  Tower tw(qt);
  const Qi& q1 = tw.level[1].qat(0, 0);
  OneVarRange top = one_var_range(q1, tw.level[1].lin[0], tw.level[1].c);
  if (top.lo > top.hi) return;

#ifdef _OPENMP
  if (parallel) {
    int64_t width = top.hi - top.lo + 1;
#pragma omp parallel
    {
      Workspace ws(tw);
#pragma omp for schedule(dynamic)
      for (int64_t off = 0; off < width; ++off) {
        int64_t b = top.lo + off;
        ws.coords[0] = b;
        Qi bq(static_cast<long>(b));
        for (int mu = 2; mu <= tw.n; ++mu) {
          const QuadTriple& base = tw.level[mu];
          auto& cur = ws.lin[mu];
          cur.resize(mu - 1);
          for (int i = 0; i < mu - 1; ++i)
            cur[i] = bq * base.qat(1 + i, 0) + base.lin[i + 1];
          ws.cst[mu] = bq * bq * base.qat(0, 0) + 2 * bq * base.lin[0] + base.c;
        }
        descend(tw, ws, 1, sink);
      }
    }
    return;
  }
#else
  (void)parallel;
#endif
  Workspace ws(tw);
  descend(tw, ws, 0, sink);
}

std::vector<std::vector<int64_t>> enumerate_collect(const QuadTriple& qt, bool parallel) {
  std::vector<std::vector<int64_t>> out;
#ifdef _OPENMP
  omp_lock_t lock;
  omp_init_lock(&lock);
  enumerate_nonpositive_stream(
      qt,
      [&](std::span<const int64_t> x) {
        std::vector<int64_t> v(x.begin(), x.end());
        omp_set_lock(&lock);
        out.push_back(std::move(v));
        omp_unset_lock(&lock);
      },
      parallel);
  omp_destroy_lock(&lock);
#else
  enumerate_nonpositive_stream(
      qt, [&](std::span<const int64_t> x) { out.emplace_back(x.begin(), x.end()); }, false);
#endif
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long long enumerate_count(const QuadTriple& qt, bool parallel) {
#ifdef _OPENMP
  if (parallel) {
    std::atomic<unsigned long long> n{0};
    enumerate_nonpositive_stream(
        qt, [&](std::span<const int64_t>) { n.fetch_add(1, std::memory_order_relaxed); }, true);
    return n.load();
  }
#endif
  unsigned long long n = 0;
  enumerate_nonpositive_stream(qt, [&](std::span<const int64_t>) { ++n; }, false);
  return n;
}

std::vector<std::vector<int64_t>> enumerate_collect_serial(const QuadTriple& qt) {
  std::vector<std::vector<int64_t>> out;
  enumerate_nonpositive_stream(
      qt, [&](std::span<const int64_t> x) { out.emplace_back(x.begin(), x.end()); }, false);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3ns
