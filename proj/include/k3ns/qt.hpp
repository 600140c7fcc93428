#ifndef K3NS_QT_HPP
#define K3NS_QT_HPP

// Positive inhomogeneous quadratic triples [Q, L, c] over Q and exact
// enumeration of E(QT) = { x in Z^n : q(x) <= 0 }, where
// q(x) = x Q x^t + 2 x L + c.
//
// The enumerator projects away the last variable down to one dimension,
// then descends pinning coordinates left to right; the one-variable case
// solves the quadratic inequality in closed form with exact integer
// square roots.  All arithmetic is exact (GMP rationals); nothing is
// rounded, so the integrality tests downstream stay sound.
//
// Two drivers share the recursion: a serial reference and an OpenMP
// version parallel over the values of the first pinned coordinate.
// Results are order-independent set unions.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "k3ns/intlin.hpp"

namespace k3ns {

struct QuadTriple {
  int n = 0;
  std::vector<Qi> q;    // n*n symmetric, row-major
  std::vector<Qi> lin;  // length n
  Qi c;

  Qi& qat(int i, int j) { return q[i * n + j]; }
  const Qi& qat(int i, int j) const { return q[i * n + j]; }

  static QuadTriple from_int_rows(const std::vector<std::vector<long>>& rows,
                                  const std::vector<long>& lin, long c);
};

Qi eval_qt(const QuadTriple& qt, std::span<const int64_t> x);
Qi eval_qt_rational(const QuadTriple& qt, const std::vector<Qi>& x);

// All leading principal minors positive.
bool qt_is_positive(const QuadTriple& qt);

// Eliminates the last variable (sublevel sets project into sublevel sets).
QuadTriple project_qt(const QuadTriple& qt);

// Pins the first variable to a.
QuadTriple restrict_qt(const Qi& a, const QuadTriple& qt);

// Integer solutions of q(t) <= 0 for a one-variable positive triple.
std::vector<int64_t> qt_solve_one_var(const Qi& q, const Qi& l, const Qi& c);

struct EnumStats {
  unsigned long long count = 0;
};

// Streaming enumeration.  The sink may be called from several threads when
// parallel = true; calls never overlap for the same thread but do for
// different ones, so sinks must either be thread-safe or parallel must be
// off.  enumerate_collect and enumerate_count wrap this safely.
void enumerate_nonpositive_stream(const QuadTriple& qt,
                                  const std::function<void(std::span<const int64_t>)>& sink,
                                  bool parallel);

std::vector<std::vector<int64_t>> enumerate_collect(const QuadTriple& qt, bool parallel = false);
unsigned long long enumerate_count(const QuadTriple& qt, bool parallel = false);

// Serial reference driver (kept for the parallel-vs-serial comparison
// tests and the benchmark).
std::vector<std::vector<int64_t>> enumerate_collect_serial(const QuadTriple& qt);

}  // namespace k3ns

#endif
