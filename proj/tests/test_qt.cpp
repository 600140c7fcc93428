#include <random>
#include <set>

#include "doctest.h"
#include "k3ns/qt.hpp"

using namespace k3ns;

namespace {

// Independent symbolic expansion of q(x) over int64.
int64_t eval_direct(const std::vector<std::vector<long>>& q, const std::vector<long>& l, long c,
                    const std::vector<int64_t>& x) {
  int n = static_cast<int>(x.size());
  int64_t acc = c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += x[i] * q[i][j] * x[j];
  for (int i = 0; i < n; ++i) acc += 2 * x[i] * l[i];
  return acc;
}

struct IntTriple {
  std::vector<std::vector<long>> q;
  std::vector<long> l;
  long c;
  QuadTriple qt;
};

// Random positive triple of shape Q = A^t A + I with small entries.
IntTriple random_positive_int(std::mt19937& rng, int n, int lmax, int cmin, int cmax) {
  std::uniform_int_distribution<int> ad(-2, 2), ld(-lmax, lmax), cd(cmin, cmax);
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (auto& row : a)
    for (auto& x : row) x = ad(rng);
  std::vector<std::vector<long>> q(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long s = i == j ? 1 : 0;
      for (int k = 0; k < n; ++k) s += a[k][i] * a[k][j];
      q[i][j] = s;
    }
  std::vector<long> l(n);
  for (auto& x : l) x = ld(rng);
  long c = cd(rng);
  return IntTriple{q, l, c, QuadTriple::from_int_rows(q, l, c)};
}

QuadTriple random_positive(std::mt19937& rng, int n, int lmax, int cmin, int cmax) {
  return random_positive_int(rng, n, lmax, cmin, cmax).qt;
}

std::set<std::vector<int64_t>> to_set(const std::vector<std::vector<int64_t>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("eval examples") {
  auto q1 = QuadTriple::from_int_rows({{1}}, {0}, 0);
  CHECK(eval_qt(q1, std::vector<int64_t>{3}) == 9);
  auto q2 = QuadTriple::from_int_rows({{1, 0}, {0, 1}}, {1, 0}, -3);
  CHECK(eval_qt(q2, std::vector<int64_t>{0, 0}) == -3);
  auto q3 = QuadTriple::from_int_rows({{2, 1}, {1, 2}}, {0, -1}, 1);
  std::vector<int64_t> x{1, -1};
  CHECK(eval_qt(q3, x) == eval_direct({{2, 1}, {1, 2}}, {0, -1}, 1, x));
}

TEST_CASE("project examples") {
  auto d2 = QuadTriple::from_int_rows({{1, 0}, {0, 1}}, {0, 0}, -4);
  auto p = project_qt(d2);
  CHECK(p.n == 1);
  CHECK(p.qat(0, 0) == 1);
  CHECK(p.lin[0] == 0);
  CHECK(p.c == -4);

  auto q = QuadTriple::from_int_rows({{2, 1}, {1, 2}}, {0, 0}, -2);
  auto pq = project_qt(q);
  CHECK(pq.qat(0, 0) == Qi(3, 2));
  CHECK(qt_is_positive(pq));
}

TEST_CASE("projection of a positive triple stays positive; sublevel maps into sublevel") {
  std::mt19937 rng(41);
  for (int it = 0; it < 30; ++it) {
    auto qt = random_positive(rng, 3, 2, -6, 2);
    auto pr = project_qt(qt);
    CHECK(qt_is_positive(pr));
    std::uniform_int_distribution<int> xd(-3, 3);
    for (int s = 0; s < 10; ++s) {
      std::vector<int64_t> x{xd(rng), xd(rng), xd(rng)};
      std::vector<int64_t> px{x[0], x[1]};
      CHECK(eval_qt(pr, px) <= eval_qt(qt, x));
    }
  }
}

TEST_CASE("restrict examples and evaluation identity") {
  auto q = QuadTriple::from_int_rows({{1, 0}, {0, 1}}, {0, 0}, 0);
  auto r0 = restrict_qt(Qi(0), q);
  CHECK(r0.qat(0, 0) == 1);
  CHECK(r0.lin[0] == 0);
  CHECK(r0.c == 0);
  auto r1 = restrict_qt(Qi(1), q);
  CHECK(r1.c == 1);

  std::mt19937 rng(43);
  for (int it = 0; it < 25; ++it) {
    auto qt = random_positive(rng, 3, 2, -5, 3);
    auto r = restrict_qt(Qi(2), qt);
    std::uniform_int_distribution<int> xd(-3, 3);
    std::vector<int64_t> y{xd(rng), xd(rng)};
    std::vector<int64_t> full{2, y[0], y[1]};
    CHECK(eval_qt(r, y) == eval_qt(qt, full));
  }
}

TEST_CASE("full restriction chain equals eval") {
  std::mt19937 rng(47);
  for (int it = 0; it < 20; ++it) {
    auto qt = random_positive(rng, 4, 2, -4, 2);
    std::uniform_int_distribution<int> xd(-2, 2);
    std::vector<int64_t> x{xd(rng), xd(rng), xd(rng), xd(rng)};
    QuadTriple cur = qt;
    for (int i = 0; i < 3; ++i) cur = restrict_qt(Qi(static_cast<long>(x[i])), cur);
    // one variable left: value at x[3]
    Qi v = cur.qat(0, 0) * static_cast<long>(x[3] * x[3]) +
           2 * cur.lin[0] * static_cast<long>(x[3]) + cur.c;
    CHECK(v == eval_qt(qt, x));
  }
}

TEST_CASE("one-variable closed form") {
  // x^2 - 2x <= 0 on {0,1,2}
  auto r = qt_solve_one_var(Qi(1), Qi(-1), Qi(0));
  CHECK(r == std::vector<int64_t>{0, 1, 2});
  CHECK(qt_solve_one_var(Qi(1), Qi(0), Qi(1)).empty());
  // 2t^2 + 2*(1/2)t - 3 <= 0: roots (-1 +- 5)/4
  auto r2 = qt_solve_one_var(Qi(2), Qi(1, 2), Qi(-3));
  CHECK(r2 == std::vector<int64_t>{-1, 0, 1});
}

TEST_CASE("enumerate examples") {
  auto disc = QuadTriple::from_int_rows({{1, 0}, {0, 1}}, {0, 0}, -2);
  auto e = enumerate_collect(disc);
  CHECK(e.size() == 9);
  for (auto& x : e) CHECK(eval_qt(disc, x) <= 0);

  auto empty = QuadTriple::from_int_rows({{1, 0}, {0, 1}}, {0, 0}, 3);
  CHECK(enumerate_collect(empty).empty());

  auto one = QuadTriple::from_int_rows({{1}}, {-1}, 0);
  auto e1 = enumerate_collect(one);
  REQUIRE(e1.size() == 3);
  CHECK(e1[0] == std::vector<int64_t>{0});
  CHECK(e1[2] == std::vector<int64_t>{2});
}

TEST_CASE("enumerate equals box scan on 200 random positive triples") {
  std::mt19937 rng(53);
  int cases = 0;
  while (cases < 200) {
    int n = 2 + (cases % 3);  // ranks 2..4
    auto t = random_positive_int(rng, n, 1, -8, 1);
    auto got = enumerate_collect(t.qt);
    // independent bound: Q >= I termwise gives q(x) > 0 once any
    // |x_j| > B with B^2 - 2B > (n-1) + |c|; B = 8 is ample here.
    long B = 8;
    std::set<std::vector<int64_t>> want;
    std::vector<int64_t> x(n, -B);
    for (;;) {
      if (eval_direct(t.q, t.l, t.c, x) <= 0) want.insert(x);
      int i = 0;
      while (i < n && ++x[i] > B) x[i++] = -B;
      if (i == n) break;
    }
    CHECK(to_set(got) == want);
    ++cases;
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  std::mt19937 rng(59);
  for (int it = 0; it < 10; ++it) {
    auto qt = random_positive(rng, 4, 2, -20, -4);
    auto s = enumerate_collect_serial(qt);
    auto p = enumerate_collect(qt, true);
    CHECK(s == p);
    CHECK(enumerate_count(qt, true) == s.size());
  }
}
