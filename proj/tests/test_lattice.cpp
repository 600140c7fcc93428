#include <set>

#include "doctest.h"
#include "k3ns/lattice.hpp"

using namespace k3ns;

namespace {
IntLattice make_lat(std::vector<std::vector<long>> rows) {
  IntLattice lat;
  lat.n = static_cast<int>(rows.size());
  for (auto& r : rows)
    for (auto x : r) lat.gram.push_back(x);
  return lat;
}
std::set<IVec> to_set(const std::vector<IVec>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("empty slice: odd pairing in an even lattice") {
  auto lat = make_lat({{2, 0}, {0, -2}});
  auto res = solve_fixed_norm(lat, {{{1, 0}, 1}}, 0);
  CHECK(res.status == SliceStatus::kEmpty);
}

TEST_CASE("rank-2 hyperbolic fixed norm vs box scan") {
  auto lat = make_lat({{2, 0}, {0, -2}});
  auto res = solve_fixed_norm(lat, {{{1, 0}, 2}}, 2);
  REQUIRE(res.status == SliceStatus::kOk);
  std::set<IVec> want;
  for (int64_t a = -5; a <= 5; ++a)
    for (int64_t b = -5; b <= 5; ++b) {
      IVec x{a, b};
      if (lat.pair(x, {1, 0}) == 2 && lat.norm(x) == 2) want.insert(x);
    }
  CHECK(want.count({1, 0}) == 1);
  CHECK(to_set(res.vectors) == want);
}

TEST_CASE("fixed norm output satisfies constraints exactly") {
  auto lat = make_lat({{2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
  std::vector<LinearConstraint> cons{{{1, 0, 0}, 3}};
  auto res = solve_fixed_norm(lat, cons, -2);
  REQUIRE(res.status == SliceStatus::kOk);
  CHECK(!res.vectors.empty());
  for (auto& x : res.vectors) {
    CHECK(lat.pair(x, cons[0].v) == 3);
    CHECK(lat.norm(x) == -2);
  }
  // box-scan cross check
  std::set<IVec> want;
  for (int64_t a = -8; a <= 8; ++a)
    for (int64_t b = -8; b <= 8; ++b)
      for (int64_t c = -8; c <= 8; ++c) {
        IVec x{a, b, c};
        if (lat.pair(x, cons[0].v) == 3 && lat.norm(x) == -2) want.insert(x);
      }
  CHECK(to_set(res.vectors) == want);
}

TEST_CASE("count and stream modes agree with collect") {
  auto lat = make_lat({{2, 0}, {0, -2}});
  auto res = solve_fixed_norm(lat, {{{1, 0}, 4}}, 2);
  auto cnt = solve_fixed_norm_count(lat, {{{1, 0}, 4}}, 2, false);
  REQUIRE(cnt.has_value());
  CHECK(*cnt == res.vectors.size());
}

TEST_CASE("separating roots vs brute force on diag(2,-2,-2)") {
  auto lat = make_lat({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}});
  IVec h{1, 0, 0};
  for (IVec v : {IVec{2, 1, 0}, IVec{3, 2, 2}, IVec{5, 4, 1}}) {
    auto s = separating_roots(lat, h, v, -2);
    std::set<IVec> want;
    // The box is exhaustive: a^2 = b^2 + c^2 - 1 and <r,v> < 0 force
    // a below (2/3)(b+c)-type bounds, all well inside |.| <= 8.
    for (int64_t a = -8; a <= 8; ++a)
      for (int64_t b = -8; b <= 8; ++b)
        for (int64_t c = -8; c <= 8; ++c) {
          IVec r{a, b, c};
          if (lat.norm(r) == -2 && lat.pair(r, h) > 0 && lat.pair(r, v) < 0) want.insert(r);
        }
    CHECK(to_set(s) == want);
  }
  // (1,1,1) separates h from (3,2,2)
  auto s = separating_roots(lat, h, {3, 2, 2}, -2);
  CHECK(to_set(s) == std::set<IVec>{{1, 1, 1}});
}

TEST_CASE("separating roots scale invariance in v and emptiness for v = h") {
  auto lat = make_lat({{2, 0, 0}, {0, -2, 0}, {0, 0, -2}});
  IVec h{1, 0, 0}, v{3, 2, 2}, v3{9, 6, 6};
  CHECK(separating_roots(lat, h, v, -2) == separating_roots(lat, h, v3, -2));
  CHECK(separating_roots(lat, h, h, -2).empty());
}
