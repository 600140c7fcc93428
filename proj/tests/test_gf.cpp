#include "doctest.h"
#include "k3ns/gf25.hpp"
#include "k3ns/gf625.hpp"

using namespace k3ns;

TEST_CASE("field axioms, exhaustive") {
  auto all = gf_all();
  for (Gf x : all)
    for (Gf y : all) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (Gf z : all) CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("norm form: (1+r2)(1-r2) = -1 = 4") {
  Gf a = Gf::make(1, 1), b = Gf::make(1, -1);
  CHECK(a * b == Gf::from_int(4));
}

TEST_CASE("frobenius is conjugation") {
  CHECK(Gf::make(1, 1).frob() == Gf::make(1, 4));
  for (Gf x : gf_all()) {
    CHECK(x.frob().frob() == x);
    CHECK(x.pow(5) == x.frob());
  }
}

TEST_CASE("multiplicative order divides 24") {
  for (Gf x : gf_units()) CHECK(x.pow(24) == Gf::from_int(1));
}

TEST_CASE("inverse") {
  for (Gf x : gf_units()) CHECK(x * x.inv() == Gf::from_int(1));
}

TEST_CASE("sqrt returns the smallest root and flags non-squares") {
  int squares = 0;
  for (Gf x : gf_all()) {
    auto r = x.sqrt();
    if (!r) continue;
    ++squares;
    CHECK((*r) * (*r) == x);
    // minimality over the other root
    Gf other = -*r;
    if (other != *r) CHECK(r->enc() < other.enc());
  }
  CHECK(squares == 13);  // 0 and the 12 nonzero squares
  CHECK(gf_squares().size() == 12);
  CHECK(!Gf::r2().is_square());  // r2 generates; non-square
}

TEST_CASE("mu6 subgroup") {
  auto m = gf_mu6();
  for (Gf x : m) CHECK(x.pow(6) == Gf::from_int(1));
}

TEST_CASE("scalar parse/print round trip") {
  for (Gf x : gf_all()) {
    auto p = gf_parse(x.str());
    REQUIRE(p.has_value());
    CHECK(*p == x);
  }
  CHECK(gf_parse("1+3*r2") == Gf::make(1, 3));
  CHECK(gf_parse("r2") == Gf::r2());
  CHECK(gf_parse("2*r2") == Gf::make(0, 2));
  CHECK(gf_parse("4") == Gf::from_int(4));
  CHECK(!gf_parse("x").has_value());
}

TEST_CASE("GF(625) basics") {
  Gf4 u(Gf(), Gf::from_int(1));
  CHECK(u * u == Gf4::from25(Gf::r2()));
  // multiplicative order divides 624
  Gf4 g(Gf::from_int(1), Gf::from_int(1));
  CHECK(g.pow(624) == Gf4::from25(Gf::from_int(1)));
  CHECK(g * g.inv() == Gf4::from25(Gf::from_int(1)));
  // frob25 fixes exactly GF(25)
  CHECK(Gf4::from25(Gf::make(2, 3)).frob25() == Gf4::from25(Gf::make(2, 3)));
  CHECK(u.frob25() == -u);
}
