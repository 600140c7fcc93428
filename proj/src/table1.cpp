#include <cassert>
#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "k3ns/fermat.hpp"

namespace k3ns {

namespace {

// Mini-parser for the tabulated generators: terms joined by '+', factors
// joined by '*'; factors are digits, "s2" (the square root of 2), or one
// of w,x,y,z with an optional ^k.
struct TableTerm {
  Gf coeff;
  int ew = 0, ex = 0, ey = 0, ez = 0;
};

std::vector<TableTerm> parse_terms(const std::string& s) {
  std::vector<TableTerm> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find('+', pos);
    std::string t = s.substr(pos, end == std::string::npos ? end : end - pos);
    pos = end == std::string::npos ? s.size() : end + 1;
    TableTerm term;
    term.coeff = Gf::from_int(1);
    size_t i = 0;
    while (i < t.size()) {
      if (isdigit(static_cast<unsigned char>(t[i]))) {
        int v = 0;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) v = v * 10 + (t[i++] - '0');
        term.coeff *= Gf::from_int(v);
      } else if (t.compare(i, 2, "s2") == 0) {
        term.coeff *= Gf::r2();
        i += 2;
      } else if (t[i] == 'w' || t[i] == 'x' || t[i] == 'y' || t[i] == 'z') {
        char v = t[i++];
        int e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          e = 0;
          while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) e = e * 10 + (t[i++] - '0');
        }
        switch (v) {
          case 'w': term.ew += e; break;
          case 'x': term.ex += e; break;
          case 'y': term.ey += e; break;
          case 'z': term.ez += e; break;
        }
      } else if (t[i] == '*') {
        ++i;
      } else {
        std::fprintf(stderr, "table1: bad factor in '%s'\n", t.c_str());
        std::abort();
      }
    }
    out.push_back(term);
  }
  return out;
}

// splits a generator into its w-part (alpha * w) and xyz cubic part
void parse_generator(const std::string& s, Gf& alpha, Poly& cubic) {
  alpha = Gf();
  std::vector<Poly::Term> ts;
  for (auto& t : parse_terms(s)) {
    if (t.ew > 0) {
      assert(t.ew == 1 && t.ex == 0 && t.ey == 0 && t.ez == 0);
      alpha += t.coeff;
    } else {
      ts.push_back({Mono{static_cast<uint16_t>(t.ex), static_cast<uint16_t>(t.ey),
                         static_cast<uint16_t>(t.ez)},
                    t.coeff});
    }
  }
  cubic = Poly::from_terms(std::move(ts));
}

Gf3 parse_lform(const std::string& s) {
  Gf3 l{};
  for (auto& t : parse_terms(s)) {
    assert(t.ew == 0 && t.ex + t.ey + t.ez == 1);
    if (t.ex) l[0] += t.coeff;
    if (t.ey) l[1] += t.coeff;
    if (t.ez) l[2] += t.coeff;
  }
  return l;
}

Gf parse_coord(const std::string& s) {
  Gf v;
  for (auto& t : parse_terms(s)) {
    assert(t.ew + t.ex + t.ey + t.ez == 0);
    v += t.coeff;
  }
  return v;
}

Gf3 parse_point(const std::string& s) {
  // "[a:b:c]" with table coordinate syntax
  assert(s.front() == '[' && s.back() == ']');
  Gf3 p{};
  size_t pos = 1;
  for (int k = 0; k < 3; ++k) {
    size_t end = k < 2 ? s.find(':', pos) : s.size() - 1;
    p[k] = parse_coord(s.substr(pos, end - pos));
    pos = end + 1;
  }
  return p;
}

struct RawRow {
  const char* point;
  int sign;
  const char* gen1;
  const char* gen2;
};

const RawRow kRows[22] = {
    {"[0:1:1+s2]", +1, "y+4*z*s2+z", "x^3+4*w"},
    {"[0:1:1+s2]", -1, "y+4*z*s2+z", "w+x^3"},
    {"[0:1:1+4*s2]", +1, "x^3+4*w", "y+z*s2+z"},
    {"[0:1:2]", +1, "x^3+4*w", "y+2*z"},
    {"[0:1:3]", +1, "x^3+4*w", "y+3*z"},
    {"[0:1:4+s2]", +1, "x^3+4*w", "y+4*z+4*z*s2"},
    {"[1:0:1+s2]", +1, "x+4*z*s2+z", "y^3+4*w"},
    {"[1:0:1+4*s2]", +1, "y^3+4*w", "x+z*s2+z"},
    {"[1:0:2]", +1, "x+2*z", "w+y^3"},
    {"[1:0:4+s2]", +1, "w+y^3", "x+4*z+4*z*s2"},
    {"[1:s2:1]", +1, "x+4*s2*y+z", "y^3+2*z*s2*y^2+3*w+z^2*y+3*z^3*s2"},
    {"[1:s2:2+2*s2]", -1, "x+4*s2*y+3*z*s2+2*z",
     "3*z^3*s2+2*z^2*y+2*z^2*s2*y+3*w+y^3+2*z*y^2+4*z*s2*y^2"},
    {"[1:s2:2+3*s2]", -1, "3*z^3*s2+2*z^2*y+3*z^2*s2*y+3*w+y^3+3*z*y^2+4*z*s2*y^2",
     "x+4*s2*y+2*z*s2+2*z"},
    {"[1:s2:3+2*s2]", +1, "x+4*s2*y+3*z+3*z*s2",
     "2*z^3*s2+2*z^2*y+3*z^2*s2*y+2*w+y^3+2*z*y^2+z*s2*y^2"},
    {"[1:s2:3+3*s2]", -1, "x+4*s2*y+2*z*s2+3*z",
     "2*z^3*s2+2*z^2*y+2*z^2*s2*y+2*w+y^3+3*z*y^2+z*s2*y^2"},
    {"[1:2*s2:2*s2]", +1, "y^3+4*z^3+2*z*y^2+4*s2*w+3*z^2*y", "x+3*s2*y+3*z*s2"},
    {"[1:2*s2:3*s2]", +1, "x+3*s2*y+2*z*s2", "y^3+z^3+3*z*y^2+s2*w+3*z^2*y"},
    {"[1:2*s2:2+s2]", -1, "x+3*s2*y+2*z+4*z*s2",
     "z^3+z^2*y+z^2*s2*y+s2*w+y^3+z*y^2+4*z*s2*y^2"},
    {"[1:2*s2:2+4*s2]", +1, "x+3*s2*y+2*z+z*s2",
     "4*z^3+z^2*y+4*z^2*s2*y+4*s2*w+y^3+4*z*y^2+4*z*s2*y^2"},
    {"[1:2*s2:3+s2]", +1, "x+3*s2*y+3*z+4*z*s2",
     "z^3+z^2*y+4*z^2*s2*y+s2*w+y^3+z*y^2+z*s2*y^2"},
    {"[1:1+s2:0]", +1, "x+y+4*s2*y", "w+z^3"},
    {"[1:1+3*s2:1]", +1, "x+y+2*s2*y+z",
     "2*z^3*s2+2*z^2*y+3*z^2*s2*y+3*w+y^3+2*z*y^2+z*s2*y^2"},
};

Gf3 normalize_lform_static(Gf3 l) {
  for (int i = 0; i < 3; ++i) {
    if (!l[i].is_zero()) {
      Gf inv = l[i].inv();
      for (int j = 0; j < 3; ++j) l[j] *= inv;
      return l;
    }
  }
  std::abort();
}

Poly reduce_mod_linear_static(const Poly& g, const Gf3& l) {
  int lead = 0;
  while (l[lead].is_zero()) ++lead;
  // substitute x_lead = -(trailing part)
  std::array<Poly, 3> sub{Poly::variable(0), Poly::variable(1), Poly::variable(2)};
  Poly repl;
  for (int j = lead + 1; j < 3; ++j) repl -= Poly::variable(j).scaled(l[j]);
  sub[lead] = repl;
  return g.subst(sub[0], sub[1], sub[2]);
}

}  // namespace

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    for (const auto& raw : kRows) {
      Table1Row row;
      row.point = normalize_point(parse_point(raw.point));
      row.sign = raw.sign;
      Gf a1, a2;
      Poly c1, c2;
      parse_generator(raw.gen1, a1, c1);
      parse_generator(raw.gen2, a2, c2);
      // one generator is the linear form, the other carries w
      std::string lin = a1.is_zero() ? raw.gen1 : raw.gen2;
      Gf alpha = a1.is_zero() ? a2 : a1;
      const Poly& cubic = a1.is_zero() ? c2 : c1;
      assert(!alpha.is_zero());
      row.lform = normalize_lform_static(parse_lform(lin));
      // alpha*w + cubic = 0  =>  w = -(alpha^-1) * cubic
      Poly g = cubic.scaled(-alpha.inv());
      row.cubic = reduce_mod_linear_static(g, row.lform);
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

}  // namespace k3ns
