#include "k3ns/gf25.hpp"

#include <cstdio>
#include <cstdlib>

namespace k3ns {

namespace {

struct Tables {
  std::array<uint8_t, 25> inv;
  std::array<uint8_t, 25> sqrt;  // 0xFF = non-square
  Tables() {
    inv.fill(0xFF);
    sqrt.fill(0xFF);
    for (int i = 0; i < 25; ++i) {
      Gf x(static_cast<uint8_t>(i));
      for (int j = 0; j < 25; ++j) {
        Gf y(static_cast<uint8_t>(j));
        if ((x * y) == Gf::from_int(1)) inv[i] = y.enc();
        Gf sq = y * y;
        if (sq == x && sqrt[i] == 0xFF) sqrt[i] = y.enc();
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

Gf Gf::inv() const {
  if (is_zero()) {
    std::fprintf(stderr, "k3ns: inverse of 0 in GF(25)\n");
    std::abort();
  }
  return Gf(tables().inv[v_]);
}

Gf Gf::pow(long e) const {
  if (is_zero()) return e == 0 ? from_int(1) : Gf();
  long m = ((e % 24) + 24) % 24;
  Gf r = from_int(1), base = *this;
  while (m) {
    if (m & 1) r *= base;
    base *= base;
    m >>= 1;
  }
  return r;
}

bool Gf::is_square() const { return tables().sqrt[v_] != 0xFF; }

std::optional<Gf> Gf::sqrt() const {
  uint8_t r = tables().sqrt[v_];
  if (r == 0xFF) return std::nullopt;
  return Gf(r);
}

std::string Gf::str() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%d+%d*r2", a(), b());
  return buf;
}

std::array<Gf, 25> gf_all() {
  std::array<Gf, 25> r;
  for (int i = 0; i < 25; ++i) r[i] = Gf(static_cast<uint8_t>(i));
  return r;
}

std::array<Gf, 24> gf_units() {
  std::array<Gf, 24> r;
  int k = 0;
  for (int i = 1; i < 25; ++i) r[k++] = Gf(static_cast<uint8_t>(i));
  return r;
}

std::array<Gf, 6> gf_mu6() {
  std::array<Gf, 6> r{};
  int k = 0;
  for (int i = 1; i < 25; ++i) {
    Gf x(static_cast<uint8_t>(i));
    if (x.pow(6) == Gf::from_int(1)) r[k++] = x;
  }
  return r;
}

std::array<Gf, 12> gf_squares() {
  std::array<Gf, 12> r{};
  int k = 0;
  for (int i = 1; i < 25; ++i) {
    Gf x(static_cast<uint8_t>(i));
    if (x.is_square()) r[k++] = x;
  }
  return r;
}

std::optional<Gf> gf_parse(const std::string& s) {
  // Accepts: "a", "a+b*r2", "a-b*r2", "b*r2", "-b*r2", "r2", "a+r2".
  int a = 0, b = 0;
  size_t i = 0;
  auto read_int = [&](int& out) -> bool {
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) return false;
    int v = 0;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
    out = sign * v;
    return true;
  };
  auto at_r2 = [&]() { return s.compare(i, 2, "r2") == 0; };

  if (at_r2()) {  // "r2"
    i += 2;
    b = 1;
  } else {
    int first = 0;
    if (!read_int(first)) return std::nullopt;
    if (i < s.size() && s[i] == '*') {
      ++i;
      if (!at_r2()) return std::nullopt;
      i += 2;
      b = first;
    } else {
      a = first;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        int sign = s[i] == '-' ? -1 : 1;
        ++i;
        if (at_r2()) {
          i += 2;
          b = sign;
        } else {
          int second = 0;
          if (!read_int(second)) return std::nullopt;
          second *= sign;
          if (i < s.size() && s[i] == '*') {
            ++i;
            if (!at_r2()) return std::nullopt;
            i += 2;
            b = second;
          } else {
            return std::nullopt;
          }
        }
      }
    }
  }
  if (i != s.size()) return std::nullopt;
  return Gf::make(a, b);
}

}  // namespace k3ns
