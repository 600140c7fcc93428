#include "k3ns/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace k3ns {

int mono_cmp(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = 2; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller last exponent wins
  }
  return 0;
}

namespace {
struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};
}  // namespace

Poly Poly::constant(Gf c) { return term({0, 0, 0}, c); }

Poly Poly::term(const Mono& m, Gf c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(int i, int e) {
  Mono m{0, 0, 0};
  m[i] = static_cast<uint16_t>(e);
  return term(m, Gf::from_int(1));
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return mono_cmp(a.first, b.first) > 0; });
  Poly p;
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return mono_deg(terms_.front().first);  // grevlex leader has max degree
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
  return d;
}

Gf Poly::coeff(const Mono& m) const {
  for (auto& t : terms_)
    if (t.first == m) return t.second;
  return Gf();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Gf s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(Gf c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::mul_term(const Mono& m, Gf c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.first = mono_mul(t.first, m);
    t.second *= c;
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& s : terms_)
    for (auto& t : o.terms_) acc.push_back({mono_mul(s.first, t.first), s.second * t.second});
  return from_terms(std::move(acc));
}

Gf Poly::eval(Gf v0, Gf v1, Gf v2) const {
  Gf r;
  for (auto& t : terms_) {
    Gf m = t.second;
    m *= v0.pow(t.first[0]);
    m *= v1.pow(t.first[1]);
    m *= v2.pow(t.first[2]);
    r += m;
  }
  return r;
}

Poly Poly::subst(const Poly& p0, const Poly& p1, const Poly& p2) const {
  // Per-call power memo; exponents here stay small (<= 30).
  std::array<const Poly*, 3> ps{&p0, &p1, &p2};
  std::array<std::vector<Poly>, 3> pows;
  for (int i = 0; i < 3; ++i) pows[i].push_back(Poly::constant(Gf::from_int(1)));
  auto power = [&](int var, int e) -> const Poly& {
    auto& v = pows[var];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * (*ps[var]));
    return v[e];
  };
  Poly r;
  for (auto& t : terms_) {
    Poly m = Poly::constant(t.second);
    for (int var = 0; var < 3; ++var)
      if (t.first[var]) m *= power(var, t.first[var]);
    r += m;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  std::vector<Term> acc;
  for (auto& t : terms_) {
    int e = t.first[var];
    if (e == 0) continue;
    Gf c = t.second * Gf::from_int(e);
    if (c.is_zero()) continue;
    Mono m = t.first;
    m[var] = static_cast<uint16_t>(e - 1);
    acc.push_back({m, c});
  }
  return from_terms(std::move(acc));
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = t.second.frob();
  return r;
}

std::string Poly::str(const std::array<std::string, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.second.str() << ")";
    for (int v = 0; v < 3; ++v) {
      if (t.first[v] == 0) continue;
      os << "*" << names[v];
      if (t.first[v] > 1) os << "^" << t.first[v];
    }
  }
  return os.str();
}

std::optional<Poly> Poly::parse(const std::string& s, const std::array<std::string, 3>& names) {
  if (s == "0") return Poly();
  std::vector<Term> acc;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(" + ", pos);
    std::string termstr = s.substr(pos, end == std::string::npos ? end : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;

    size_t i = 0;
    Gf coeff = Gf::from_int(1);
    bool have_coeff = false;
    if (i < termstr.size() && termstr[i] == '(') {
      size_t close = termstr.find(')', i);
      if (close == std::string::npos) return std::nullopt;
      auto c = gf_parse(termstr.substr(i + 1, close - i - 1));
      if (!c) return std::nullopt;
      coeff = *c;
      have_coeff = true;
      i = close + 1;
      if (i < termstr.size() && termstr[i] == '*') ++i;
    }
    Mono m{0, 0, 0};
    bool have_var = false;
    while (i < termstr.size()) {
      int var = -1;
      for (int v = 0; v < 3; ++v) {
        if (termstr.compare(i, names[v].size(), names[v]) == 0) {
          var = v;
          break;
        }
      }
      if (var < 0) break;
      i += names[var].size();
      int e = 1;
      if (i < termstr.size() && termstr[i] == '^') {
        ++i;
        e = 0;
        if (i >= termstr.size() || !isdigit(static_cast<unsigned char>(termstr[i])))
          return std::nullopt;
        while (i < termstr.size() && isdigit(static_cast<unsigned char>(termstr[i])))
          e = e * 10 + (termstr[i++] - '0');
      }
      m[var] = static_cast<uint16_t>(m[var] + e);
      have_var = true;
      if (i < termstr.size() && termstr[i] == '*') ++i;
    }
    if (!have_coeff && !have_var) {
      // bare scalar like "3" or "2*r2"
      auto c = gf_parse(termstr);
      if (!c) return std::nullopt;
      coeff = *c;
      i = termstr.size();
    }
    if (i != termstr.size()) return std::nullopt;
    acc.push_back({m, coeff});
  }
  return from_terms(std::move(acc));
}

Poly surface_relation() {
  Poly f = Poly::variable(0, 2);               // w^2
  f -= Poly::variable(1, 6);                   // x^6
  f -= Poly::variable(2, 6);                   // y^6
  f -= Poly::constant(Gf::from_int(1));        // 1
  return f;
}

Poly normal_form_F(const Poly& g) {
  int dw = g.degree_in(0);
  if (dw <= 1) return g;
  // Split as sum_k w^k c_k(x,y), fold with w^2 = x^6 + y^6 + 1.
  std::vector<Poly> cs(dw + 1);
  for (auto& t : g.terms()) {
    Mono m = t.first;
    int k = m[0];
    m[0] = 0;
    cs[k] += Poly::term(m, t.second);
  }
  Poly base = Poly::variable(1, 6) + Poly::variable(2, 6) + Poly::constant(Gf::from_int(1));
  std::vector<Poly> bpow{Poly::constant(Gf::from_int(1))};
  while (static_cast<int>(bpow.size()) <= dw / 2) bpow.push_back(bpow.back() * base);
  Poly w = Poly::variable(0);
  Poly r;
  for (int k = 0; k <= dw; ++k) {
    if (cs[k].is_zero()) continue;
    Poly piece = cs[k] * bpow[k / 2];
    if (k & 1) piece *= w;
    r += piece;
  }
  return r;
}

std::vector<Mono> vm_basis(int m) {
  std::vector<Mono> out;
  // w-free monomials N with deg <= m, then w*M with deg M <= m-3;
  // each block in descending grevlex.
  std::vector<Mono> block;
  for (int d = m; d >= 0; --d)
    for (int ex = d; ex >= 0; --ex) block.push_back({0, static_cast<uint16_t>(ex),
                                                     static_cast<uint16_t>(d - ex)});
  std::sort(block.begin(), block.end(), MonoGreater{});
  out = block;
  if (m >= 3) {
    block.clear();
    for (int d = m - 3; d >= 0; --d)
      for (int ex = d; ex >= 0; --ex)
        block.push_back({1, static_cast<uint16_t>(ex), static_cast<uint16_t>(d - ex)});
    std::sort(block.begin(), block.end(), MonoGreater{});
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

const std::vector<Mono>& sextic_monomials() {
  static const std::vector<Mono> ms = [] {
    std::vector<Mono> v;
    for (int a = 6; a >= 0; --a)
      for (int b = 6 - a; b >= 0; --b)
        v.push_back({static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                     static_cast<uint16_t>(6 - a - b)});
    std::sort(v.begin(), v.end(), MonoGreater{});
    return v;
  }();
  return ms;
}

}  // namespace k3ns
