#include "k3ns/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace k3ns {

Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem;
  Poly work = f;
  while (!work.is_zero()) {
    const auto& [lm, lc] = work.lead();
    bool hit = false;
    for (const auto& b : basis) {
      if (b.is_zero()) continue;
      const auto& [bm, bc] = b.lead();
      if (mono_divides(bm, lm)) {
        work -= b.mul_term(mono_div(lm, bm), lc / bc);
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem += Poly::term(lm, lc);
      work -= Poly::term(lm, lc);
    }
  }
  return rem;
}

namespace {

Poly s_poly(const Poly& f, const Poly& g) {
  const auto& [fm, fc] = f.lead();
  const auto& [gm, gc] = g.lead();
  Mono l = mono_lcm(fm, gm);
  return f.mul_term(mono_div(l, fm), fc.inv()) - g.mul_term(mono_div(l, gm), gc.inv());
}

bool lead_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < 3; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

IdealGB buchberger(std::vector<Poly> gens) {
  std::vector<Poly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.push_back({i, j});
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (lead_coprime(g[i].lead().first, g[j].lead().first)) continue;
    Poly s = reduce(s_poly(g[i], g[j]), g);
    if (s.is_zero()) continue;
    for (size_t k = 0; k < g.size(); ++k) pairs.push_back({k, g.size()});
    g.push_back(s);
  }
  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lead().first, g[i].lead().first)) {
        // Tie on equal leads: keep the later one only once.
        if (g[j].lead().first == g[i].lead().first)
          redundant = j > i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Inter-reduce tails and make monic.
  std::vector<Poly> reduced(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce(minimal[i], others);
    assert(!r.is_zero());
    reduced[i] = r.scaled(r.lead().second.inv());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return mono_cmp(a.lead().first, b.lead().first) > 0;
  });
  return IdealGB{std::move(reduced)};
}

IdealGB ideal_power_plus_F(const std::vector<Poly>& gens, int nu) {
  assert(nu >= 1);
  // All degree-nu products of the generators.
  std::vector<Poly> prods;
  std::vector<size_t> idx(nu, 0);
  for (;;) {
    Poly p = Poly::constant(Gf::from_int(1));
    for (int k = 0; k < nu; ++k) p *= gens[idx[k]];
    prods.push_back(p);
    // next non-decreasing index tuple
    int k = nu - 1;
    while (k >= 0 && idx[k] + 1 >= gens.size()) --k;
    if (k < 0) break;
    size_t v = idx[k] + 1;
    for (int t = k; t < nu; ++t) idx[t] = v;
  }
  prods.push_back(surface_relation());
  return buchberger(std::move(prods));
}

std::optional<long> quotient_dimension(const IdealGB& gb) {
  std::vector<Mono> leads;
  for (auto& p : gb.basis) leads.push_back(p.lead().first);
  for (auto& m : leads)
    if (mono_deg(m) == 0) return 0;  // unit ideal
  // Finite iff a pure power of every variable appears among the leads.
  int bound[3];
  for (int v = 0; v < 3; ++v) {
    int best = -1;
    for (auto& m : leads) {
      bool pure = m[v] > 0;
      for (int u = 0; u < 3 && pure; ++u)
        if (u != v && m[u] > 0) pure = false;
      if (pure) best = best < 0 ? m[v] : std::min(best, static_cast<int>(m[v]));
    }
    if (best < 0) return std::nullopt;
    bound[v] = best;
  }
  long count = 0;
  for (int e0 = 0; e0 < bound[0]; ++e0)
    for (int e1 = 0; e1 < bound[1]; ++e1)
      for (int e2 = 0; e2 < bound[2]; ++e2) {
        Mono m{static_cast<uint16_t>(e0), static_cast<uint16_t>(e1),
               static_cast<uint16_t>(e2)};
        bool divisible = false;
        for (auto& l : leads)
          if (mono_divides(l, m)) {
            divisible = true;
            break;
          }
        if (!divisible) ++count;
      }
  return count;
}

bool in_ideal(const Poly& f, const IdealGB& gb) { return reduce(f, gb.basis).is_zero(); }

}  // namespace k3ns
