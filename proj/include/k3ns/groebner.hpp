#ifndef K3NS_GROEBNER_HPP
#define K3NS_GROEBNER_HPP

// Buchberger in grevlex(var0, var1, var2).  The ideals handled here are
// tiny (line ideals, their powers, plus the surface relation), so no F4/F5
// machinery; a plain pair queue with the coprime-criterion is enough.

#include <optional>
#include <vector>

#include "k3ns/poly.hpp"

namespace k3ns {

struct IdealGB {
  std::vector<Poly> basis;  // reduced, monic, sorted by leading term descending
};

// Remainder of f modulo the (not necessarily Groebner) list; full normal
// form, every term reduced.
Poly reduce(const Poly& f, const std::vector<Poly>& basis);

IdealGB buchberger(std::vector<Poly> gens);

// Groebner basis of I^nu + (F), F the affine surface relation.
IdealGB ideal_power_plus_F(const std::vector<Poly>& gens, int nu);

// Dimension over GF(25) of the quotient ring (= count of standard
// monomials); nullopt when the staircase is unbounded.
std::optional<long> quotient_dimension(const IdealGB& gb);

bool in_ideal(const Poly& f, const IdealGB& gb);

}  // namespace k3ns

#endif
