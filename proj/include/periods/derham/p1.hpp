#ifndef PERIODS_DERHAM_P1_HPP
#define PERIODS_DERHAM_P1_HPP

#include "periods/numkernel/ratpoly.hpp"

#include <string>
#include <vector>

namespace periods::derham {

// Cech-de Rham complex of P^1 for the cover {t != inf, s != inf}, st = 1,
// truncated to polynomial degree Nmax:
//   a(f, g) = (-f' dt, -g' ds, f(t) - g(1/t))
//   b(P dt, Q ds, h) = (P(t) + Q(1/t) t^-2 + h'(t)) dt
struct P1Cohomology {
    int h0 = 0;
    int h1 = 0;
    bool h2_has_dt_over_t = false;
    int rank_a = 0;
    int rank_b = 0;
};

// Exact ranks over Q; Nmax >= 4.
P1Cohomology verify_p1_truncated(int Nmax);

// H^0 of Spec Q[x]/(f) for irreducible f: basis 1, x, ..., x^(d-1), and
// Omega^1 = 0 because f' is a unit mod f (dx = u f' dx = 0).
struct NumberFieldH0 {
    int dim = 0;
    std::vector<std::string> basis;
    bool omega1_zero = false;
    RatPoly unit_witness; // u with u f' = 1 mod f
    bool irreducibility_checked = false;
};

// Degree <= 8 is checked exactly (reducible input is a DomainError); higher
// degrees need trust_irreducible and are then reported unchecked.
NumberFieldH0 numberfield_h0_basis(const RatPoly& f, bool trust_irreducible = false);

} // namespace periods::derham

#endif
