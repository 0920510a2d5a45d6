#ifndef PERIODS_SPECIAL_WEIERSTRASS_HPP
#define PERIODS_SPECIAL_WEIERSTRASS_HPP

#include "periods/derham/elliptic.hpp"
#include "periods/numkernel/complex.hpp"

#include <array>
#include <utility>

namespace periods::special {

// Lambda = Z omega1 + Z omega2 with Im(omega2/omega1) > 0.
struct Lattice {
    ApproxComplex omega1;
    ApproxComplex omega2;
    ApproxComplex tau;

    // DomainError unless Im(omega2/omega1) > 0.
    static Lattice from_periods(const ApproxComplex& omega1, const ApproxComplex& omega2);
};

// Quasi-periods follow eta(lambda) = zeta(z) - zeta(z + lambda), so that
// omega1 eta2 - omega2 eta1 = 2 pi i and G2(tau) = -omega1 eta1.
struct EllipticPeriodData {
    Lattice lattice;
    ApproxComplex eta1;
    ApproxComplex eta2;
    std::array<ApproxComplex, 3> roots; // e1 > e2 > e3
    ApproxComplex g2;
    ApproxComplex g3;
};

// Real curve with three real roots: omega1 = pi/agm(sqrt(e1-e3), sqrt(e1-e2))
// real, omega2 = i pi/agm(sqrt(e1-e3), sqrt(e2-e3)). The quasi-periods are
// filled in by quasi_periods. Negative discriminant: UnsupportedDomainError.
EllipticPeriodData elliptic_periods(const derham::EllipticCurveQ& E, int prec);

// (omega1, omega2) from 2 int_{e1}^inf dx/y and 2 int_{e2}^{e1} dx/y, for
// cross-checking the AGM route.
std::pair<ApproxComplex, ApproxComplex> elliptic_periods_by_quadrature(const derham::EllipticCurveQ& E, int prec);

// eta1 = -G2(tau)/omega1 from the q-expansion, eta2 = -2 zeta_W(omega2/2)
// from the zeta q-series seeded with eta1.
std::pair<ApproxComplex, ApproxComplex> quasi_periods(const Lattice& L, int prec);

// Weierstrass functions of the lattice. z is reduced into the fundamental
// parallelogram first; lattice points raise PoleError. wzeta needs eta1 and
// eta2 of `data` for the reduction.
ApproxComplex wp(const ApproxComplex& z, const EllipticPeriodData& data, int prec);
ApproxComplex wp_prime(const ApproxComplex& z, const EllipticPeriodData& data, int prec);
ApproxComplex wzeta(const ApproxComplex& z, const EllipticPeriodData& data, int prec);

// Lattice sums G_k(tau) = sum' (m + n tau)^-k for k in {2, 4, 6} (G2 summed
// over m first), from the q-expansions G_k = 2 zeta(k) E_k:
//   E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
//   E6 = 1 - 504 sum sigma_5(n) q^n.
// Im tau < 0.05 raises ConditioningError.
inline constexpr double kMinImTau = 0.05;
ApproxComplex eisenstein(int k, const ApproxComplex& tau, int prec);

} // namespace periods::special

#endif
