#ifndef PERIODS_SPECIAL_GAMMA_HPP
#define PERIODS_SPECIAL_GAMMA_HPP

#include "periods/numkernel/complex.hpp"

#include <vector>

namespace periods::special {

// Gamma(s) from the defining integral on 1 <= Re s < 2, moved elsewhere with
// Gamma(s+1) = s Gamma(s). Non-positive integers raise PoleError.
ApproxComplex gamma_fn(const ApproxComplex& s, int prec);

enum class BetaMethod { gamma, quadrature };

// B(a, b) for Re a, Re b > 0.
ApproxComplex beta_fn(const ApproxComplex& a, const ApproxComplex& b, int prec,
                      BetaMethod method = BetaMethod::gamma);

// Bernoulli numbers B_0 .. B_n (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int n);

// zeta(n), n >= 2, by Euler-Maclaurin.
ApproxComplex zeta_fn(long n, int prec);

// Multiple zeta value zeta(n1, ..., nl) = sum over k1 > ... > kl >= 1,
// depth <= 3, n1 >= 2, prec <= 25.
inline constexpr int kMzvMaxPrec = 25;
ApproxComplex mzv(const std::vector<long>& n, int prec);

// Euler's constant. The double integral needs prec <= 30.
enum class EulerGammaMethod { standard, double_integral };
inline constexpr int kEulerGammaIntegralMaxPrec = 30;
ApproxComplex euler_gamma(int prec, EulerGammaMethod method = EulerGammaMethod::standard);

} // namespace periods::special

#endif
