#ifndef PERIODS_SPECIAL_HYPERGEOMETRIC_HPP
#define PERIODS_SPECIAL_HYPERGEOMETRIC_HPP

#include "periods/numkernel/complex.hpp"

namespace periods::special {

enum class Hyp2F1Method { series, euler_integral };

// 2F1(a, b; c | z) for |z| < 1. The Euler integral needs c > a > 0 (or the
// same with b, the function being symmetric in a and b).
ApproxComplex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const ApproxComplex& z, int prec,
                     Hyp2F1Method method = Hyp2F1Method::series);

enum class BesselKind { I0, I0_prime, K0, K0_prime };

// Modified Bessel functions at real z > 0.
ApproxComplex bessel(BesselKind which, const ApproxComplex& z, int prec);

} // namespace periods::special

#endif
