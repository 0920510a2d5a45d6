#ifndef PERIODS_NUMKERNEL_AGM_HPP
#define PERIODS_NUMKERNEL_AGM_HPP

#include "periods/numkernel/complex.hpp"

#include <vector>

namespace periods {

// Arithmetic-geometric mean of two positive reals. Complex inputs (branch
// choice) are an UnsupportedDomainError, non-positive reals a DomainError.
ApproxComplex agm(const ApproxComplex& a, const ApproxComplex& b, int prec);
BigFloat agm(const BigFloat& a, const BigFloat& b, int prec);

// All complex roots of sum coeffs[k] x^k (Aberth-Ehrlich), repeated
// according to multiplicity. Each root r satisfies
// |p(r)| < 10^(5-prec) * max|coeff|; otherwise a NumericError is thrown.
std::vector<ApproxComplex> poly_roots(const std::vector<ApproxComplex>& coeffs, int prec);

} // namespace periods

#endif
