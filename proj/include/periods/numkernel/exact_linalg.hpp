#ifndef PERIODS_NUMKERNEL_EXACT_LINALG_HPP
#define PERIODS_NUMKERNEL_EXACT_LINALG_HPP

#include "periods/numkernel/bigfloat.hpp"

#include <vector>

namespace periods {

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact rank and determinant over Q by Gaussian elimination.
int rank_exact(RatMatrix m);
Rational det_exact(RatMatrix m);

} // namespace periods

#endif
