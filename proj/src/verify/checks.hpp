#ifndef PERIODS_SRC_VERIFY_CHECKS_HPP
#define PERIODS_SRC_VERIFY_CHECKS_HPP

#include "periods/numkernel/quadrature.hpp"
#include "periods/numkernel/ratpoly.hpp"
#include "periods/verify/registry.hpp"

#include <algorithm>

namespace periods::verify::detail {

inline BigFloat worst(std::initializer_list<BigFloat> ds)
{
    BigFloat acc = *ds.begin();
    for (const auto& d : ds)
        if (d > acc) acc = d;
    return acc;
}

// Exact checks report 0 when the statement holds and 1 otherwise.
inline BigFloat exact_defect(bool ok, int prec) { return BigFloat(ok ? 0 : 1, bits_for_digits(prec)); }

inline ApproxComplex rat_c(long p, long q, int prec) { return ApproxComplex(frac(p, q), prec); }

void add_classical_checks(std::vector<CheckSpec>& out);
void add_elliptic_checks(std::vector<CheckSpec>& out);
void add_matrix_checks(std::vector<CheckSpec>& out);

} // namespace periods::verify::detail

#endif
