#ifndef PERIODS_TESTS_LATTICE_ORACLE_HPP
#define PERIODS_TESTS_LATTICE_ORACLE_HPP

// Direct lattice sums over Z + Z tau in long double, independent of the
// q-series code. Each row m + c (c = n tau) is summed for |m| <= M, and the
// part |m| > M is replaced by the integral from M + 1/2 (midpoint rule).
// Rows beyond |n| = N are exponentially small and dropped.

#include <cmath>
#include <complex>

namespace periods::testing {

using cld = std::complex<long double>;

inline constexpr int kOracleRows = 30;
inline constexpr int kOracleCols = 2000;

// G4(tau) = sum' (m + n tau)^-4
inline cld lattice_g4(cld tau)
{
    const long double A = kOracleCols + 0.5L;
    cld sum = 0;
    for (int n = -kOracleRows; n <= kOracleRows; ++n) {
        cld c = tau * static_cast<long double>(n);
        for (int m = -kOracleCols; m <= kOracleCols; ++m) {
            if (m == 0 && n == 0) continue;
            sum += 1.0L / std::pow(c + static_cast<long double>(m), 4);
        }
        // int_A^inf (x + c)^-4 + (x - c)^-4 dx
        sum += (1.0L / std::pow(A + c, 3) + 1.0L / std::pow(A - c, 3)) / 3.0L;
    }
    return sum;
}

// wp(z) = 1/z^2 + sum' (1/(z - l)^2 - 1/l^2) for the lattice Z + Z tau.
inline cld lattice_wp(cld z, cld tau)
{
    const long double A = kOracleCols + 0.5L;
    cld sum = 1.0L / (z * z);
    for (int n = -kOracleRows; n <= kOracleRows; ++n) {
        cld c = tau * static_cast<long double>(n);
        for (int m = -kOracleCols; m <= kOracleCols; ++m) {
            if (m == 0 && n == 0) continue;
            cld l = c + static_cast<long double>(m);
            sum += 1.0L / ((z - l) * (z - l)) - 1.0L / (l * l);
        }
        // m > M: int 1/(x + c - z)^2 - 1/(x + c)^2 ; m < -M: int 1/(x + z - c)^2 - 1/(x - c)^2
        sum += 1.0L / (A + c - z) - 1.0L / (A + c);
        sum += 1.0L / (A + z - c) - 1.0L / (A - c);
    }
    return sum;
}

// zeta(z) = 1/z + sum' (1/(z - l) + 1/l + z/l^2)
inline cld lattice_zeta(cld z, cld tau)
{
    const long double A = kOracleCols + 0.5L;
    cld sum = 1.0L / z;
    for (int n = -kOracleRows; n <= kOracleRows; ++n) {
        cld c = tau * static_cast<long double>(n);
        for (int m = -kOracleCols; m <= kOracleCols; ++m) {
            if (m == 0 && n == 0) continue;
            cld l = c + static_cast<long double>(m);
            sum += 1.0L / (z - l) + 1.0L / l + z / (l * l);
        }
        sum += std::log(1.0L - z / (A + c)) + z / (A + c);
        sum += -std::log(1.0L + z / (A - c)) + z / (A - c);
    }
    return sum;
}

} // namespace periods::testing

#endif
