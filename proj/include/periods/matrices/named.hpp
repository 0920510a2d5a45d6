#ifndef PERIODS_MATRICES_NAMED_HPP
#define PERIODS_MATRICES_NAMED_HPP

#include "periods/derham/elliptic.hpp"
#include "periods/matrices/period_matrix.hpp"
#include "periods/numkernel/ratpoly.hpp"

namespace periods::matrices {

// (alpha_i^j) over the complex roots of an irreducible f of degree <= 8,
// roots sorted by (real, imaginary) part. Diagnostic "disc_defect" is
// |det^2 - disc(f/lc(f))|.
PeriodMatrix vandermonde_matrix(const RatPoly& f, int prec);

// Relative cohomology of (G_m, {1, q}), q > 1: rows sigma0 (1 -> q) and
// sigma1 (loop around 0), columns dx/(q-1) and dx/x. Diagnostics:
// "log_quadrature_defect" (|log q - int_1^q dx/x|) and
// "monodromy_defect" (a path winding once more around 0 integrates dx/x
// to log q + 2 pi i).
PeriodMatrix log_period_matrix(const Rational& q, int prec);

// int of dx/x along t -> (1 + t(q-1)) e^(2 pi i n t), which winds n times
// around 0: log q + 2 pi i n.
ApproxComplex log_along_winding_path(const Rational& q, long n, int prec);

// Li2(z) = sum z^n/n^2 for |z| < 1.
ApproxComplex dilog_series(const ApproxComplex& z, int prec);
// alpha int int dx dy/(1 - alpha x y) over the unit square, iterated quadrature.
ApproxComplex dilog_square_integral(const Rational& alpha, int prec);

// 3x3 matrix of the dilogarithm example, 0 < alpha < 1, prec <= 25.
// Diagnostics: "li2_quadrature_defect", "entry12_quadrature_defect".
inline constexpr int kDilogMaxPrec = 25;
PeriodMatrix dilog_period_matrix(const Rational& alpha, int prec);

// [[omega1, eta1], [omega2, eta2]] over sigma1, sigma2 against dx/y, x dx/y.
// Diagnostic "legendre_defect" = |omega1 eta2 - omega2 eta1 - 2 pi i|.
PeriodMatrix elliptic_period_matrix(const derham::EllipticCurveQ& E, int prec);

// ((zeta^(ij) - 1)/n Gamma(j/n)), 1 <= i, j <= n-1, zeta = e^(2 pi i/n), 2 <= n <= 8.
// Diagnostic "det_formula_defect" compares det with
// n^(1/2-n) (2 pi)^((n-1)/2) prod_{i<j} (zeta^j - zeta^i).
PeriodMatrix gamma_twisted_matrix(int n, int prec);
ApproxComplex gamma_twisted_det_formula(int n, int prec);

// [[2 pi i I0(2), -2 pi i I0'(2)], [2 K0(2), -2 K0'(2)]].
// Diagnostics "det_defect" (|det - 2 pi i|) and "wronskian_defect" (|W(2) + 1/2|).
PeriodMatrix bessel_period_matrix(int prec);

enum class FermatKind { first, second, third };
const char* to_string(FermatKind k);

struct FermatPeriod {
    ApproxComplex value;
    FermatKind kind;
    // r + s = d only: |value - (-(xi^r + xi^s)/d) 2 pi i|, xi = e^(pi i/d); otherwise 0.
    BigFloat third_kind_defect;
};

// (1 - zeta^r)(1 - zeta^s)/d B(r/d, s/d) with zeta = e^(2 pi i/d).
FermatPeriod fermat_period(int d, int r, int s, int prec);

} // namespace periods::matrices

#endif
