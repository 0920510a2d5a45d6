#ifndef PERIODS_DERHAM_INFINITY_HPP
#define PERIODS_DERHAM_INFINITY_HPP

#include "periods/derham/elliptic.hpp"
#include "periods/numkernel/trunc_series.hpp"

namespace periods::derham {

using QSeries = TruncSeries<Rational>;

// Expansion at the point O at infinity in the local parameter z = 2x/y:
// x = z^-2 g(z), y = z^-3 h(z) with g(0) = 1, h = 2g; g is known mod z^N.
struct SeriesAtInfinity {
    QSeries g;
    QSeries h;
    QSeries x;
    QSeries y;
    int N = 0;
};

// N >= 3.
SeriesAtInfinity expand_at_infinity(const EllipticCurveQ& E, int N);

// y^2 - 4x^3 + a x + b on the expansion (zero through the known order).
QSeries curve_residual(const EllipticCurveQ& E, const SeriesAtInfinity& s);

// P(x(z)) for a polynomial P.
QSeries substitute(const RatPoly& P, const QSeries& x);

// (N(x) + M(x) y) / f(x)^m dx
struct EllipticRationalForm {
    RatPoly N;
    RatPoly M;
    int m = 0;
};

// Residue at O. The expansion starts at order max(6, pole bound + 4) and
// doubles while a needed coefficient is beyond the truncation order.
Rational residue_at_infinity(const EllipticCurveQ& E, const EllipticRationalForm& form);
// Fixed order N; OrderError when N is too small.
Rational residue_at_infinity(const EllipticCurveQ& E, const EllipticRationalForm& form, int N);

// Coefficient series of dz for (R + S y) dx/y at O.
QSeries local_expansion(const EllipticCurveQ& E, const EllipticClass& form, int N);

// [u] cup [v] = Res_O((local primitive of u) * v).
Rational cup_product_elliptic(const EllipticCurveQ& E, const EllipticClass& u, const EllipticClass& v);

} // namespace periods::derham

#endif
