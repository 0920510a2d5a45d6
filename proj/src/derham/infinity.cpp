#include "periods/derham/infinity.hpp"

#include "periods/numkernel/errors.hpp"

#include <algorithm>

namespace periods::derham {

SeriesAtInfinity expand_at_infinity(const EllipticCurveQ& E, int N)
{
    if (N < 3) throw DomainError("expansion at infinity needs N >= 3");
    // With h = 2g the curve equation becomes (1 + e)^2 e = (a/4) z^4 (1 + e) + (b/4) z^6, g = 1 + e.
    // Each pass fixes at least four more coefficients of e.
    const QSeries one = QSeries::monomial(1, 0, N);
    const QSeries rhs_a = QSeries::monomial(E.a() / 4, 4, N);
    const QSeries rhs_b = QSeries::monomial(E.b() / 4, 6, N);
    QSeries e(N);
    for (int pass = 0; pass <= N / 4 + 1; ++pass) {
        QSeries nonlinear = (QSeries::monomial(2, 0, N) * e + e * e) * e;
        e = rhs_a * (one + e) + rhs_b - nonlinear;
    }
    SeriesAtInfinity s;
    s.N = N;
    s.g = one + e;
    s.h = Rational(2) * s.g;
    s.x = QSeries::monomial(1, -2, N) * s.g;
    s.y = QSeries::monomial(1, -3, N) * s.h;
    return s;
}

QSeries curve_residual(const EllipticCurveQ& E, const SeriesAtInfinity& s)
{
    QSeries x3 = s.x * s.x * s.x;
    QSeries r = s.y * s.y - Rational(4) * x3 + E.a() * s.x;
    return r + QSeries::monomial(E.b(), 0, r.order());
}

QSeries substitute(const RatPoly& P, const QSeries& x)
{
    // Constants are exact; carrying them a little past x's order is enough.
    const int exact = x.order() + 8;
    if (P.is_zero()) return QSeries(exact);
    QSeries r = QSeries::monomial(P.leading(), 0, exact);
    for (int k = P.degree() - 1; k >= 0; --k) r = r * x + QSeries::monomial(P.coeff(k), 0, exact);
    return r;
}

namespace {

int pole_bound(const RatPoly& N, const RatPoly& M)
{
    return std::max(2 * std::max(N.degree(), 0), 2 * std::max(M.degree(), 0) + 3) + 3;
}

template <class F>
Rational with_growing_order(int start, F&& f)
{
    for (int N = start; N <= 4096; N *= 2) {
        try {
            return f(N);
        } catch (const OrderError&) {
        }
    }
    throw OrderError("series at infinity: order 4096 still insufficient");
}

} // namespace

Rational residue_at_infinity(const EllipticCurveQ& E, const EllipticRationalForm& form, int N)
{
    if (form.m < 0) throw DomainError("negative power of f in a rational form");
    SeriesAtInfinity s = expand_at_infinity(E, N);
    QSeries dx = s.x.derivative();
    QSeries num = substitute(form.N, s.x) + substitute(form.M, s.x) * s.y;
    QSeries f = substitute(E.f(), s.x);
    QSeries w = num * dx * f.pow(-form.m);
    return w.coeff(-1);
}

Rational residue_at_infinity(const EllipticCurveQ& E, const EllipticRationalForm& form)
{
    int start = std::max(6, pole_bound(form.N, form.M) + 4);
    return with_growing_order(start, [&](int N) { return residue_at_infinity(E, form, N); });
}

QSeries local_expansion(const EllipticCurveQ& E, const EllipticClass& form, int N)
{
    SeriesAtInfinity s = expand_at_infinity(E, N);
    QSeries dx = s.x.derivative();
    return (substitute(form.R, s.x) * s.y.inverse() + substitute(form.S, s.x)) * dx;
}

Rational cup_product_elliptic(const EllipticCurveQ& E, const EllipticClass& u, const EllipticClass& v)
{
    int start = std::max(6, pole_bound(u.R, u.S) + pole_bound(v.R, v.S) + 4);
    return with_growing_order(start, [&](int N) {
        QSeries F = local_expansion(E, u, N).antiderivative();
        return (F * local_expansion(E, v, N)).coeff(-1);
    });
}

} // namespace periods::derham
