#ifndef PERIODS_DERHAM_ELLIPTIC_HPP
#define PERIODS_DERHAM_ELLIPTIC_HPP

#include "periods/numkernel/ratpoly.hpp"

namespace periods::derham {

// y^2 = 4x^3 - a x - b over Q, with a^3 - 27 b^2 != 0.
class EllipticCurveQ {
public:
    EllipticCurveQ(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Rational discriminant() const { return a_ * a_ * a_ - 27 * b_ * b_; }
    // f(x) = 4x^3 - a x - b
    RatPoly f() const;

private:
    Rational a_;
    Rational b_;
};

// The form (R(x) + S(x) y) dx/y.
struct EllipticClass {
    RatPoly R;
    RatPoly S;
};

// d(T + U y) = (U' f + U f'/2 + T' y) dx/y.
struct EllipticCertificate {
    RatPoly T;
    RatPoly U;
};

// input = d(T + U y) + (c0 + c1 x) dx/y.
struct ReducedElliptic {
    Rational c0;
    Rational c1;
    EllipticCertificate certificate;
};

ReducedElliptic reduce_elliptic(const EllipticCurveQ& E, const EllipticClass& form);

// Expands d(T + U y) as an EllipticClass.
EllipticClass exact_form(const EllipticCurveQ& E, const EllipticCertificate& cert);

// Recomputes d(T + U y) + (c0 + c1 x) dx/y and compares with the input.
bool certificate_holds(const EllipticCurveQ& E, const EllipticClass& form, const ReducedElliptic& r);

} // namespace periods::derham

#endif
