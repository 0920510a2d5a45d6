#include "periods/derham/elliptic.hpp"

#include "periods/numkernel/errors.hpp"

namespace periods::derham {

EllipticCurveQ::EllipticCurveQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b))
{
    if (discriminant() == 0) throw DomainError("singular cubic: a^3 - 27 b^2 = 0");
}

RatPoly EllipticCurveQ::f() const { return RatPoly(std::vector<Rational>{-b_, -a_, 0, 4}); }

ReducedElliptic reduce_elliptic(const EllipticCurveQ& E, const EllipticClass& form)
{
    ReducedElliptic out;
    // S y dx/y = S dx is exact.
    out.certificate.T = form.S.antiderivative();

    // d(x^r y) = [(4r+6) x^(r+2) - a(r+1/2) x^r - b r x^(r-1)] dx/y lowers the top degree.
    std::vector<Rational> R = form.R.coeffs();
    std::vector<Rational> U(R.size() > 2 ? R.size() - 2 : 0);
    for (int m = static_cast<int>(R.size()) - 1; m >= 2; --m) {
        const Rational c = R[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        const int r = m - 2;
        const Rational k = c / (4 * r + 6);
        U[static_cast<std::size_t>(r)] += k;
        R[static_cast<std::size_t>(m)] = 0;
        R[static_cast<std::size_t>(r)] += k * E.a() * frac(2 * r + 1, 2);
        if (r >= 1) R[static_cast<std::size_t>(r - 1)] += k * E.b() * r;
    }
    out.c0 = R.empty() ? Rational(0) : R[0];
    out.c1 = R.size() > 1 ? R[1] : Rational(0);
    out.certificate.U = RatPoly(std::move(U));
    return out;
}

EllipticClass exact_form(const EllipticCurveQ& E, const EllipticCertificate& cert)
{
    RatPoly f = E.f();
    RatPoly R = cert.U.derivative() * f + frac(1, 2) * (cert.U * f.derivative());
    return {R, cert.T.derivative()};
}

bool certificate_holds(const EllipticCurveQ& E, const EllipticClass& form, const ReducedElliptic& r)
{
    EllipticClass d = exact_form(E, r.certificate);
    RatPoly basis(std::vector<Rational>{r.c0, r.c1});
    return d.R + basis == form.R && d.S == form.S;
}

} // namespace periods::derham
