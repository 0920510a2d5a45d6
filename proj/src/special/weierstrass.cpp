#include "periods/special/weierstrass.hpp"

#include "periods/numkernel/agm.hpp"
#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/quadrature.hpp"

#include <cmath>

namespace periods::special {

namespace {

constexpr int kExtra = 5;

void check_tau(const ApproxComplex& tau)
{
    if (tau.imag().to_double() < kMinImTau)
        throw ConditioningError("Im(tau) = " + tau.imag().to_string(6) + " is below 0.05; q-series would not converge",
                                "", "");
}

// Number of q-series terms so that |q|^(n - 1/2) n^power is negligible.
long series_terms(const ApproxComplex& tau, int prec, int power)
{
    const double imt = tau.imag().to_double();
    const double log_q = -2 * M_PI * imt; // log|q|
    const double target = -(prec + kGuardDigits + 3) * std::log(10.0);
    long n = 1;
    while ((n - 0.5) * log_q + power * std::log(static_cast<double>(n)) - std::log(1 - std::exp(log_q)) > target) ++n;
    return n + 1;
}

// Reduction z/omega1 = w' + m + n tau with w' in the fundamental parallelogram.
struct Reduced {
    ApproxComplex w;
    long m = 0;
    long n = 0;
};

Reduced reduce(const ApproxComplex& z, const Lattice& L, int prec)
{
    ApproxComplex w = z.at_prec(prec) / L.omega1;
    BigFloat y = w.imag() / L.tau.imag();
    BigFloat x = w.real() - y * L.tau.real();
    Reduced r{w, mpfr_get_si(round(x).get(), MPFR_RNDN), mpfr_get_si(round(y).get(), MPFR_RNDN)};
    r.w = w - r.m - L.tau * r.n;
    if (r.w.abs() < BigFloat::pow10(-(prec + 5), r.w.bits())) throw PoleError("Weierstrass function at a lattice point");
    return r;
}

struct QSeries {
    ApproxComplex q;
    long terms;
};

QSeries q_of(const ApproxComplex& tau, int prec, int power)
{
    check_tau(tau);
    return {exp_c(two_pi_i(prec) * tau, prec), series_terms(tau, prec, power)};
}

// The trigonometric parts use sin/cos of pi w so that nothing cancels near w = 0.
ApproxComplex wp_tau(const ApproxComplex& w, const ApproxComplex& tau, int prec)
{
    const QSeries s = q_of(tau, prec, 1);
    const ApproxComplex pi = pi_const(prec);
    const ApproxComplex u = exp_c(two_pi_i(prec) * w, prec);
    const ApproxComplex ui = ApproxComplex(1, prec) / u;
    const ApproxComplex sn = sin_c(pi * w, prec);
    // 1/12 + u/(1-u)^2 + sum (q^n u/(1-q^n u)^2 + q^n/u/(1-q^n/u)^2 - 2 q^n/(1-q^n)^2)
    ApproxComplex total = ApproxComplex(Rational(1, 12), prec) - ApproxComplex(1, prec) / (sn * sn * 4);
    ApproxComplex qn(1, prec);
    for (long n = 1; n <= s.terms; ++n) {
        qn *= s.q;
        ApproxComplex a = qn * u, b = qn * ui;
        ApproxComplex oa = ApproxComplex(1, prec) - a, ob = ApproxComplex(1, prec) - b, oq = ApproxComplex(1, prec) - qn;
        total += a / (oa * oa) + b / (ob * ob) - qn * 2 / (oq * oq);
    }
    ApproxComplex tpi = two_pi_i(prec);
    return tpi * tpi * total;
}

ApproxComplex wp_prime_tau(const ApproxComplex& w, const ApproxComplex& tau, int prec)
{
    const QSeries s = q_of(tau, prec, 2);
    const ApproxComplex pi = pi_const(prec);
    const ApproxComplex tpi = two_pi_i(prec);
    const ApproxComplex u = exp_c(tpi * w, prec);
    const ApproxComplex ui = ApproxComplex(1, prec) / u;
    const ApproxComplex sn = sin_c(pi * w, prec), cs = cos_c(pi * w, prec);
    // d/dw of v/(1-v)^2 with v = c u^(+-1) is +-2 pi i v (1+v)/(1-v)^3.
    ApproxComplex sum(prec);
    ApproxComplex qn(1, prec);
    for (long n = 1; n <= s.terms; ++n) {
        qn *= s.q;
        ApproxComplex a = qn * u, b = qn * ui;
        ApproxComplex oa = ApproxComplex(1, prec) - a, ob = ApproxComplex(1, prec) - b;
        sum += a * (a + 1) / (oa * oa * oa) - b * (b + 1) / (ob * ob * ob);
    }
    ApproxComplex head = pi * cs / (sn * sn * sn * 2);
    return tpi * tpi * (head + tpi * sum);
}

// pi cot(pi w) + 2 pi i sum (q^n/u/(1-q^n/u) - q^n u/(1-q^n u)); zeta_tau(w) = G2 w + this.
ApproxComplex zeta_tau_tail(const ApproxComplex& w, const ApproxComplex& tau, int prec)
{
    const QSeries s = q_of(tau, prec, 0);
    const ApproxComplex pi = pi_const(prec);
    const ApproxComplex tpi = two_pi_i(prec);
    const ApproxComplex u = exp_c(tpi * w, prec);
    const ApproxComplex ui = ApproxComplex(1, prec) / u;
    ApproxComplex sum(prec);
    ApproxComplex qn(1, prec);
    for (long n = 1; n <= s.terms; ++n) {
        qn *= s.q;
        ApproxComplex a = qn * u, b = qn * ui;
        sum += b / (ApproxComplex(1, prec) - b) - a / (ApproxComplex(1, prec) - a);
    }
    return pi * cos_c(pi * w, prec) / sin_c(pi * w, prec) + tpi * sum;
}

} // namespace

Lattice Lattice::from_periods(const ApproxComplex& omega1, const ApproxComplex& omega2)
{
    if (omega1.is_zero()) throw DomainError("zero period");
    ApproxComplex tau = omega2 / omega1;
    if (tau.imag() <= 0) throw DomainError("Im(omega2/omega1) must be positive");
    return {omega1, omega2, tau};
}

EllipticPeriodData elliptic_periods(const derham::EllipticCurveQ& E, int prec)
{
    if (E.discriminant() < 0)
        throw UnsupportedDomainError("a^3 - 27 b^2 < 0: the cubic has complex roots, only real period lattices are supported");
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat a(E.a(), bits), b(E.b(), bits);

    // 4x^3 - a x - b: e_k = sqrt(a/3) cos(theta - 2 pi k/3), cos(3 theta) = 3 sqrt(3) b / a^(3/2).
    const BigFloat r = sqrt(a / 3);
    const BigFloat c3 = 3 * sqrt(BigFloat(3, bits)) * b / (a * sqrt(a));
    const BigFloat theta = atan2(sqrt(max(BigFloat(bits), 1 - c3 * c3)), c3) / 3;
    const BigFloat pi = BigFloat::pi(bits);
    std::array<BigFloat, 3> e;
    for (int k = 0; k < 3; ++k) {
        BigFloat x = r * cos(theta - 2 * pi * k / 3);
        for (int it = 0; it < 3; ++it) {
            BigFloat d = 12 * x * x - a;
            if (d.is_zero()) break;
            x -= (4 * x * x * x - a * x - b) / d;
        }
        e[static_cast<std::size_t>(k)] = x;
    }

    const BigFloat s13 = sqrt(e[0] - e[2]);
    const BigFloat omega1 = pi / agm(s13, sqrt(e[0] - e[1]), wp);
    const BigFloat omega2 = pi / agm(s13, sqrt(e[1] - e[2]), wp);

    EllipticPeriodData data;
    data.lattice = Lattice::from_periods(ApproxComplex(omega1, wp), ApproxComplex(BigFloat(bits), omega2, wp));
    for (int k = 0; k < 3; ++k) data.roots[static_cast<std::size_t>(k)] = ApproxComplex(e[static_cast<std::size_t>(k)], prec);
    data.g2 = ApproxComplex(E.a(), prec);
    data.g3 = ApproxComplex(E.b(), prec);
    auto [eta1, eta2] = quasi_periods(data.lattice, wp);
    data.lattice = {data.lattice.omega1.at_prec(prec), data.lattice.omega2.at_prec(prec), data.lattice.tau.at_prec(prec)};
    data.eta1 = eta1.at_prec(prec);
    data.eta2 = eta2.at_prec(prec);
    return data;
}

std::pair<ApproxComplex, ApproxComplex> elliptic_periods_by_quadrature(const derham::EllipticCurveQ& E, int prec)
{
    const EllipticPeriodData d = elliptic_periods(E, prec);
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat e1 = d.roots[0].real().with_bits(bits), e2 = d.roots[1].real().with_bits(bits),
                   e3 = d.roots[2].real().with_bits(bits);
    const BigFloat d12 = e1 - e2, d13 = e1 - e3, d23 = e2 - e3;
    Quadrature q(wp);
    // x = e1 + t: f = 4 t (t + e1 - e2)(t + e1 - e3)
    ApproxComplex w1 = q.integrate(
        [&](const Abscissa& t) {
            const BigFloat& s = t.to_lower;
            return ApproxComplex(1 / sqrt(4 * s * (s + d12) * (s + d13)), wp);
        },
        Endpoint::at(0), Endpoint::plus_infinity());
    // on (e2, e1), |f| = 4 (e1 - x)(x - e2)(x - e3)
    ApproxComplex w2 = q.integrate(
        [&](const Abscissa& t) {
            return ApproxComplex(1 / sqrt(4 * t.to_upper * t.to_lower * (t.to_lower + d23)), wp);
        },
        Endpoint::at(e2), Endpoint::at(e1));
    return {(w1 * 2).at_prec(prec), (ApproxComplex::i(wp) * w2 * 2).at_prec(prec)};
}

std::pair<ApproxComplex, ApproxComplex> quasi_periods(const Lattice& L_in, int prec)
{
    const int wp = prec + kExtra;
    check_tau(L_in.tau);
    const Lattice L{L_in.omega1.at_prec(wp), L_in.omega2.at_prec(wp), L_in.tau.at_prec(wp)};
    const ApproxComplex eta1 = -eisenstein(2, L.tau, wp) / L.omega1;
    // eta2 = -2 zeta(omega2/2); tau/2 already lies in the fundamental domain.
    const ApproxComplex w = L.tau / 2;
    const ApproxComplex zeta_half = -(eta1 * w) + zeta_tau_tail(w, L.tau, wp) / L.omega1;
    const ApproxComplex eta2 = -(zeta_half * 2);
    return {eta1.at_prec(prec), eta2.at_prec(prec)};
}

ApproxComplex wp(const ApproxComplex& z, const EllipticPeriodData& data, int prec)
{
    const int wpr = prec + kExtra;
    const Lattice& L = data.lattice;
    Reduced r = reduce(z, L, wpr);
    ApproxComplex o = L.omega1.at_prec(wpr);
    return (wp_tau(r.w, L.tau.at_prec(wpr), wpr) / (o * o)).at_prec(prec);
}

ApproxComplex wp_prime(const ApproxComplex& z, const EllipticPeriodData& data, int prec)
{
    const int wpr = prec + kExtra;
    const Lattice& L = data.lattice;
    Reduced r = reduce(z, L, wpr);
    ApproxComplex o = L.omega1.at_prec(wpr);
    return (wp_prime_tau(r.w, L.tau.at_prec(wpr), wpr) / (o * o * o)).at_prec(prec);
}

ApproxComplex wzeta(const ApproxComplex& z, const EllipticPeriodData& data, int prec)
{
    const int wpr = prec + kExtra;
    const Lattice& L = data.lattice;
    Reduced r = reduce(z, L, wpr);
    const ApproxComplex eta1 = data.eta1.at_prec(wpr);
    // zeta(z' + m omega1 + n omega2) = zeta(z') - m eta1 - n eta2
    ApproxComplex v = -(eta1 * r.w) + zeta_tau_tail(r.w, L.tau.at_prec(wpr), wpr) / L.omega1.at_prec(wpr);
    v -= eta1 * r.m;
    v -= data.eta2.at_prec(wpr) * r.n;
    return v.at_prec(prec);
}

ApproxComplex eisenstein(int k, const ApproxComplex& tau_in, int prec)
{
    if (k != 2 && k != 4 && k != 6) throw DomainError("eisenstein supports weights 2, 4 and 6");
    check_tau(tau_in);
    const int wp = prec + kExtra;
    const ApproxComplex tau = tau_in.at_prec(wp);
    const QSeries s = q_of(tau, wp, k);
    // Lambert form: sum sigma_{k-1}(n) q^n = sum n^(k-1) q^n / (1 - q^n)
    ApproxComplex sum(wp);
    ApproxComplex qn(1, wp);
    for (long n = 1; n <= s.terms; ++n) {
        qn *= s.q;
        ApproxComplex t = qn / (ApproxComplex(1, wp) - qn);
        for (int j = 1; j < k; ++j) t *= n;
        sum += t;
    }
    const BigFloat pi = BigFloat::pi(bits_for_digits(wp));
    const BigFloat pi2 = pi * pi;
    switch (k) {
    case 2: // 2 zeta(2) = pi^2/3
        return ((ApproxComplex(1, wp) - sum * 24) * (pi2 / 3)).at_prec(prec);
    case 4: // 2 zeta(4) = pi^4/45
        return ((ApproxComplex(1, wp) + sum * 240) * (pi2 * pi2 / 45)).at_prec(prec);
    default: // 2 zeta(6) = 2 pi^6/945
        return ((ApproxComplex(1, wp) - sum * 504) * (pi2 * pi2 * pi2 * 2 / 945)).at_prec(prec);
    }
}

} // namespace periods::special
