#include "checks.hpp"

#include "periods/derham/elliptic.hpp"
#include "periods/derham/infinity.hpp"
#include "periods/matrices/named.hpp"
#include "periods/special/gamma.hpp"
#include "periods/special/weierstrass.hpp"

#include <random>

namespace periods::verify::detail {

namespace {

using derham::EllipticCurveQ;
using special::eisenstein;
using special::EllipticPeriodData;

// Path z0 + t omega1, t in [0, 1], with z0 = omega2/2: a loop homologous to
// sigma1 that stays on the line where wp is real and finite.
ApproxComplex sigma1_pullback_integral(const EllipticPeriodData& d, const std::function<ApproxComplex(const ApproxComplex& P, const ApproxComplex& dP)>& form,
                                       Quadrature& q, int prec)
{
    const ApproxComplex z0 = d.lattice.omega2 / 2;
    return q.integrate(
               [&](const Abscissa& t) {
                   ApproxComplex z = z0 + d.lattice.omega1 * t.x;
                   return form(special::wp(z, d, prec), special::wp_prime(z, d, prec));
               },
               Endpoint::at(0), Endpoint::at(1)) *
           d.lattice.omega1;
}

BigFloat legendre_for(long a, long b, int prec)
{
    return matrices::elliptic_period_matrix(EllipticCurveQ(a, b), prec).diagnostic("legendre_defect");
}

BigFloat legendre_relation_lemniscatic(int prec, std::string&) { return legendre_for(4, 0, prec); }

BigFloat legendre_relation_generic(int prec, std::string&) { return legendre_for(8, 1, prec); }

BigFloat cm_lemniscatic(int prec, std::string&)
{
    EllipticPeriodData d = special::elliptic_periods(EllipticCurveQ(4, 0), prec);
    ApproxComplex g = special::gamma_fn(rat_c(1, 4, prec), prec);
    ApproxComplex rhs = g * g / (sqrt_c(pi_const(prec) * 2, prec) * 2);
    return distance(d.lattice.omega1, rhs);
}

BigFloat eisenstein_lattice_links(int prec, std::string&)
{
    EllipticPeriodData d = special::elliptic_periods(EllipticCurveQ(8, 1), prec);
    const ApproxComplex& w1 = d.lattice.omega1;
    const ApproxComplex& tau = d.lattice.tau;
    BigFloat g4 = distance(eisenstein(4, tau, prec) * 60 / pow_c(w1, 4), ApproxComplex(8, prec));
    BigFloat g6 = distance(eisenstein(6, tau, prec) * 140 / pow_c(w1, 6), ApproxComplex(1, prec));
    // eta1 = int_{sigma1} x dx/y, pulled back to int wp(z) dz
    Quadrature q(prec);
    ApproxComplex eta1 = sigma1_pullback_integral(d, [](const ApproxComplex& P, const ApproxComplex&) { return P; }, q, prec);
    BigFloat g2 = distance(eisenstein(2, tau, prec), -(w1 * eta1));
    return worst({g4, g6, g2});
}

std::vector<ApproxComplex> tau_samples(int prec)
{
    return {ApproxComplex::parse("0.3", "1.1", prec), ApproxComplex::parse("-0.2", "0.9", prec),
            ApproxComplex::parse("0.45", "0.6", prec)};
}

BigFloat eisenstein_zeros(int prec, std::string&)
{
    ApproxComplex i = ApproxComplex::i(prec);
    ApproxComplex rho = exp_c(two_pi_i(prec) / 3, prec);
    return worst({eisenstein(6, i, prec).abs(), eisenstein(4, rho, prec).abs()});
}

BigFloat modularity_G4G6(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (const auto& tau : tau_samples(prec)) {
        ApproxComplex s = ApproxComplex(-1, prec) / tau;
        for (int k : {4, 6}) {
            ApproxComplex g = eisenstein(k, tau, prec);
            d = worst({d, distance(eisenstein(k, s, prec), pow_c(tau, k) * g), distance(eisenstein(k, tau + 1, prec), g)});
        }
    }
    return d;
}

BigFloat quasimodularity_G2(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (const auto& tau : tau_samples(prec)) {
        ApproxComplex g = eisenstein(2, tau, prec);
        ApproxComplex s = ApproxComplex(-1, prec) / tau;
        d = worst({d, distance(eisenstein(2, s, prec), tau * tau * g - two_pi_i(prec) * tau),
                   distance(eisenstein(2, tau + 1, prec), g)});
    }
    return d;
}

BigFloat wp_ode(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (auto [a, b] : {std::pair{4L, 0L}, std::pair{8L, 1L}}) {
        EllipticPeriodData e = special::elliptic_periods(EllipticCurveQ(a, b), prec);
        for (auto [s, t] : {std::pair{31L, 17L}, std::pair{-45L, 62L}, std::pair{8L, 3L}}) {
            ApproxComplex z = e.lattice.omega1 * rat_c(s, 100, prec) + e.lattice.omega2 * rat_c(t, 100, prec);
            ApproxComplex P = special::wp(z, e, prec), Q = special::wp_prime(z, e, prec);
            ApproxComplex f = P * P * P * 4 - P * a - ApproxComplex(b, prec);
            // relative to the size of the terms
            BigFloat scale = (P * P * P).abs() * 4;
            if (scale < 1) scale = BigFloat(1, scale.bits());
            d = worst({d, distance(Q * Q, f) / scale});
        }
    }
    return d;
}

BigFloat wp_half_period(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (auto [a, b] : {std::pair{4L, 0L}, std::pair{8L, 1L}, std::pair{7L, -2L}}) {
        EllipticPeriodData e = special::elliptic_periods(EllipticCurveQ(a, b), prec);
        const ApproxComplex& w1 = e.lattice.omega1;
        const ApproxComplex& w2 = e.lattice.omega2;
        d = worst({d, distance(special::wp(w1 / 2, e, prec), e.roots[0]),
                   distance(special::wp((w1 + w2) / 2, e, prec), e.roots[1]),
                   distance(special::wp(w2 / 2, e, prec), e.roots[2])});
    }
    return d;
}

RatPoly random_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(frac(num(rng), den(rng)));
    return RatPoly(std::move(c));
}

// Random (R + S y) dx/y on y^2 = 4x^3 - 8x - 1: the sigma1-period of the raw
// form, integrated as (R(wp) + S(wp) wp') dz, against c0 omega1 + c1 eta1
// from the exact reduction.
BigFloat elliptic_reduction_roundtrip(int prec, std::string& detail)
{
    const EllipticCurveQ E(8, 1);
    EllipticPeriodData d = special::elliptic_periods(E, prec);
    std::mt19937_64 rng(20190415);
    Quadrature q(prec);
    BigFloat worst_abs(0, bits_for_digits(prec));
    for (int trial = 0; trial < 10; ++trial) {
        derham::EllipticClass form{random_poly(rng, 2 + trial % 3), random_poly(rng, trial % 3)};
        derham::ReducedElliptic r = derham::reduce_elliptic(E, form);
        auto eval = [&](const RatPoly& p, const ApproxComplex& x) {
            ApproxComplex acc(prec);
            for (int k = p.degree(); k >= 0; --k) acc = acc * x + ApproxComplex(p.coeff(k), prec);
            return acc;
        };
        ApproxComplex raw = sigma1_pullback_integral(
            d, [&](const ApproxComplex& P, const ApproxComplex& dP) { return eval(form.R, P) + eval(form.S, P) * dP; }, q,
            prec);
        ApproxComplex reduced = d.lattice.omega1 * ApproxComplex(r.c0, prec) + d.eta1 * ApproxComplex(r.c1, prec);
        worst_abs = worst({worst_abs, distance(raw, reduced)});
    }
    detail = "10 random forms, seed 20190415";
    return worst_abs;
}

// 2 pi i <dx/y, x dx/y> from residues at infinity against
// omega1 eta2 - omega2 eta1 from the period matrix.
BigFloat cup_legendre(int prec, std::string& detail)
{
    BigFloat d(0, bits_for_digits(prec));
    for (auto [a, b] : {std::pair{4L, 0L}, std::pair{8L, 1L}}) {
        const EllipticCurveQ E(a, b);
        derham::EllipticClass omega{RatPoly(1), RatPoly()};
        derham::EllipticClass eta{RatPoly::x(), RatPoly()};
        Rational cup = derham::cup_product_elliptic(E, omega, eta);
        auto m = matrices::elliptic_period_matrix(E, prec);
        ApproxComplex det = m.at(0, 0) * m.at(1, 1) - m.at(1, 0) * m.at(0, 1);
        d = worst({d, distance(two_pi_i(prec) * ApproxComplex(cup, prec), det)});
        detail = "cup(dx/y, x dx/y) = " + cup.get_str();
    }
    return d;
}

} // namespace

void add_elliptic_checks(std::vector<CheckSpec>& out)
{
    auto add = [&](std::string name, std::string description, std::vector<std::string> deps, CheckBody body) {
        CheckSpec c;
        c.name = std::move(name);
        c.description = std::move(description);
        c.dependencies = std::move(deps);
        c.body = std::move(body);
        out.push_back(std::move(c));
    };
    add("legendre_relation_lemniscatic", "omega1 eta2 - omega2 eta1 = 2 pi i on y^2 = 4x^3 - 4x", {"special", "matrices"},
        legendre_relation_lemniscatic);
    add("legendre_relation_generic", "omega1 eta2 - omega2 eta1 = 2 pi i on y^2 = 4x^3 - 8x - 1",
        {"special", "matrices"}, legendre_relation_generic);
    add("cm_lemniscatic", "omega1 of y^2 = 4x^3 - 4x equals Gamma(1/4)^2/(2 sqrt(2 pi))", {"special"}, cm_lemniscatic);
    add("eisenstein_lattice_links",
        "g2 = 60 G4, g3 = 140 G6 and G2 = -omega1 eta1 with eta1 = int wp(z) dz along sigma1, on y^2 = 4x^3 - 8x - 1",
        {"special", "numkernel"}, eisenstein_lattice_links);
    add("eisenstein_zeros", "G6(i) = 0 and G4(e^(2 pi i/3)) = 0", {"special"}, eisenstein_zeros);
    add("modularity_G4G6", "G_k(-1/tau) = tau^k G_k(tau) and G_k(tau+1) = G_k(tau) for k = 4, 6 at three tau",
        {"special"}, modularity_G4G6);
    add("quasimodularity_G2", "G2(-1/tau) = tau^2 G2(tau) - 2 pi i tau and G2(tau+1) = G2(tau) at three tau",
        {"special"}, quasimodularity_G2);
    add("wp_ode", "wp'^2 = 4 wp^3 - g2 wp - g3 (relative defect)", {"special"}, wp_ode);
    add("wp_half_period", "wp(omega1/2) = e1, wp((omega1+omega2)/2) = e2, wp(omega2/2) = e3", {"special"},
        wp_half_period);
    add("elliptic_reduction_roundtrip",
        "sigma1-period of a raw form (R + S y) dx/y equals c0 omega1 + c1 eta1 from its exact reduction",
        {"derham", "special"}, elliptic_reduction_roundtrip);
    add("cup_legendre", "2 pi i times the algebraic cup product <dx/y, x dx/y> equals the period determinant",
        {"derham", "matrices"}, cup_legendre);
}

} // namespace periods::verify::detail
