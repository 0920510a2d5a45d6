#include "checks.hpp"

#include "periods/numkernel/errors.hpp"
#include "periods/special/gamma.hpp"
#include "periods/special/hypergeometric.hpp"

namespace periods::verify::detail {

namespace {

using special::gamma_fn;

ApproxComplex real_c(const BigFloat& x, int prec) { return ApproxComplex(x, prec); }

BigFloat pi_representations(int prec, std::string&)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    Quadrature q(prec);
    auto cauchy = [&](const Abscissa& a) { return real_c(1 / (1 + a.x * a.x), prec); };
    ApproxComplex line = q.integrate(cauchy, Endpoint::minus_infinity(), Endpoint::plus_infinity());
    ApproxComplex half = q.integrate([&](const Abscissa& a) { return real_c(2 / (1 + a.x * a.x), prec); },
                                     Endpoint::at(0), Endpoint::plus_infinity());
    // 1 - x^2 = (x + 1)(1 - x) from the node offsets, exact near both ends
    ApproxComplex area = q.integrate([&](const Abscissa& a) { return real_c(2 * sqrt(a.to_lower * a.to_upper), prec); },
                                     Endpoint::at(-1), Endpoint::at(1));
    ApproxComplex arc = q.integrate([&](const Abscissa& a) { return real_c(1 / sqrt(a.to_lower * a.to_upper), prec); },
                                    Endpoint::at(-1), Endpoint::at(1));
    return worst({distance(line, real_c(BigFloat::pi(bits), prec)), distance(half, line), distance(area, line),
                  distance(arc, line)});
}

BigFloat zeta_even(int prec, std::string&)
{
    const BigFloat pi = BigFloat::pi(bits_for_digits(prec));
    const BigFloat p2 = pi * pi;
    return worst({distance(special::zeta_fn(2, prec), real_c(p2 / 6, prec)),
                  distance(special::zeta_fn(4, prec), real_c(p2 * p2 / 90, prec)),
                  distance(special::zeta_fn(6, prec), real_c(p2 * p2 * p2 / 945, prec))});
}

// The outer range stops at 1 - delta, delta = 10^-(prec+10): below that the
// inner peak is narrower than any node spacing. The omitted strip is at most
// delta (1 + log(1/delta)) and shows up in the defect.
BigFloat zeta2_double_integral(int prec, std::string& detail)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    const BigFloat delta = BigFloat::pow10(-(prec + 10), bits);
    Quadrature inner(prec), outer(prec);
    auto row = [&](const Abscissa& y) {
        // 1 - x y = (1 - y) + y (1 - x), no cancellation near the corner (1, 1)
        const BigFloat one_minus_y = delta + y.to_upper;
        return inner.integrate(
            [&](const Abscissa& x) { return real_c(1 / (one_minus_y + y.x * x.to_upper), prec); }, Endpoint::at(0),
            Endpoint::at(1));
    };
    ApproxComplex v = outer.integrate(row, Endpoint::at(0), Endpoint::at(1 - delta));
    const BigFloat pi = BigFloat::pi(bits);
    detail = "outer range [0, 1 - 1e-" + std::to_string(prec + 10) + "]";
    return distance(v, real_c(pi * pi / 6, prec));
}

BigFloat mzv_stuffle(int prec, std::string&)
{
    ApproxComplex lhs = special::zeta_fn(2, prec) * special::zeta_fn(3, prec);
    ApproxComplex rhs = special::mzv({2, 3}, prec) + special::mzv({3, 2}, prec) + special::zeta_fn(5, prec);
    return distance(lhs, rhs);
}

BigFloat log_additivity(int prec, std::string&)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    Quadrature q(prec);
    auto log_q = [&](const Rational& t) {
        return q.integrate([&](const Abscissa& x) { return real_c(1 / x.x, prec); }, Endpoint::at(1),
                           Endpoint::at(BigFloat(t, bits)));
    };
    BigFloat d(0, bits);
    for (auto [a, b] : {std::pair{Rational(3), frac(7, 2)}, std::pair{frac(5, 4), Rational(10)}}) {
        ApproxComplex lab = log_q(Rational(a * b)), la = log_q(a), lb = log_q(b);
        d = worst({d, distance(lab, la + lb), distance(la, real_c(log(BigFloat(a, bits)), prec))});
    }
    return d;
}

BigFloat beta_gamma(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (auto [a, b] : {std::pair{frac(1, 3), frac(1, 2)}, std::pair{frac(3, 4), frac(5, 4)}, std::pair{frac(2, 5), frac(7, 3)}}) {
        ApproxComplex ca(a, prec), cb(b, prec);
        ApproxComplex integral = special::beta_fn(ca, cb, prec, special::BetaMethod::quadrature);
        ApproxComplex euler = gamma_fn(ca, prec) * gamma_fn(cb, prec) / gamma_fn(ca + cb, prec);
        d = worst({d, distance(integral, euler)});
    }
    return d;
}

std::vector<ApproxComplex> gamma_samples(int prec)
{
    const int p = prec;
    return {rat_c(1, 3, p), rat_c(1, 4, p), rat_c(7, 5, p), rat_c(2, 7, p) + ApproxComplex::i(p) * rat_c(1, 3, p)};
}

BigFloat gamma_reflection(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    const ApproxComplex pi = pi_const(prec);
    for (const auto& s : gamma_samples(prec)) {
        ApproxComplex lhs = gamma_fn(s, prec) * gamma_fn(ApproxComplex(1, prec) - s, prec);
        d = worst({d, distance(lhs, pi / sin_c(pi * s, prec))});
    }
    return d;
}

BigFloat gamma_multiplication(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    const ApproxComplex two_pi = pi_const(prec) * 2;
    for (long n : {2L, 3L, 5L}) {
        for (const auto& s : gamma_samples(prec)) {
            ApproxComplex lhs(1, prec);
            for (long a = 0; a < n; ++a) lhs *= gamma_fn(s + rat_c(a, n, prec), prec);
            ApproxComplex nn(n, prec);
            ApproxComplex rhs = pow_c(two_pi, rat_c(n - 1, 2, prec), prec) / pow_c(nn, s * n - rat_c(1, 2, prec), prec) *
                                gamma_fn(s * n, prec);
            d = worst({d, distance(lhs, rhs)});
        }
    }
    return d;
}

BigFloat gamma_telescope(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (const auto& s : gamma_samples(prec)) d = worst({d, distance(gamma_fn(s + 1, prec), s * gamma_fn(s, prec))});
    ApproxComplex neg = rat_c(-7, 3, prec);
    return worst({d, distance(gamma_fn(neg + 1, prec), neg * gamma_fn(neg, prec))});
}

BigFloat gauss_integral(int prec, std::string&)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    Quadrature q(prec);
    ApproxComplex g = q.integrate([&](const Abscissa& x) { return real_c(exp(-(x.x * x.x)), prec); },
                                  Endpoint::minus_infinity(), Endpoint::plus_infinity());
    // polar coordinates: pi int_0^inf 2 r e^(-r^2) dr
    ApproxComplex radial = q.integrate([&](const Abscissa& r) { return real_c(2 * r.x * exp(-(r.x * r.x)), prec); },
                                       Endpoint::at(0), Endpoint::plus_infinity());
    const BigFloat pi = BigFloat::pi(bits);
    return worst({distance(g, real_c(sqrt(pi), prec)), distance(g * g, radial * pi)});
}

BigFloat euler_gamma_integral(int prec, std::string&)
{
    return distance(special::euler_gamma(prec, special::EulerGammaMethod::double_integral),
                    special::euler_gamma(prec, special::EulerGammaMethod::standard));
}

// x = sum 10^(-k!). The tail x - p_n/q_n is at least its first term
// 10^(-(n+1)!) and at most (10/9) 10^(-(n+1)!), since consecutive
// factorials past n differ by at least 1. Everything else is exact.
BigFloat liouville_witness(int prec, std::string& detail)
{
    auto fact = [](long n) {
        long f = 1;
        for (long k = 2; k <= n; ++k) f *= k;
        return f;
    };
    auto inv_pow10 = [](long e) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
        return Rational(1, r);
    };
    Rational partial = 0;
    for (long n = 1; n <= 5; ++n) {
        partial += inv_pow10(fact(n));
        Integer qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), 10, static_cast<unsigned long>(fact(n)));
        Integer pn = 0;
        for (long k = 1; k <= n; ++k) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(fact(n) - fact(k)));
            pn += t;
        }
        Rational pq(pn, qn);
        pq.canonicalize();
        const Rational tail_lo = inv_pow10(fact(n + 1));
        const Rational tail_hi = Rational(10, 9) * tail_lo;
        Integer qn_n;
        mpz_pow_ui(qn_n.get_mpz_t(), qn.get_mpz_t(), static_cast<unsigned long>(n));
        const Rational bound(1, qn_n);
        if (pq != partial || !(tail_lo > 0) || !(tail_hi < bound)) {
            detail = "fails at n = " + std::to_string(n);
            return exact_defect(false, prec);
        }
    }
    return exact_defect(true, prec);
}

BigFloat lemniscate_sector(int prec, std::string&)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    const Rational t(1, 2);
    const BigFloat lower = sqrt(BigFloat(Rational(1 - t * t), bits));
    Quadrature q(prec);
    // sqrt(1 - x^2) = sqrt((1 - x)(1 + x)) with 1 - x taken from the node
    ApproxComplex area = q.integrate(
        [&](const Abscissa& x) { return real_c(x.x * sqrt(x.to_upper * (1 + x.x)), prec); }, Endpoint::at(lower),
        Endpoint::at(1));
    ApproxComplex lhs = ApproxComplex(Rational(t * (1 - t * t) / 2), prec) + area;
    ApproxComplex rhs(Rational(t / 2 - t * t * t / 6), prec);
    return distance(lhs, rhs);
}

// K(k) at k = 1/2 from the angle form, the algebraic form and the pendulum's
// own variable theta with theta0 = 2 asin(k).
BigFloat pendulum_forms(int prec, std::string&)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    const BigFloat k(frac(1, 2), bits);
    const BigFloat k2 = k * k;
    const BigFloat pi = BigFloat::pi(bits);
    Quadrature q(prec);
    ApproxComplex phi_form = q.integrate(
        [&](const Abscissa& p) {
            BigFloat s = sin(p.x);
            return real_c(1 / sqrt(1 - k2 * s * s), prec);
        },
        Endpoint::at(0), Endpoint::at(pi / 2));
    ApproxComplex x_form = q.integrate(
        [&](const Abscissa& x) { return real_c(1 / sqrt(x.to_upper * (1 + x.x) * (1 - k2 * x.x * x.x)), prec); },
        Endpoint::at(0), Endpoint::at(1));
    // sin^2(t0/2) - sin^2(t/2) = sin((t0 - t)/2) sin((t0 + t)/2)
    const BigFloat theta0 = 2 * asin(k);
    ApproxComplex theta_form = q.integrate(
        [&](const Abscissa& t) {
            return real_c(1 / sqrt(sin(t.to_upper / 2) * sin((theta0 + t.x) / 2)), prec);
        },
        Endpoint::at(0), Endpoint::at(theta0));
    theta_form = theta_form / 2;
    return worst({distance(phi_form, x_form), distance(phi_form, theta_form)});
}

BigFloat beukers_wolfart(int prec, std::string& detail)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    ApproxComplex first = special::hyp2f1(frac(1, 12), frac(5, 12), frac(1, 2), ApproxComplex(frac(1323, 1331), prec), prec);
    BigFloat first_rhs = 3 * sqrt(sqrt(BigFloat(11, bits))) / 4;
    ApproxComplex second = special::hyp2f1(frac(1, 12), frac(7, 12), frac(2, 3), ApproxComplex(frac(64000, 64009), prec), prec);
    BigFloat second_rhs = 2 * pow(BigFloat(253, bits), BigFloat(frac(1, 6), bits)) / 3;
    detail = "companion at 64000/64009";
    return worst({distance(first, real_c(first_rhs, prec)), distance(second, real_c(second_rhs, prec))});
}

} // namespace

void add_classical_checks(std::vector<CheckSpec>& out)
{
    auto add = [&](std::string name, std::string description, std::vector<std::string> deps, CheckBody body,
                   int max_prec = 0, int tol_exp = 10) {
        CheckSpec c;
        c.name = std::move(name);
        c.description = std::move(description);
        c.dependencies = std::move(deps);
        c.body = std::move(body);
        c.max_prec = max_prec;
        c.tolerance_exp = tol_exp;
        out.push_back(std::move(c));
    };
    add("pi_representations",
        "pi as int dx/(1+x^2) over the line, 2 int_0^inf dx/(1+x^2), 2 int sqrt(1-x^2) and int dt/sqrt(1-t^2) over [-1,1]",
        {"numkernel"}, pi_representations);
    add("zeta_even", "zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945", {"special"}, zeta_even);
    add("zeta2_double_integral", "iterated int over [0,1]^2 of dx dy/(1-xy) equals pi^2/6", {"numkernel"},
        zeta2_double_integral, 20, 3);
    add("mzv_stuffle", "zeta(2) zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5)", {"special"}, mzv_stuffle,
        special::kMzvMaxPrec, 3);
    add("log_additivity", "int_1^ab dx/x = int_1^a dx/x + int_1^b dy/y (substitution x = a y)", {"numkernel"},
        log_additivity);
    add("beta_gamma", "int_0^1 t^(a-1) (1-t)^(b-1) dt = Gamma(a) Gamma(b)/Gamma(a+b)", {"special"}, beta_gamma);
    add("gamma_reflection", "Gamma(s) Gamma(1-s) = pi/sin(pi s)", {"special"}, gamma_reflection);
    add("gamma_multiplication", "prod_{a<n} Gamma(s + a/n) = (2 pi)^((n-1)/2) n^(1/2 - n s) Gamma(n s), n = 2, 3, 5",
        {"special"}, gamma_multiplication);
    add("gamma_telescope", "Gamma(s+1) = s Gamma(s)", {"special"}, gamma_telescope);
    add("gauss_integral", "int e^(-x^2) over the line is sqrt(pi); its square matches the polar-coordinate integral",
        {"numkernel"}, gauss_integral);
    add("euler_gamma_integral",
        "gamma = int_[0,1]^2 e^(-xy) - int_[1,inf)^2 e^(-xy) against lim (H_N - log N)", {"special"},
        euler_gamma_integral, 12, 3);
    add("liouville_witness",
        "exact: 0 < x - p_n/q_n < 1/q_n^n for x = sum 10^(-k!), n <= 5", {"numkernel"}, liouville_witness);
    add("lemniscate_sector", "t(1-t^2)/2 + int_sqrt(1-t^2)^1 x sqrt(1-x^2) dx = t/2 - t^3/6 at t = 1/2",
        {"numkernel"}, lemniscate_sector);
    add("pendulum_forms", "complete elliptic integral at k = 1/2 in the angle, algebraic and pendulum forms",
        {"numkernel"}, pendulum_forms);
    add("beukers_wolfart",
        "2F1(1/12,5/12;1/2|1323/1331) = (3/4) 11^(1/4) and 2F1(1/12,7/12;2/3|64000/64009) = (2/3) 253^(1/6)",
        {"special"}, beukers_wolfart);
}

} // namespace periods::verify::detail
