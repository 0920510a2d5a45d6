#include "periods/numkernel/agm.hpp"
#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/laurent.hpp"
#include "periods/numkernel/quadrature.hpp"
#include "periods/numkernel/ratpoly.hpp"
#include "periods/numkernel/trunc_series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace periods;

namespace {

Rational random_rational(std::mt19937_64& rng, int range = 20)
{
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

RatPoly random_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.push_back(random_rational(rng));
    return RatPoly(std::move(c));
}

BigFloat tol(int exponent, int prec) { return BigFloat::pow10(exponent, bits_for_digits(prec)); }

// arctan(1/n) by its Taylor series, for a Machin-formula pi oracle.
BigFloat arctan_inverse(long n, mpfr_prec_t bits)
{
    BigFloat x = BigFloat(1, bits) / n;
    BigFloat x2 = x * x;
    BigFloat term = x, sum = x;
    BigFloat eps = BigFloat::pow10(-100, bits);
    for (long k = 1; abs(term) > eps; ++k) {
        term = -(term * x2);
        sum += term / (2 * k + 1);
    }
    return sum;
}

} // namespace

TEST(Rational, FieldAxiomsOnRandomTriples)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (a != 0) EXPECT_EQ(a * (Rational(1) / a), 1);
        Rational s = a + b;
        EXPECT_GT(s.get_den(), 0);
        EXPECT_EQ(gcd(s.get_num(), s.get_den()), 1);
    }
}

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), -7);
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(RatPoly, ExtGcdExamples)
{
    RatPoly x = RatPoly::x();
    auto r = ext_gcd(x * x - 1, 2 * x);
    EXPECT_EQ(r.d, RatPoly(1));
    EXPECT_EQ(r.u, RatPoly(-1));
    EXPECT_EQ(r.v, Rational(1, 2) * x);

    r = ext_gcd(x, x * x);
    EXPECT_EQ(r.d, x);
    EXPECT_EQ(r.u, RatPoly(1));
    EXPECT_EQ(r.v, RatPoly(0));

    RatPoly f = 4 * x * x * x - 4 * x;
    r = ext_gcd(f, f.derivative());
    EXPECT_EQ(r.d, RatPoly(1));
    EXPECT_EQ(r.u * f + r.v * f.derivative(), RatPoly(1));

    EXPECT_THROW(ext_gcd(RatPoly(), RatPoly()), DomainError);
}

TEST(RatPoly, ExtGcdCertificateOnRandomInputs)
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        RatPoly f = random_poly(rng, 8), g = random_poly(rng, 8);
        if (f.is_zero() && g.is_zero()) continue;
        auto r = ext_gcd(f, g);
        EXPECT_EQ(r.u * f + r.v * g, r.d);
        EXPECT_EQ(r.d.leading(), 1);
        if (!f.is_zero()) EXPECT_TRUE(divmod(f, r.d).second.is_zero());
        if (!g.is_zero()) EXPECT_TRUE(divmod(g, r.d).second.is_zero());
    }
}

TEST(RatPoly, CommonFactorIsRecovered)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        RatPoly h = random_poly(rng, 3);
        if (h.degree() < 1) continue;
        RatPoly f = h * random_poly(rng, 4), g = h * random_poly(rng, 4);
        if (f.is_zero() || g.is_zero()) continue;
        EXPECT_TRUE(divmod(gcd(f, g), h.monic()).second.is_zero());
    }
}

TEST(RatPoly, DivmodReconstructs)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        RatPoly a = random_poly(rng, 9), b = random_poly(rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
    EXPECT_THROW(divmod(RatPoly(1), RatPoly()), DomainError);
}

TEST(RatPoly, DiscriminantAndIrreducibility)
{
    RatPoly x = RatPoly::x();
    EXPECT_EQ(discriminant_monic(x * x - 2), 8);
    EXPECT_EQ(discriminant_monic(x * x + 1), -4);
    EXPECT_EQ(discriminant_monic(x * x * x - x - 1), -23);
    EXPECT_EQ(discriminant_monic(2 * x * x - 4), 8);

    EXPECT_TRUE(is_irreducible(x * x - 2));
    EXPECT_TRUE(is_irreducible(x * x + 1));
    EXPECT_TRUE(is_irreducible(x * x * x * x + x * x * x + x * x + x + 1));
    EXPECT_TRUE(is_irreducible(x * x * x * x - 10 * x * x + 1));
    EXPECT_FALSE(is_irreducible(x * x - 1));
    EXPECT_FALSE(is_irreducible(x * x * x * x + 4));
    EXPECT_FALSE(is_irreducible((x * x + 1) * (x * x + 2)));
    EXPECT_FALSE(is_irreducible((x * x + x + 1) * (x * x * x + x + 1)));
    EXPECT_FALSE(is_irreducible(RatPoly(3)));
}

TEST(Laurent, ParseGrammar)
{
    RatLaurent p = parse_laurent("3/2*x^2 - x + 5");
    EXPECT_EQ(p.coeff(2), Rational(3, 2));
    EXPECT_EQ(p.coeff(1), -1);
    EXPECT_EQ(p.coeff(0), 5);
    RatLaurent q = parse_laurent("2*x^-1 + 5*x");
    EXPECT_EQ(q.coeff(-1), 2);
    EXPECT_EQ(q.coeff(1), 5);
    EXPECT_EQ(parse_laurent("x^-1").min_deg(), -1);
    EXPECT_EQ(parse_laurent("x - x"), RatLaurent());
    EXPECT_EQ(parse_laurent(p.to_string()), p);
    EXPECT_THROW(parse_laurent("3**x"), DomainError);
    EXPECT_THROW(parse_laurent("x^"), DomainError);
    EXPECT_THROW(parse_laurent(""), DomainError);
    EXPECT_THROW(parse_poly("x^-2"), DomainError);
}

TEST(Laurent, CalculusAndInversion)
{
    RatLaurent p = parse_laurent("x^-3 + 2*x^2");
    EXPECT_EQ(p.antiderivative().derivative(), p);
    EXPECT_THROW(parse_laurent("x^-1").antiderivative(), DomainError);
    EXPECT_EQ(p.invert_variable(), parse_laurent("x^3 + 2*x^-2"));
    EXPECT_EQ(p.eval(2), Rational(1, 8) + 8);
}

TEST(TruncSeries, InverseAndOrder)
{
    using S = TruncSeries<Rational>;
    S one_minus_z(0, {1, -1}, 10);
    S inv = one_minus_z.inverse();
    for (int k = 0; k < 10; ++k) EXPECT_EQ(inv.coeff(k), 1);
    EXPECT_THROW(inv.coeff(10), OrderError);
    S p = one_minus_z * inv;
    EXPECT_EQ(p.coeff(0), 1);
    for (int k = 1; k < 10; ++k) EXPECT_EQ(p.coeff(k), 0);
    S z2(2, {1}, 8);
    S zinv = z2.inverse();
    EXPECT_EQ(zinv.val(), -2);
    EXPECT_EQ(zinv.order(), 4);
    EXPECT_EQ((zinv * z2).coeff(0), 1);
}

TEST(Complex, ConstantsAndBranches)
{
    const int prec = 30;
    mpfr_prec_t bits = bits_for_digits(prec);
    BigFloat machin = (arctan_inverse(5, bits) * 4 - arctan_inverse(239, bits)) * 4;
    EXPECT_LT(abs(pi_const(prec).real() - machin), tol(-prec, prec));
    EXPECT_EQ(pi_const(prec).real().to_string(30), "3.14159265358979323846264338328e+00");

    ApproxComplex m1(-1, prec);
    ApproxComplex l = log_c(m1, prec);
    EXPECT_LT(abs(l.imag() - BigFloat::pi(bits)), tol(-prec, prec));
    EXPECT_LT(abs(log_c(-m1 * -1, prec).imag() - BigFloat::pi(bits)), tol(-prec, prec));
    EXPECT_THROW(log_c(ApproxComplex(prec), prec), DomainError);

    ApproxComplex z = ApproxComplex::parse("-0.7", "1.3", prec);
    EXPECT_LT(distance(exp_c(log_c(z, prec), prec), z), tol(2 - prec, prec));
    ApproxComplex s = sqrt_c(z, prec);
    EXPECT_LT(distance(s * s, z), tol(2 - prec, prec));
    EXPECT_GE(s.real().sign(), 0);
    EXPECT_THROW(ApproxComplex(5), DomainError);
}

TEST(Complex, MixedPrecisionUsesTheLarger)
{
    ApproxComplex a(1, 20), b(3, 60);
    ApproxComplex c = a / b;
    EXPECT_EQ(c.prec(), 60);
    EXPECT_EQ(c.bits(), bits_for_digits(60));
}

TEST(Agm, KnownValuesAgainstMpfr)
{
    const int prec = 30;
    mpfr_prec_t bits = bits_for_digits(prec);
    BigFloat r2 = sqrt(BigFloat(2, bits));
    BigFloat mine = agm(BigFloat(1, bits), r2, prec);
    BigFloat oracle(bits);
    mpfr_agm(oracle.get(), BigFloat(1, bits).get(), r2.get(), MPFR_RNDN);
    EXPECT_LT(abs(mine - oracle), tol(-prec - 5, prec));
    EXPECT_EQ(mine.to_string(21), "1.19814023473559220744e+00");
    BigFloat w = BigFloat::pi(bits) / agm(r2, BigFloat(1, bits), prec);
    EXPECT_EQ(w.to_string(21), "2.62205755429211981046e+00");
    EXPECT_THROW(agm(BigFloat(-1, bits), r2, prec), DomainError);
    EXPECT_THROW(agm(ApproxComplex::i(prec), ApproxComplex(1, prec), prec), UnsupportedDomainError);
}

TEST(Agm, IterationInvariance)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    const int prec = 40;
    mpfr_prec_t bits = bits_for_digits(prec);
    for (int i = 0; i < 20; ++i) {
        BigFloat a = BigFloat::from_double(u(rng), bits), b = BigFloat::from_double(u(rng), bits);
        BigFloat m = agm(a, b, prec);
        BigFloat m2 = agm((a + b) / 2, sqrt(a * b), prec);
        EXPECT_LT(abs(m - m2), tol(-prec, prec) * m);
        EXPECT_LE(min(a, b), m);
        EXPECT_LE(m, max(a, b));
    }
}

TEST(Quadrature, ExponentialOnHalfLine)
{
    for (int prec : {20, 30, 50}) {
        auto v = quadrature([&](const Abscissa& t) { return ApproxComplex(exp(-t.x), prec); }, Endpoint::at(0),
                            Endpoint::plus_infinity(), prec);
        EXPECT_LT(abs(v.real() - 1), tol(5 - prec, prec)) << prec;
    }
}

TEST(Quadrature, EndpointSingularitiesAndInfiniteRanges)
{
    const int prec = 40;
    mpfr_prec_t bits = bits_for_digits(prec);
    BigFloat pi = BigFloat::pi(bits);
    auto arcsine = quadrature(
        [&](const Abscissa& t) { return ApproxComplex(1 / sqrt(t.to_lower * t.to_upper), prec); }, Endpoint::at(-1),
        Endpoint::at(1), prec);
    EXPECT_LT(abs(arcsine.real() - pi), tol(5 - prec, prec));
    auto cauchy = quadrature([&](const Abscissa& t) { return ApproxComplex(1 / (t.x * t.x + 1), prec); },
                             Endpoint::minus_infinity(), Endpoint::plus_infinity(), prec);
    EXPECT_LT(abs(cauchy.real() - pi), tol(5 - prec, prec));
    auto mirrored = quadrature([&](const Abscissa& t) { return ApproxComplex(exp(t.x), prec); },
                               Endpoint::minus_infinity(), Endpoint::at(0), prec);
    EXPECT_LT(abs(mirrored.real() - 1), tol(5 - prec, prec));
    auto reversed = quadrature([&](const Abscissa& t) { return ApproxComplex(t.x * t.x, prec); }, Endpoint::at(1),
                               Endpoint::at(0), prec);
    EXPECT_LT(abs(reversed.real() + BigFloat(Rational(1, 3), bits)), tol(5 - prec, prec));
}

TEST(Quadrature, Linearity)
{
    const int prec = 30;
    mpfr_prec_t bits = bits_for_digits(prec);
    Quadrature q(prec);
    BigFloat c = BigFloat::from_double(2.75, bits);
    auto f = [&](const Abscissa& t) { return ApproxComplex(cos(t.x) / (t.x + 2), prec); };
    auto g = [&](const Abscissa& t) { return ApproxComplex(sqrt(t.to_lower), log1p(t.x), prec); };
    auto fg = [&](const Abscissa& t) { return f(t) + g(t) * c; };
    ApproxComplex lhs = q.integrate(fg, Endpoint::at(0), Endpoint::at(3));
    ApproxComplex rhs = q.integrate(f, Endpoint::at(0), Endpoint::at(3)) + q.integrate(g, Endpoint::at(0), Endpoint::at(3)) * c;
    EXPECT_LT(distance(lhs, rhs), tol(3 - prec, prec));
}

TEST(Quadrature, DivergenceIsReported)
{
    const int prec = 20;
    auto bad = [&](const Abscissa& t) { return ApproxComplex(sin(1 / t.to_lower) / t.to_lower, prec); };
    EXPECT_THROW(quadrature(bad, Endpoint::at(0), Endpoint::at(1), prec), NumericError);
}

TEST(Roots, ReconstructionAndMultiplicity)
{
    const int prec = 30;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ApproxComplex> roots_in;
        int deg = 2 + trial % 5;
        for (int k = 0; k < deg; ++k)
            roots_in.push_back(ApproxComplex(BigFloat::from_double(u(rng), 100), BigFloat::from_double(u(rng), 100), prec));
        std::vector<ApproxComplex> c{ApproxComplex(1, prec)};
        for (const auto& r : roots_in) {
            std::vector<ApproxComplex> next(c.size() + 1, ApproxComplex(prec));
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= c[i] * r;
            }
            c = next;
        }
        auto found = poly_roots(c, prec);
        ASSERT_EQ(found.size(), roots_in.size());
        for (const auto& r : roots_in) {
            BigFloat best = distance(r, found[0]);
            for (const auto& f : found) best = min(best, distance(r, f));
            EXPECT_LT(best, tol(5 - prec, prec));
        }
    }
    std::vector<ApproxComplex> x2p1{ApproxComplex(1, prec), ApproxComplex(prec), ApproxComplex(1, prec)};
    auto r = poly_roots(x2p1, prec);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_LT(abs(abs(r[0].imag()) - 1), tol(5 - prec, prec));
    std::vector<ApproxComplex> sq{ApproxComplex(1, prec), ApproxComplex(-2, prec), ApproxComplex(1, prec)};
    EXPECT_EQ(poly_roots(sq, prec).size(), 2u);
}
