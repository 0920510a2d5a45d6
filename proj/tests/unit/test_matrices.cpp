#include "periods/matrices/named.hpp"
#include "periods/numkernel/errors.hpp"

#include "../support/printers.hpp"

#include <gtest/gtest.h>

using namespace periods;
using namespace periods::matrices;

namespace {

BigFloat tol(long e, int prec) { return BigFloat::pow10(e, bits_for_digits(prec)); }

BigFloat pi_at(int prec) { return BigFloat::pi(bits_for_digits(prec)); }

BigFloat mpfr_gamma_of(const Rational& s, int prec)
{
    BigFloat x(s, bits_for_digits(prec)), r(bits_for_digits(prec));
    mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
    return r;
}

RatPoly poly(std::vector<long> c)
{
    std::vector<Rational> q(c.begin(), c.end());
    return RatPoly(std::move(q));
}

} // namespace

TEST(Vandermonde, QuadraticDiscriminants)
{
    const int prec = 30;
    auto m = vandermonde_matrix(poly({-2, 0, 1}), prec);
    ASSERT_EQ(m.rows(), 2u);
    ApproxComplex det = determinant(m);
    // roots sorted as -sqrt2, sqrt2
    BigFloat two_sqrt2 = sqrt(BigFloat(8, bits_for_digits(prec)));
    EXPECT_LT(distance(det, ApproxComplex(two_sqrt2, prec)), tol(-prec + 2, prec));
    EXPECT_LT(distance(det * det, ApproxComplex(8, prec)), tol(-prec + 2, prec));
    EXPECT_LT(m.diagnostic("disc_defect"), tol(-prec, prec));

    auto g = vandermonde_matrix(poly({1, 0, 1}), prec);
    ApproxComplex dg = determinant(g);
    EXPECT_LT(distance(dg * dg, ApproxComplex(-4, prec)), tol(-prec + 2, prec));
}

TEST(Vandermonde, CubicAndDegreeOne)
{
    const int prec = 25;
    // disc(x^3 + p x + q) = -4p^3 - 27q^2
    auto m = vandermonde_matrix(poly({-2, 0, 0, 1}), prec);
    ApproxComplex det = determinant(m);
    EXPECT_LT(distance(det * det, ApproxComplex(-108, prec)), tol(-prec + 4, prec));

    auto one = vandermonde_matrix(poly({-3, 5}), prec);
    ASSERT_EQ(one.rows(), 1u);
    EXPECT_LT(distance(one.at(0, 0), ApproxComplex(1, prec)), tol(-prec, prec));
}

TEST(Vandermonde, SortedRootsAndInvertible)
{
    const int prec = 30;
    auto m = vandermonde_matrix(poly({1, 1, 1, 1, 1}), prec); // 5th cyclotomic
    for (std::size_t i = 1; i < m.rows(); ++i) EXPECT_LE(m.at(i - 1, 1).real(), m.at(i, 1).real() + tol(-prec / 2, prec));
    EXPECT_GT(determinant(m).abs(), tol(-prec / 2, prec));
    EXPECT_LT(m.diagnostic("disc_defect"), tol(-prec + 3, prec));
}

TEST(Vandermonde, Rejects)
{
    EXPECT_THROW(vandermonde_matrix(poly({-1, 0, 1}), 20), DomainError);
    EXPECT_THROW(vandermonde_matrix(poly({7}), 20), DomainError);
    EXPECT_THROW(vandermonde_matrix(poly({1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), 20), DomainError);
}

TEST(LogMatrix, LogTwo)
{
    const int prec = 40;
    auto m = log_period_matrix(Rational(2), prec);
    // log 2 = sum_{k>=1} 1/(k 2^k), tail after K below 2^-K
    Rational s = 0;
    mpz_class p = 1;
    for (long k = 1; k <= 160; ++k) {
        p *= 2;
        s += Rational(1) / (Rational(p) * k);
    }
    EXPECT_LT(distance(m.at(0, 1), ApproxComplex(s, prec)), tol(-prec, prec));
    EXPECT_EQ(m.at(0, 1).to_string(21), "6.93147180559945309417e-01 + 0.00000000000000000000e+00*i");
    EXPECT_TRUE(m.at(1, 0).is_zero());
    EXPECT_LT(distance(m.at(1, 1), two_pi_i(prec)), tol(-prec, prec));
    EXPECT_LT(m.diagnostic("log_quadrature_defect"), tol(-prec + 2, prec));
    EXPECT_LT(m.diagnostic("monodromy_defect"), tol(-prec + 2, prec));
}

TEST(LogMatrix, WindingPathPicksUpMonodromy)
{
    const int prec = 25;
    const Rational q(7, 3);
    ApproxComplex logq(log(BigFloat(q, bits_for_digits(prec))), prec);
    for (long n : {-1L, 0L, 2L}) {
        ApproxComplex v = log_along_winding_path(q, n, prec);
        EXPECT_LT(distance(v, logq + two_pi_i(prec) * n), tol(-prec + 2, prec)) << n;
    }
    EXPECT_THROW(log_period_matrix(Rational(1), 20), DomainError);
    EXPECT_THROW(log_period_matrix(Rational(1, 2), 20), DomainError);
}

TEST(DilogMatrix, HalfClosedForm)
{
    const int prec = 20;
    auto m = dilog_period_matrix(Rational(1, 2), prec);
    const mpfr_prec_t bits = bits_for_digits(prec);
    BigFloat l2 = log(BigFloat(2, bits));
    BigFloat pi = pi_at(prec);
    BigFloat li2 = pi * pi / 12 - l2 * l2 / 2;
    EXPECT_LT(distance(m.at(0, 2), ApproxComplex(li2, prec)), tol(-prec, prec));
    EXPECT_EQ(m.at(0, 2).real().to_string(21), "5.82240526465012505903e-01");
    EXPECT_LT(distance(m.at(0, 1), ApproxComplex(l2, prec)), tol(-prec, prec));
    // det = (2 pi i)^3 = -8 pi^3 i
    ApproxComplex expected(BigFloat(0, bits), -8 * pi * pi * pi, prec);
    EXPECT_LT(distance(determinant(m), expected), tol(-prec + 3, prec));
    EXPECT_LT(m.diagnostic("li2_quadrature_defect"), tol(5 - prec, prec));
    EXPECT_LT(m.diagnostic("entry12_quadrature_defect"), tol(5 - prec, prec));
}

TEST(DilogMatrix, SeriesAgainstSquareIntegral)
{
    const int prec = 15;
    for (auto a : {Rational(1, 5), Rational(3, 4)}) {
        ApproxComplex s = dilog_series(ApproxComplex(a, prec), prec);
        EXPECT_LT(distance(s, dilog_square_integral(a, prec)), tol(4 - prec, prec));
    }
    EXPECT_THROW(dilog_period_matrix(Rational(0), 15), DomainError);
    EXPECT_THROW(dilog_period_matrix(Rational(1), 15), DomainError);
    EXPECT_THROW(dilog_period_matrix(Rational(1, 2), kDilogMaxPrec + 1), DomainError);
    EXPECT_THROW(dilog_series(ApproxComplex(1, 15), 15), DomainError);
}

TEST(EllipticMatrix, LegendreImprovesWithPrecision)
{
    // Both defects sit at the rounding floor of the working precision (often
    // exactly 0), so the comparison is on the guaranteed envelope.
    for (auto [a, b] : {std::pair{4L, 0L}, std::pair{8L, 1L}}) {
        derham::EllipticCurveQ E{Rational(a), Rational(b)};
        auto lo = elliptic_period_matrix(E, 30);
        auto hi = elliptic_period_matrix(E, 50);
        BigFloat env_lo = tol(-30 - kGuardDigits / 2, 50), env_hi = tol(-50 - kGuardDigits / 2, 50);
        EXPECT_LT(lo.diagnostic("legendre_defect"), env_lo) << a;
        EXPECT_LT(hi.diagnostic("legendre_defect"), env_hi) << a;
        EXPECT_LT(distance(determinant(hi), two_pi_i(50)), tol(-45, 50));
        // omega1 real, omega2 purely imaginary for three real roots
        EXPECT_LT(abs(hi.at(0, 0).imag()), tol(-45, 50));
        EXPECT_LT(abs(hi.at(1, 0).real()), tol(-45, 50));
    }
}

TEST(GammaTwisted, NEqualsTwo)
{
    const int prec = 30;
    auto m = gamma_twisted_matrix(2, prec);
    ASSERT_EQ(m.rows(), 1u);
    ApproxComplex expected(-sqrt(pi_at(prec)), prec);
    EXPECT_LT(distance(m.at(0, 0), expected), tol(-prec, prec));
    EXPECT_LT(m.diagnostic("det_formula_defect"), tol(-prec + 2, prec));
}

TEST(GammaTwisted, DeterminantModulus)
{
    const int prec = 30;
    const mpfr_prec_t bits = bits_for_digits(prec);
    for (int n : {3, 4, 5}) {
        auto m = gamma_twisted_matrix(n, prec);
        EXPECT_LT(m.diagnostic("det_formula_defect"), tol(-prec + 3, prec)) << n;
        // |prod_{i<j}(zeta^j - zeta^i)| = n^(n/2), and prod Gamma(j/n) from MPFR
        BigFloat gp(1, bits);
        for (int j = 1; j < n; ++j) gp *= mpfr_gamma_of(frac(j, n), prec);
        BigFloat nn(n, bits);
        BigFloat twopi = 2 * pi_at(prec);
        BigFloat via_formula = pow(nn, BigFloat(frac(1 - 2 * n, 2), bits)) * pow(twopi, BigFloat(frac(n - 1, 2), bits)) *
                               pow(nn, BigFloat(frac(n, 2), bits));
        // Gauss multiplication: prod Gamma(j/n) = (2 pi)^((n-1)/2) n^(-1/2)
        EXPECT_LT(abs(gp - pow(twopi, BigFloat(frac(n - 1, 2), bits)) / sqrt(nn)), tol(-prec + 2, prec));
        EXPECT_LT(abs(determinant(m).abs() - via_formula), tol(-prec + 3, prec)) << n;
        EXPECT_LT(abs(gamma_twisted_det_formula(n, prec).abs() - via_formula), tol(-prec + 3, prec)) << n;
    }
    EXPECT_THROW(gamma_twisted_matrix(1, 20), DomainError);
    EXPECT_THROW(gamma_twisted_matrix(9, 20), DomainError);
}

TEST(BesselMatrix, DeterminantAndWronskian)
{
    const int prec = 30;
    auto m = bessel_period_matrix(prec);
    EXPECT_LT(m.diagnostic("det_defect"), tol(-prec + 3, prec));
    EXPECT_LT(m.diagnostic("wronskian_defect"), tol(-prec + 3, prec));
    ApproxComplex i0 = m.at(0, 0) / two_pi_i(prec);
    EXPECT_EQ(i0.real().to_string(21), "2.27958530233606726744e+00");
    // K0(2) > 0 and K0 is decreasing
    EXPECT_GT(m.at(1, 0).real(), 0);
    EXPECT_GT(m.at(1, 1).real(), 0);
}

TEST(Fermat, Kinds)
{
    const int prec = 30;
    const mpfr_prec_t bits = bits_for_digits(prec);
    auto f = fermat_period(3, 1, 1, prec);
    EXPECT_EQ(f.kind, FermatKind::first);
    // (1 - w)^2/3 B(1/3, 1/3), w = e^(2 pi i/3), (1 - w)^2 = -3w
    BigFloat g = mpfr_gamma_of(frac(1, 3), prec);
    BigFloat b = g * g / mpfr_gamma_of(frac(2, 3), prec);
    ApproxComplex w(BigFloat(frac(-1, 2), bits), sqrt(BigFloat(3, bits)) / 2, prec);
    EXPECT_LT(distance(f.value, -(w * b)), tol(-prec + 2, prec));
    EXPECT_TRUE(f.third_kind_defect.is_zero());

    EXPECT_EQ(fermat_period(3, 2, 2, prec).kind, FermatKind::second);

    auto two = fermat_period(2, 1, 1, prec);
    EXPECT_EQ(two.kind, FermatKind::third);
    EXPECT_LT(distance(two.value, ApproxComplex(2 * pi_at(prec), prec)), tol(-prec + 2, prec));
    EXPECT_LT(two.third_kind_defect, tol(-prec + 2, prec));

    auto four = fermat_period(4, 1, 3, prec);
    EXPECT_EQ(four.kind, FermatKind::third);
    EXPECT_LT(distance(four.value, ApproxComplex(pi_at(prec) / sqrt(BigFloat(2, bits)), prec)), tol(-prec + 2, prec));
    EXPECT_LT(four.third_kind_defect, tol(-prec + 2, prec));

    EXPECT_THROW(fermat_period(3, 0, 1, 20), DomainError);
    EXPECT_THROW(fermat_period(3, 1, 3, 20), DomainError);
    EXPECT_THROW(fermat_period(1, 1, 1, 20), DomainError);
}

TEST(PeriodMatrixApi, DeterminantRejectsNonSquare)
{
    PeriodMatrix m;
    m.entries = {{ApproxComplex(1, 15), ApproxComplex(2, 15)}};
    EXPECT_THROW(determinant(m), DomainError);
    EXPECT_THROW(m.diagnostic("nope"), std::out_of_range);
}
