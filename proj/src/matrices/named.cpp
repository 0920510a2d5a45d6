#include "periods/matrices/named.hpp"

#include "periods/numkernel/agm.hpp"
#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/quadrature.hpp"
#include "periods/special/gamma.hpp"
#include "periods/special/hypergeometric.hpp"
#include "periods/special/weierstrass.hpp"

#include <algorithm>

namespace periods::matrices {

namespace {

constexpr int kExtra = 5;

ApproxComplex zero(int prec) { return ApproxComplex(prec); }

// e^(2 pi i k/n)
ApproxComplex root_of_unity(long k, long n, int prec)
{
    long r = ((k % n) + n) % n;
    return exp_c(two_pi_i(prec) * ApproxComplex(frac(r, n), prec), prec);
}

PeriodMatrix finish(PeriodMatrix m, int prec)
{
    for (auto& row : m.entries)
        for (auto& e : row) e = e.at_prec(prec);
    m.prec = prec;
    return m;
}

} // namespace

PeriodMatrix vandermonde_matrix(const RatPoly& f, int prec)
{
    const int d = f.degree();
    if (d < 1 || d > 8) throw DomainError("vandermonde_matrix needs 1 <= deg f <= 8");
    if (!is_irreducible(f)) throw DomainError("vandermonde_matrix needs an irreducible polynomial");
    const int wp = prec + kExtra;

    std::vector<ApproxComplex> roots;
    if (d == 1) {
        roots.emplace_back(Rational(-f.coeff(0) / f.coeff(1)), wp);
    } else {
        std::vector<ApproxComplex> c;
        for (int k = 0; k <= d; ++k) c.emplace_back(f.coeff(k), wp);
        roots = poly_roots(c, wp);
    }
    // Sort by real part, then imaginary part; real parts closer than
    // 10^(-prec/2) count as equal so conjugate pairs order deterministically.
    const BigFloat close = BigFloat::pow10(-prec / 2, bits_for_digits(wp));
    std::sort(roots.begin(), roots.end(), [&](const ApproxComplex& a, const ApproxComplex& b) {
        if (abs(a.real() - b.real()) > close) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    PeriodMatrix m;
    m.name = "vandermonde";
    for (int i = 0; i < d; ++i) {
        m.row_labels.push_back("sigma_" + std::to_string(i + 1));
        std::vector<ApproxComplex> row;
        ApproxComplex p(1, wp);
        for (int j = 0; j < d; ++j) {
            row.push_back(p);
            p *= roots[static_cast<std::size_t>(i)];
        }
        m.entries.push_back(std::move(row));
    }
    for (int j = 0; j < d; ++j) m.col_labels.push_back(j == 0 ? "1" : j == 1 ? "x" : "x^" + std::to_string(j));
    ApproxComplex det = determinant(m.entries, wp);
    m.diagnostics.push_back({"disc_defect", distance(det * det, ApproxComplex(discriminant_monic(f), wp))});
    return finish(std::move(m), prec);
}

ApproxComplex log_along_winding_path(const Rational& q, long n, int prec)
{
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat qm1(Rational(q - 1), bits);
    const ApproxComplex spin = two_pi_i(wp) * n;
    Quadrature quad(wp);
    auto f = [&](const Abscissa& t) {
        // gamma(t) = (1 + t(q-1)) e^(2 pi i n t), integrand gamma'/gamma
        ApproxComplex rot = exp_c(spin * t.x, wp);
        ApproxComplex g = rot * (1 + t.x * qm1);
        ApproxComplex dg = rot * qm1 + g * spin;
        return dg / g;
    };
    return quad.integrate(f, Endpoint::at(0), Endpoint::at(1)).at_prec(prec);
}

PeriodMatrix log_period_matrix(const Rational& q, int prec)
{
    if (q <= 1) throw DomainError("log_period_matrix needs q > 1");
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat bq(q, bits);
    const ApproxComplex logq(log(bq), wp);

    PeriodMatrix m;
    m.name = "log";
    m.row_labels = {"sigma0", "sigma1"};
    m.col_labels = {"dx/(q-1)", "dx/x"};
    m.entries = {{ApproxComplex(1, wp), logq}, {zero(wp), two_pi_i(wp)}};

    ApproxComplex quad = quadrature(
        [&](const Abscissa& x) { return ApproxComplex(1 / x.x, wp); }, Endpoint::at(1), Endpoint::at(bq), wp);
    m.diagnostics.push_back({"log_quadrature_defect", distance(quad, logq)});
    // [gamma] = [sigma0] + [sigma1] for a path winding once
    ApproxComplex paired = m.entries[0][1] + m.entries[1][1];
    m.diagnostics.push_back({"monodromy_defect", distance(log_along_winding_path(q, 1, wp), paired)});
    return finish(std::move(m), prec);
}

ApproxComplex dilog_series(const ApproxComplex& z_in, int prec)
{
    const int wp = prec + kExtra;
    const ApproxComplex z = z_in.at_prec(wp);
    const BigFloat az = z.abs();
    if (az >= 1) throw DomainError("dilog_series needs |z| < 1");
    const BigFloat eps = BigFloat::pow10(-(wp + kGuardDigits), bits_for_digits(wp));
    ApproxComplex zn(1, wp), sum(wp);
    for (long n = 1;; ++n) {
        zn *= z;
        sum += zn / (n * n);
        // tail after n: |z|^(n+1) / ((n+1)^2 (1 - |z|))
        if (zn.abs() * az / ((1 - az) * ((n + 1) * (n + 1))) < eps) break;
    }
    return sum.at_prec(prec);
}

namespace {

// int_0^1 int_0^1 alpha / (1 - alpha x y)^power dx dy, iterated.
ApproxComplex square_integral(const Rational& alpha, int power, int prec)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    const BigFloat a(alpha, bits);
    Quadrature inner(prec), outer(prec);
    auto row = [&](const BigFloat& y) {
        return inner.integrate(
            [&](const Abscissa& x) {
                BigFloat den = 1 - a * x.x * y;
                return ApproxComplex(power == 1 ? a / den : a / (den * den), prec);
            },
            Endpoint::at(0), Endpoint::at(1));
    };
    return outer.integrate([&](const Abscissa& y) { return row(y.x); }, Endpoint::at(0), Endpoint::at(1));
}

} // namespace

ApproxComplex dilog_square_integral(const Rational& alpha, int prec)
{
    return square_integral(alpha, 1, prec + kExtra).at_prec(prec);
}

PeriodMatrix dilog_period_matrix(const Rational& alpha, int prec)
{
    if (alpha <= 0 || alpha >= 1) throw DomainError("dilog_period_matrix needs 0 < alpha < 1");
    if (prec > kDilogMaxPrec) throw DomainError("dilog_period_matrix is capped at 25 digits");
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat a(alpha, bits);
    const ApproxComplex tpi = two_pi_i(wp);
    const ApproxComplex li2 = dilog_series(ApproxComplex(alpha, wp), wp);
    const ApproxComplex e12(-log1p(-a), wp);

    PeriodMatrix m;
    m.name = "dilog";
    m.row_labels = {"[0,1]^2", "sigma", "T"};
    m.col_labels = {"dx^dy", "alpha dx^dy/(1-alpha xy)^2", "alpha dx^dy/(1-alpha xy)"};
    m.entries = {{ApproxComplex(1, wp), e12, li2},
                 {zero(wp), tpi, tpi * log(a)},
                 {zero(wp), zero(wp), tpi * tpi}};
    // The quadratures only need the capped precision; they run at prec.
    m.diagnostics.push_back({"li2_quadrature_defect", distance(square_integral(alpha, 1, prec), li2)});
    m.diagnostics.push_back({"entry12_quadrature_defect", distance(square_integral(alpha, 2, prec), e12)});
    return finish(std::move(m), prec);
}

PeriodMatrix elliptic_period_matrix(const derham::EllipticCurveQ& E, int prec)
{
    const int wp = prec + kExtra;
    const special::EllipticPeriodData d = special::elliptic_periods(E, wp);
    PeriodMatrix m;
    m.name = "elliptic";
    m.row_labels = {"sigma1", "sigma2"};
    m.col_labels = {"dx/y", "x dx/y"};
    m.entries = {{d.lattice.omega1, d.eta1}, {d.lattice.omega2, d.eta2}};
    ApproxComplex legendre = d.lattice.omega1 * d.eta2 - d.lattice.omega2 * d.eta1;
    m.diagnostics.push_back({"legendre_defect", distance(legendre, two_pi_i(wp))});
    return finish(std::move(m), prec);
}

ApproxComplex gamma_twisted_det_formula(int n, int prec)
{
    if (n < 2 || n > 8) throw DomainError("gamma_twisted_matrix needs 2 <= n <= 8");
    const int wp = prec + kExtra;
    ApproxComplex v(1, wp);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v *= root_of_unity(j, n, wp) - root_of_unity(i, n, wp);
    ApproxComplex nn(n, wp);
    ApproxComplex c = pow_c(nn, ApproxComplex(frac(1 - 2 * n, 2), wp), wp) *
                      pow_c(pi_const(wp) * 2, ApproxComplex(frac(n - 1, 2), wp), wp);
    return (c * v).at_prec(prec);
}

PeriodMatrix gamma_twisted_matrix(int n, int prec)
{
    if (n < 2 || n > 8) throw DomainError("gamma_twisted_matrix needs 2 <= n <= 8");
    const int wp = prec + kExtra;
    std::vector<ApproxComplex> g;
    for (int j = 1; j < n; ++j) g.push_back(special::gamma_fn(ApproxComplex(frac(j, n), wp), wp));
    PeriodMatrix m;
    m.name = "gamma_twisted_" + std::to_string(n);
    for (int i = 1; i < n; ++i) {
        m.row_labels.push_back("sigma_" + std::to_string(i));
        std::vector<ApproxComplex> row;
        for (int j = 1; j < n; ++j)
            row.push_back((root_of_unity(static_cast<long>(i) * j, n, wp) - 1) / n * g[static_cast<std::size_t>(j - 1)]);
        m.entries.push_back(std::move(row));
    }
    for (int j = 1; j < n; ++j) m.col_labels.push_back(j == 1 ? "dx" : j == 2 ? "x dx" : "x^" + std::to_string(j - 1) + " dx");
    ApproxComplex det = determinant(m.entries, wp);
    m.diagnostics.push_back({"det_formula_defect", distance(det, gamma_twisted_det_formula(n, wp))});
    return finish(std::move(m), prec);
}

PeriodMatrix bessel_period_matrix(int prec)
{
    using special::BesselKind;
    const int wp = prec + kExtra;
    const ApproxComplex two(2, wp);
    const ApproxComplex tpi = two_pi_i(wp);
    const ApproxComplex i0 = special::bessel(BesselKind::I0, two, wp);
    const ApproxComplex i1 = special::bessel(BesselKind::I0_prime, two, wp);
    const ApproxComplex k0 = special::bessel(BesselKind::K0, two, wp);
    const ApproxComplex k1 = special::bessel(BesselKind::K0_prime, two, wp);
    PeriodMatrix m;
    m.name = "bessel";
    m.row_labels = {"sigma", "R>0"};
    m.col_labels = {"dx/x", "dx"};
    m.entries = {{tpi * i0, -(tpi * i1)}, {k0 * 2, -(k1 * 2)}};
    m.diagnostics.push_back({"det_defect", distance(determinant(m.entries, wp), tpi)});
    m.diagnostics.push_back({"wronskian_defect", distance(i0 * k1 - i1 * k0, ApproxComplex(frac(-1, 2), wp))});
    return finish(std::move(m), prec);
}

const char* to_string(FermatKind k)
{
    switch (k) {
    case FermatKind::first:
        return "first";
    case FermatKind::second:
        return "second";
    case FermatKind::third:
    default:
        return "third";
    }
}

FermatPeriod fermat_period(int d, int r, int s, int prec)
{
    if (d < 2 || r < 1 || s < 1 || r > d - 1 || s > d - 1)
        throw DomainError("fermat_period needs d >= 2 and 1 <= r, s <= d - 1");
    const int wp = prec + kExtra;
    const ApproxComplex one(1, wp);
    ApproxComplex value = (one - root_of_unity(r, d, wp)) * (one - root_of_unity(s, d, wp)) / d *
                          special::beta_fn(ApproxComplex(frac(r, d), wp), ApproxComplex(frac(s, d), wp), wp);
    FermatPeriod out{value.at_prec(prec), r + s < d ? FermatKind::first : r + s > d ? FermatKind::second : FermatKind::third,
                     BigFloat(bits_for_digits(prec))};
    if (out.kind == FermatKind::third) {
        // xi = e^(pi i/d) = e^(2 pi i/(2d))
        ApproxComplex alt = -((root_of_unity(r, 2 * d, wp) + root_of_unity(s, 2 * d, wp)) / d * two_pi_i(wp));
        out.third_kind_defect = distance(value, alt);
    }
    return out;
}

} // namespace periods::matrices
