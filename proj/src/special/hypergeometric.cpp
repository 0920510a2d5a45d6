#include "periods/special/hypergeometric.hpp"

#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/quadrature.hpp"
#include "periods/special/gamma.hpp"

namespace periods::special {

namespace {

constexpr int kExtra = 5;
constexpr long kMaxTerms = 20000000;

bool nonpositive_integer(const Rational& q) { return q <= 0 && q.get_den() == 1; }

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

long as_long(const Integer& v)
{
    if (!v.fits_slong_p()) throw DomainError("2F1 parameters are too large");
    return v.get_si();
}

// Term ratio (a+n)(b+n)/((c+n)(n+1)) z, with a, b, c over a common
// denominator D so that each step is four multiplications by machine
// integers. The tail bound is tested every kTailStride terms.
ApproxComplex hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, const ApproxComplex& z,
                            int prec)
{
    constexpr long kTailStride = 16;
    const mpfr_prec_t bits = bits_for_digits(prec);
    const BigFloat absz = z.abs();
    const Rational aa = abs_q(a), ab = abs_q(b), ac = abs_q(c);
    const BigFloat eps = BigFloat::pow10(-(prec + kGuardDigits), bits);

    Integer d;
    mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    const long D = as_long(d);
    const long A = as_long(Integer(a * D)), B = as_long(Integer(b * D)), C = as_long(Integer(c * D));
    const bool real = z.imag().is_zero();
    const BigFloat& x = z.real();

    BigFloat rterm(1, bits), rsum(1, bits);
    ApproxComplex term(1, prec), sum(1, prec);
    for (long n = 0; n < kMaxTerms; ++n) {
        BigFloat f(1, bits);
        BigFloat& t = real ? rterm : f;
        t *= A + n * D;
        t *= B + n * D;
        t /= C + n * D;
        t /= (n + 1) * D;
        if (real) {
            rterm *= x;
            if (rterm.is_zero()) return ApproxComplex(rsum, prec); // a or b is a non-positive integer
            rsum += rterm;
        } else {
            term *= z * f;
            if (term.is_zero()) return sum;
            sum += term;
        }

        // For m > n+1 every ratio is at most rho, so the rest is below |term| rho/(1-rho).
        const long m = n + 1;
        if (m % kTailStride != 0 || m <= ac + 1) continue;
        BigFloat first(Rational((m + aa) / (m + 1)), bits);
        if (first < 1) first = BigFloat(1, bits);
        BigFloat rho = absz * first * BigFloat(Rational((m + ab) / (m - ac)), bits);
        if (rho >= 1) continue;
        const BigFloat tabs = real ? abs(rterm) : term.abs();
        BigFloat scale = max(BigFloat(1, bits), real ? abs(rsum) : sum.abs());
        if (tabs * rho / (1 - rho) < eps * scale) return real ? ApproxComplex(rsum, prec) : sum;
    }
    throw NumericError("2F1 series did not reach its tail bound", (real ? ApproxComplex(rsum, prec) : sum).to_string(prec), "");
}

ApproxComplex hyp2f1_euler(const Rational& a, const Rational& b, const Rational& c, const ApproxComplex& z, int prec)
{
    // F = Gamma(c)/(Gamma(p) Gamma(c-p)) int_0^1 t^(p-1) (1-t)^(c-p-1) (1-zt)^-q dt
    Rational p, q;
    if (c > a && a > 0) {
        p = a;
        q = b;
    } else if (c > b && b > 0) {
        p = b;
        q = a;
    } else {
        throw DomainError("the Euler integral for 2F1 needs c > a > 0");
    }
    const mpfr_prec_t bits = bits_for_digits(prec);
    const BigFloat pm1(Rational(p - 1), bits), cpm1(Rational(c - p - 1), bits), mq(Rational(-q), bits);
    const ApproxComplex one_minus_z = ApproxComplex(1, prec) - z;
    Quadrature quad(prec);
    auto f = [&](const Abscissa& t) {
        BigFloat e = pm1 * log(t.to_lower);
        if (!cpm1.is_zero()) e += cpm1 * log(t.to_upper);
        // 1 - z t, rewritten as (1 - z) + z (1 - t) near t = 1.
        ApproxComplex w = t.to_upper < BigFloat(1, bits) / 2 ? one_minus_z + z * t.to_upper
                                                             : ApproxComplex(1, prec) - z * t.to_lower;
        return exp_c(ApproxComplex(e, prec) + log_c(w, prec) * mq, prec);
    };
    ApproxComplex integral = quad.integrate(f, Endpoint::at(0), Endpoint::at(1));
    ApproxComplex norm = gamma_fn(ApproxComplex(c, prec), prec) /
                         (gamma_fn(ApproxComplex(p, prec), prec) * gamma_fn(ApproxComplex(Rational(c - p), prec), prec));
    return norm * integral;
}

} // namespace

ApproxComplex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const ApproxComplex& z, int prec,
                     Hyp2F1Method method)
{
    if (nonpositive_integer(c)) throw DomainError("2F1 needs c outside the non-positive integers");
    if (z.abs() >= 1) throw DomainError("2F1 is only summed inside the unit disk");
    const int wp = prec + kExtra;
    const ApproxComplex zz = z.at_prec(wp);
    ApproxComplex r = method == Hyp2F1Method::series ? hyp2f1_series(a, b, c, zz, wp) : hyp2f1_euler(a, b, c, zz, wp);
    return r.at_prec(prec);
}

ApproxComplex bessel(BesselKind which, const ApproxComplex& z_in, int prec)
{
    if (!z_in.imag().is_zero() || z_in.real() <= 0) throw DomainError("Bessel functions are evaluated at real z > 0");
    const int wp = prec + kExtra;
    const mpfr_prec_t bits = bits_for_digits(wp);
    const BigFloat z = z_in.real().with_bits(bits);
    const BigFloat half = z / 2;

    if (which == BesselKind::I0 || which == BesselKind::I0_prime) {
        // I0 = sum (z/2)^2n / (n!)^2, I0' = I1 = sum (z/2)^(2n+1) / (n! (n+1)!)
        const bool prime = which == BesselKind::I0_prime;
        const BigFloat h2 = half * half;
        BigFloat term = prime ? half : BigFloat(1, bits);
        BigFloat sum = term;
        const BigFloat eps = BigFloat::pow10(-(wp + kGuardDigits), bits);
        for (long n = 0;; ++n) {
            term = term * h2 / ((n + 1) * (prime ? n + 2 : n + 1));
            sum += term;
            if (n > z && term < eps * sum) break;
        }
        return ApproxComplex(sum, prec);
    }

    // K0 = 1/2 int_0^inf e^(-(z/2)(x + 1/x)) dx/x, K0' = -1/2 int_0^inf e^(-(z/2)(x + 1/x)) dx
    const bool prime = which == BesselKind::K0_prime;
    Quadrature quad(wp);
    auto f = [&](const Abscissa& t) {
        const BigFloat& x = t.to_lower;
        BigFloat v = exp(-(half * (x + 1 / x)));
        if (!prime) v /= x;
        return ApproxComplex(v, wp);
    };
    ApproxComplex r = quad.integrate(f, Endpoint::at(0), Endpoint::plus_infinity()) / 2;
    return (prime ? -r : r).at_prec(prec);
}

} // namespace periods::special
