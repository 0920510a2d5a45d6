#include "periods/numkernel/bigfloat.hpp"

#include "periods/numkernel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace periods {

mpfr_prec_t bits_for_digits(int digits)
{
    // log2(10) = 3.3219...
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * 3.3219280948873623)) + 8;
}

int digits_for_bits(mpfr_prec_t bits)
{
    return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
}

BigFloat::BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(long value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_double(double value, mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t bits)
{
    BigFloat r(bits);
    if (text.empty() || mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw DomainError("not a decimal number: '" + text + "'");
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::infinity(int sign, mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_set_inf(r.v_, sign < 0 ? -1 : 1);
    return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t bits)
{
    BigFloat r(bits);
    mpfr_set_ui(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_bits(mpfr_prec_t bits) const
{
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Rational BigFloat::to_rational() const
{
    if (!is_finite())
        throw DomainError("to_rational of a non-finite value");
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rational q(m);
    if (e >= 0)
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    q.canonicalize();
    return q;
}

std::string BigFloat::to_string(int digits) const
{
    if (is_nan()) return "nan";
    if (is_inf()) return sign() < 0 ? "-inf" : "inf";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

long BigFloat::decimal_exponent() const
{
    if (is_zero() || !is_finite()) return -1000000000L;
    BigFloat a = abs(*this).with_bits(64);
    mpfr_log10(a.v_, a.v_, MPFR_RNDD);
    return static_cast<long>(std::floor(mpfr_get_d(a.v_, MPFR_RNDD)));
}

BigFloat& BigFloat::operator+=(const BigFloat& o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o)
{
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

BigFloat BigFloat::operator-() const
{
    BigFloat r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

using Binary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigFloat apply(Binary f, const BigFloat& a, const BigFloat& b)
{
    BigFloat r(std::max(a.bits(), b.bits()));
    f(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat apply(Unary f, const BigFloat& a)
{
    BigFloat r(a.bits());
    f(r.get(), a.get(), MPFR_RNDN);
    return r;
}

} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return apply(mpfr_add, a, b); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return apply(mpfr_sub, a, b); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return apply(mpfr_mul, a, b); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return apply(mpfr_div, a, b); }

BigFloat operator+(const BigFloat& a, long b) { BigFloat r(a); r += b; return r; }
BigFloat operator-(const BigFloat& a, long b) { BigFloat r(a); r -= b; return r; }
BigFloat operator*(const BigFloat& a, long b) { BigFloat r(a); r *= b; return r; }
BigFloat operator/(const BigFloat& a, long b) { BigFloat r(a); r /= b; return r; }
BigFloat operator+(long a, const BigFloat& b) { return b + a; }
BigFloat operator-(long a, const BigFloat& b)
{
    BigFloat r(b.bits());
    mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}
BigFloat operator*(long a, const BigFloat& b) { return b * a; }
BigFloat operator/(long a, const BigFloat& b)
{
    BigFloat r(b.bits());
    mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b)
{
    if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.get(), b.get());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, long b)
{
    if (a.is_nan()) return std::partial_ordering::unordered;
    int c = mpfr_cmp_si(a.get(), b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigFloat& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) == 0; }

BigFloat abs(const BigFloat& x) { return apply(mpfr_abs, x); }
BigFloat sqrt(const BigFloat& x) { return apply(mpfr_sqrt, x); }
BigFloat cbrt(const BigFloat& x) { return apply(mpfr_cbrt, x); }
BigFloat exp(const BigFloat& x) { return apply(mpfr_exp, x); }
BigFloat expm1(const BigFloat& x) { return apply(mpfr_expm1, x); }
BigFloat log(const BigFloat& x) { return apply(mpfr_log, x); }
BigFloat log1p(const BigFloat& x) { return apply(mpfr_log1p, x); }
BigFloat sin(const BigFloat& x) { return apply(mpfr_sin, x); }
BigFloat cos(const BigFloat& x) { return apply(mpfr_cos, x); }
BigFloat tan(const BigFloat& x) { return apply(mpfr_tan, x); }
BigFloat asin(const BigFloat& x) { return apply(mpfr_asin, x); }
BigFloat atan(const BigFloat& x) { return apply(mpfr_atan, x); }
BigFloat atan2(const BigFloat& y, const BigFloat& x) { return apply(mpfr_atan2, y, x); }
BigFloat sinh(const BigFloat& x) { return apply(mpfr_sinh, x); }
BigFloat cosh(const BigFloat& x) { return apply(mpfr_cosh, x); }
BigFloat tanh(const BigFloat& x) { return apply(mpfr_tanh, x); }
BigFloat hypot(const BigFloat& a, const BigFloat& b) { return apply(mpfr_hypot, a, b); }
BigFloat pow(const BigFloat& x, const BigFloat& y) { return apply(mpfr_pow, x, y); }

BigFloat pow(const BigFloat& x, long n)
{
    BigFloat r(x.bits());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

BigFloat floor(const BigFloat& x)
{
    BigFloat r(x.bits());
    mpfr_floor(r.get(), x.get());
    return r;
}

BigFloat round(const BigFloat& x)
{
    BigFloat r(x.bits());
    mpfr_round(r.get(), x.get());
    return r;
}

BigFloat ldexp(const BigFloat& x, long e)
{
    BigFloat r(x.bits());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

} // namespace periods
