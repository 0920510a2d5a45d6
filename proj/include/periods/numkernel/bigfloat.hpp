#ifndef PERIODS_NUMKERNEL_BIGFLOAT_HPP
#define PERIODS_NUMKERNEL_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>

namespace periods {

using Integer = mpz_class;
using Rational = mpq_class;

// Extra decimal digits carried on top of every requested precision.
inline constexpr int kGuardDigits = 15;
inline constexpr int kMinDigits = 10;

// Binary precision needed for `digits` decimal digits plus the guard digits.
mpfr_prec_t bits_for_digits(int digits);
// Decimal digits represented by `bits` (guard digits not subtracted).
int digits_for_bits(mpfr_prec_t bits);

// Owning wrapper around mpfr_t. Every value carries its own precision;
// binary operations round to the larger of the two operand precisions.
class BigFloat {
public:
    BigFloat();
    explicit BigFloat(mpfr_prec_t bits);
    BigFloat(long value, mpfr_prec_t bits);
    BigFloat(const Integer& value, mpfr_prec_t bits);
    BigFloat(const Rational& value, mpfr_prec_t bits);
    static BigFloat from_double(double value, mpfr_prec_t bits);
    // Throws DomainError on malformed input.
    static BigFloat parse(const std::string& text, mpfr_prec_t bits);
    static BigFloat pi(mpfr_prec_t bits);
    static BigFloat infinity(int sign, mpfr_prec_t bits);
    // 10^e, exact when representable.
    static BigFloat pow10(long e, mpfr_prec_t bits);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Rounded to `bits` (copy).
    BigFloat with_bits(mpfr_prec_t bits) const;
    // Exact rational value of a finite float.
    Rational to_rational() const;
    // Scientific notation with `digits` significant digits, e.g. "-1.25e-3".
    std::string to_string(int digits) const;
    // Decimal exponent e with 10^e <= |x| < 10^(e+1); very negative for 0.
    long decimal_exponent() const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat& operator+=(long o);
    BigFloat& operator-=(long o);
    BigFloat& operator*=(long o);
    BigFloat& operator/=(long o);

    BigFloat operator-() const;

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator+(const BigFloat& a, long b);
BigFloat operator-(const BigFloat& a, long b);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator/(const BigFloat& a, long b);
BigFloat operator+(long a, const BigFloat& b);
BigFloat operator-(long a, const BigFloat& b);
BigFloat operator*(long a, const BigFloat& b);
BigFloat operator/(long a, const BigFloat& b);

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
bool operator==(const BigFloat& a, const BigFloat& b);
std::partial_ordering operator<=>(const BigFloat& a, long b);
bool operator==(const BigFloat& a, long b);

// A double would silently convert to long here; use from_double instead.
template <std::floating_point F> BigFloat operator+(const BigFloat&, F) = delete;
template <std::floating_point F> BigFloat operator-(const BigFloat&, F) = delete;
template <std::floating_point F> BigFloat operator*(const BigFloat&, F) = delete;
template <std::floating_point F> BigFloat operator/(const BigFloat&, F) = delete;
template <std::floating_point F> BigFloat operator+(F, const BigFloat&) = delete;
template <std::floating_point F> BigFloat operator-(F, const BigFloat&) = delete;
template <std::floating_point F> BigFloat operator*(F, const BigFloat&) = delete;
template <std::floating_point F> BigFloat operator/(F, const BigFloat&) = delete;
template <std::floating_point F> std::partial_ordering operator<=>(const BigFloat&, F) = delete;
template <std::floating_point F> bool operator==(const BigFloat&, F) = delete;

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat asin(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat floor(const BigFloat& x);
BigFloat round(const BigFloat& x);
// x * 2^e
BigFloat ldexp(const BigFloat& x, long e);
const BigFloat& max(const BigFloat& a, const BigFloat& b);
const BigFloat& min(const BigFloat& a, const BigFloat& b);

} // namespace periods

#endif
