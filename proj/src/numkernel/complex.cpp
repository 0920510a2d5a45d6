#include "periods/numkernel/complex.hpp"

#include "periods/numkernel/errors.hpp"

#include <algorithm>

namespace periods {

namespace {

int checked(int prec)
{
    if (prec < kMinDigits)
        throw DomainError("precision below " + std::to_string(kMinDigits) + " digits");
    return prec;
}

} // namespace

ApproxComplex::ApproxComplex() : ApproxComplex(kMinDigits) {}

ApproxComplex::ApproxComplex(int prec)
    : re_(bits_for_digits(checked(prec))), im_(bits_for_digits(prec)), prec_(prec) {}

ApproxComplex::ApproxComplex(long value, int prec)
    : re_(value, bits_for_digits(checked(prec))), im_(bits_for_digits(prec)), prec_(prec) {}

ApproxComplex::ApproxComplex(const Rational& value, int prec)
    : re_(value, bits_for_digits(checked(prec))), im_(bits_for_digits(prec)), prec_(prec) {}

ApproxComplex::ApproxComplex(const BigFloat& re, int prec)
    : re_(re.with_bits(bits_for_digits(checked(prec)))), im_(bits_for_digits(prec)), prec_(prec) {}

ApproxComplex::ApproxComplex(const BigFloat& re, const BigFloat& im, int prec)
    : re_(re.with_bits(bits_for_digits(checked(prec)))),
      im_(im.with_bits(bits_for_digits(prec))),
      prec_(prec) {}

ApproxComplex ApproxComplex::i(int prec)
{
    return ApproxComplex(BigFloat(0, bits_for_digits(prec)), BigFloat(1, bits_for_digits(prec)), prec);
}

ApproxComplex ApproxComplex::parse(const std::string& re, const std::string& im, int prec)
{
    mpfr_prec_t b = bits_for_digits(checked(prec));
    return ApproxComplex(BigFloat::parse(re, b), BigFloat::parse(im, b), prec);
}

ApproxComplex ApproxComplex::at_prec(int prec) const { return ApproxComplex(re_, im_, prec); }

BigFloat ApproxComplex::abs() const { return hypot(re_, im_); }
BigFloat ApproxComplex::norm() const { return re_ * re_ + im_ * im_; }
BigFloat ApproxComplex::arg() const { return atan2(im_, re_); }
ApproxComplex ApproxComplex::conj() const { return ApproxComplex(re_, -im_, prec_); }

std::string ApproxComplex::to_string(int digits) const
{
    std::string s = re_.to_string(digits);
    if (im_.is_finite() && mpfr_signbit(im_.get()))
        s += " - " + (-im_).to_string(digits) + "*i";
    else
        s += " + " + im_.to_string(digits) + "*i";
    return s;
}

namespace {

// Raise the stored precision of `x` to at least that of `o`.
void widen(ApproxComplex& x, const ApproxComplex& o)
{
    if (o.prec() > x.prec()) x = x.at_prec(o.prec());
}

} // namespace

ApproxComplex& ApproxComplex::operator+=(const ApproxComplex& o)
{
    widen(*this, o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ApproxComplex& ApproxComplex::operator-=(const ApproxComplex& o)
{
    widen(*this, o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ApproxComplex& ApproxComplex::operator*=(const ApproxComplex& o)
{
    widen(*this, o);
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    BigFloat r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

ApproxComplex& ApproxComplex::operator/=(const ApproxComplex& o)
{
    widen(*this, o);
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    // Smith's algorithm keeps intermediate magnitudes in range.
    if (periods::abs(o.re_) >= periods::abs(o.im_)) {
        BigFloat r = o.im_ / o.re_;
        BigFloat d = o.re_ + o.im_ * r;
        BigFloat nr = (re_ + im_ * r) / d;
        im_ = (im_ - re_ * r) / d;
        re_ = std::move(nr);
    } else {
        BigFloat r = o.re_ / o.im_;
        BigFloat d = o.re_ * r + o.im_;
        BigFloat nr = (re_ * r + im_) / d;
        im_ = (im_ * r - re_) / d;
        re_ = std::move(nr);
    }
    return *this;
}

ApproxComplex& ApproxComplex::operator*=(const BigFloat& o) { re_ *= o; im_ *= o; return *this; }
ApproxComplex& ApproxComplex::operator/=(const BigFloat& o) { re_ /= o; im_ /= o; return *this; }
ApproxComplex& ApproxComplex::operator*=(long o) { re_ *= o; im_ *= o; return *this; }
ApproxComplex& ApproxComplex::operator/=(long o) { re_ /= o; im_ /= o; return *this; }

ApproxComplex ApproxComplex::operator-() const { return ApproxComplex(-re_, -im_, prec_); }

ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b) { ApproxComplex r(a); r += b; return r; }
ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b) { ApproxComplex r(a); r -= b; return r; }
ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) { ApproxComplex r(a); r *= b; return r; }
ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b) { ApproxComplex r(a); r /= b; return r; }
ApproxComplex operator*(const ApproxComplex& a, const BigFloat& b) { ApproxComplex r(a); r *= b; return r; }
ApproxComplex operator*(const BigFloat& a, const ApproxComplex& b) { ApproxComplex r(b); r *= a; return r; }
ApproxComplex operator/(const ApproxComplex& a, const BigFloat& b) { ApproxComplex r(a); r /= b; return r; }
ApproxComplex operator+(const ApproxComplex& a, long b) { return a + ApproxComplex(b, a.prec()); }
ApproxComplex operator-(const ApproxComplex& a, long b) { return a - ApproxComplex(b, a.prec()); }
ApproxComplex operator*(const ApproxComplex& a, long b) { ApproxComplex r(a); r *= b; return r; }
ApproxComplex operator*(long a, const ApproxComplex& b) { ApproxComplex r(b); r *= a; return r; }
ApproxComplex operator/(const ApproxComplex& a, long b) { ApproxComplex r(a); r /= b; return r; }

ApproxComplex pi_const(int prec)
{
    return ApproxComplex(BigFloat::pi(bits_for_digits(checked(prec))), prec);
}

ApproxComplex two_pi_i(int prec)
{
    mpfr_prec_t b = bits_for_digits(checked(prec));
    return ApproxComplex(BigFloat(b), BigFloat::pi(b) * 2, prec);
}

ApproxComplex exp_c(const ApproxComplex& z, int prec)
{
    ApproxComplex w = z.at_prec(prec);
    BigFloat m = exp(w.real());
    if (w.imag().is_zero()) return ApproxComplex(m, prec);
    return ApproxComplex(m * cos(w.imag()), m * sin(w.imag()), prec);
}

ApproxComplex log_c(const ApproxComplex& z, int prec)
{
    if (z.is_zero()) throw DomainError("log of zero");
    ApproxComplex w = z.at_prec(prec);
    if (w.imag().is_zero()) {
        if (w.real().sign() > 0) return ApproxComplex(log(w.real()), prec);
        // Negative reals sit on the cut; the principal argument is +pi whatever the sign of zero.
        return ApproxComplex(log(-w.real()), BigFloat::pi(w.bits()), prec);
    }
    return ApproxComplex(log(w.abs()), w.arg(), prec);
}

ApproxComplex sqrt_c(const ApproxComplex& z, int prec)
{
    ApproxComplex w = z.at_prec(prec);
    if (w.is_zero()) return w;
    if (w.imag().is_zero()) {
        if (w.real().sign() > 0) return ApproxComplex(sqrt(w.real()), prec);
        return ApproxComplex(BigFloat(w.bits()), sqrt(-w.real()), prec);
    }
    BigFloat m = w.abs();
    BigFloat t = sqrt((m + abs(w.real())) / 2);
    if (w.real().sign() >= 0) return ApproxComplex(t, w.imag() / (t * 2), prec);
    BigFloat im = w.imag().sign() < 0 ? -t : t;
    return ApproxComplex(abs(w.imag()) / (t * 2), im, prec);
}

ApproxComplex pow_c(const ApproxComplex& z, const ApproxComplex& w, int prec)
{
    if (z.is_zero()) {
        if (w.real().sign() > 0) return ApproxComplex(prec);
        throw DomainError("0 raised to a power with non-positive real part");
    }
    return exp_c(w.at_prec(prec) * log_c(z, prec), prec);
}

ApproxComplex pow_c(const ApproxComplex& z, long n)
{
    if (n < 0) return ApproxComplex(1, z.prec()) / pow_c(z, -n);
    ApproxComplex r(1, z.prec());
    ApproxComplex b = z;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n > 0) b *= b;
    }
    return r;
}

ApproxComplex sin_c(const ApproxComplex& z, int prec)
{
    ApproxComplex w = z.at_prec(prec);
    if (w.imag().is_zero()) return ApproxComplex(sin(w.real()), prec);
    return ApproxComplex(sin(w.real()) * cosh(w.imag()), cos(w.real()) * sinh(w.imag()), prec);
}

ApproxComplex cos_c(const ApproxComplex& z, int prec)
{
    ApproxComplex w = z.at_prec(prec);
    if (w.imag().is_zero()) return ApproxComplex(cos(w.real()), prec);
    return ApproxComplex(cos(w.real()) * cosh(w.imag()), -(sin(w.real()) * sinh(w.imag())), prec);
}

BigFloat distance(const ApproxComplex& a, const ApproxComplex& b) { return (a - b).abs(); }

} // namespace periods
