#ifndef PERIODS_NUMKERNEL_COMPLEX_HPP
#define PERIODS_NUMKERNEL_COMPLEX_HPP

#include "periods/numkernel/bigfloat.hpp"

#include <string>

namespace periods {

// Complex number with a nominal decimal precision (>= 10). The parts are
// stored with bits_for_digits(prec) bits, i.e. including the guard digits.
// Binary operations use the larger precision of the two operands.
class ApproxComplex {
public:
    ApproxComplex();
    explicit ApproxComplex(int prec);
    ApproxComplex(long value, int prec);
    ApproxComplex(const Rational& value, int prec);
    ApproxComplex(const BigFloat& re, int prec);
    ApproxComplex(const BigFloat& re, const BigFloat& im, int prec);

    static ApproxComplex i(int prec);
    static ApproxComplex parse(const std::string& re, const std::string& im, int prec);

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    int prec() const { return prec_; }
    mpfr_prec_t bits() const { return re_.bits(); }

    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    // Same value carried at another nominal precision.
    ApproxComplex at_prec(int prec) const;

    BigFloat abs() const;
    BigFloat norm() const; // |z|^2
    BigFloat arg() const;
    ApproxComplex conj() const;

    // "re + im*i" with `digits` significant digits per part.
    std::string to_string(int digits) const;

    ApproxComplex& operator+=(const ApproxComplex& o);
    ApproxComplex& operator-=(const ApproxComplex& o);
    ApproxComplex& operator*=(const ApproxComplex& o);
    ApproxComplex& operator/=(const ApproxComplex& o);
    ApproxComplex& operator*=(const BigFloat& o);
    ApproxComplex& operator/=(const BigFloat& o);
    ApproxComplex& operator*=(long o);
    ApproxComplex& operator/=(long o);

    ApproxComplex operator-() const;

private:
    BigFloat re_;
    BigFloat im_;
    int prec_;
};

ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator*(const ApproxComplex& a, const BigFloat& b);
ApproxComplex operator*(const BigFloat& a, const ApproxComplex& b);
ApproxComplex operator/(const ApproxComplex& a, const BigFloat& b);
ApproxComplex operator+(const ApproxComplex& a, long b);
ApproxComplex operator-(const ApproxComplex& a, long b);
ApproxComplex operator*(const ApproxComplex& a, long b);
ApproxComplex operator*(long a, const ApproxComplex& b);
ApproxComplex operator/(const ApproxComplex& a, long b);

// Constants and elementary functions on the principal branch, evaluated at
// `prec` decimal digits.
ApproxComplex pi_const(int prec);
ApproxComplex two_pi_i(int prec);
ApproxComplex exp_c(const ApproxComplex& z, int prec);
// Principal log, arg in (-pi, pi]. log 0 is a DomainError.
ApproxComplex log_c(const ApproxComplex& z, int prec);
// Principal square root (Re >= 0).
ApproxComplex sqrt_c(const ApproxComplex& z, int prec);
// z^w = exp(w log z); 0^w = 0 for Re w > 0.
ApproxComplex pow_c(const ApproxComplex& z, const ApproxComplex& w, int prec);
ApproxComplex pow_c(const ApproxComplex& z, long n);
ApproxComplex sin_c(const ApproxComplex& z, int prec);
ApproxComplex cos_c(const ApproxComplex& z, int prec);

// |a - b|, computed at the larger precision.
BigFloat distance(const ApproxComplex& a, const ApproxComplex& b);

} // namespace periods

#endif
