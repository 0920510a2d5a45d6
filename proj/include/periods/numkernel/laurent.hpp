#ifndef PERIODS_NUMKERNEL_LAURENT_HPP
#define PERIODS_NUMKERNEL_LAURENT_HPP

#include "periods/numkernel/ratpoly.hpp"

#include <string>
#include <vector>

namespace periods {

// Laurent polynomial sum_{k} c_k x^k over Q stored as (min_deg, coefficients).
// Zero coefficients at both ends are trimmed; zero has no coefficients.
class RatLaurent {
public:
    RatLaurent() = default;
    RatLaurent(int min_deg, std::vector<Rational> coeffs);
    RatLaurent(const RatPoly& p); // NOLINT
    RatLaurent(const Rational& c); // NOLINT
    RatLaurent(long c);            // NOLINT
    static RatLaurent monomial(const Rational& c, int degree);

    bool is_zero() const { return c_.empty(); }
    int min_deg() const { return min_; }
    // Highest degree present; only meaningful when non-zero.
    int max_deg() const { return min_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;

    RatLaurent derivative() const;
    // Antiderivative with zero constant term; a non-zero x^-1 coefficient is a DomainError.
    RatLaurent antiderivative() const;
    // x -> 1/x
    RatLaurent invert_variable() const;
    // Rational value at x != 0.
    Rational eval(const Rational& x) const;
    // Coefficient-wise split: degrees >= 0 as a polynomial.
    RatPoly polynomial_part() const;

    RatLaurent& operator+=(const RatLaurent& o);
    RatLaurent& operator-=(const RatLaurent& o);
    RatLaurent& operator*=(const RatLaurent& o);
    RatLaurent& operator*=(const Rational& s);
    RatLaurent operator-() const;

    friend bool operator==(const RatLaurent& a, const RatLaurent& b)
    {
        return a.c_ == b.c_ && (a.c_.empty() || a.min_ == b.min_);
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    int min_ = 0;
    std::vector<Rational> c_;
};

RatLaurent operator+(const RatLaurent& a, const RatLaurent& b);
RatLaurent operator-(const RatLaurent& a, const RatLaurent& b);
RatLaurent operator*(const RatLaurent& a, const RatLaurent& b);
RatLaurent operator*(const Rational& s, const RatLaurent& p);
inline RatLaurent operator*(long s, const RatLaurent& p) { return Rational(s) * p; }
inline RatLaurent operator*(int s, const RatLaurent& p) { return Rational(s) * p; }

// Parses the CLI grammar: a sum of terms "c*x^k", "c x^k", "x", "c", with c
// an integer or fraction and k a (possibly negative) integer, e.g.
// "3/2*x^2 - x + 5" or "2*x^-1 + 5*x". Throws DomainError on malformed input.
RatLaurent parse_laurent(const std::string& text, const std::string& var = "x");
// Same grammar, rejecting negative exponents.
RatPoly parse_poly(const std::string& text, const std::string& var = "x");

} // namespace periods

#endif
