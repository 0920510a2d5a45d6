#ifndef PERIODS_NUMKERNEL_RATPOLY_HPP
#define PERIODS_NUMKERNEL_RATPOLY_HPP

#include "periods/numkernel/bigfloat.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace periods {

// p/q in canonical form (mpq_class(p, q) alone does not reduce).
Rational frac(long p, long q);
// "3/2", "-4", "0".
std::string to_string(const Rational& q);
// Accepts "a" or "a/b" with optional sign. Throws DomainError.
Rational parse_rational(const std::string& text);

// Dense univariate polynomial over Q, lowest degree first, trailing zeros
// trimmed, so the zero polynomial has no coefficients.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(const Rational& c); // NOLINT: constants convert implicitly
    RatPoly(long c);            // NOLINT
    static RatPoly x();
    static RatPoly monomial(const Rational& c, int degree);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of x^k, zero outside the stored range.
    Rational coeff(int k) const;
    Rational leading() const;

    RatPoly derivative() const;
    // Antiderivative with zero constant term.
    RatPoly antiderivative() const;
    Rational eval(const Rational& x) const;
    RatPoly monic() const;
    RatPoly compose(const RatPoly& inner) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rational& s);
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    // "3/2*x^2 - x + 5"
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& p);
inline RatPoly operator*(long s, const RatPoly& p) { return Rational(s) * p; }
inline RatPoly operator*(int s, const RatPoly& p) { return Rational(s) * p; }

// Euclidean division a = q*b + r with deg r < deg b. Division by zero is a DomainError.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd d with Bezout coefficients u*f + v*g = d.
// Both inputs zero is a DomainError.
struct ExtGcd {
    RatPoly d;
    RatPoly u;
    RatPoly v;
};
ExtGcd ext_gcd(const RatPoly& f, const RatPoly& g);
RatPoly gcd(const RatPoly& f, const RatPoly& g);

// Resultant via the Sylvester determinant.
Rational resultant(const RatPoly& f, const RatPoly& g);
// Discriminant of the monic normalization of f: prod_{i<j} (a_i - a_j)^2.
Rational discriminant_monic(const RatPoly& f);

// Exact irreducibility over Q (Kronecker's method). Constants and the zero
// polynomial are reported reducible.
bool is_irreducible(const RatPoly& f);

} // namespace periods

#endif
