#ifndef PERIODS_DERHAM_TWISTED_HPP
#define PERIODS_DERHAM_TWISTED_HPP

#include "periods/numkernel/laurent.hpp"

#include <string>
#include <vector>

namespace periods::derham {

// Twisted de Rham complex d_f P = dP - df * P for
//   power(n):  f = x^n on A^1, basis x^0 dx, ..., x^(n-2) dx;
//   bessel:    f = x + 1/x on G_m, basis (dx/x, dx).
class Twist {
public:
    enum class Kind { power, bessel };

    static Twist power(int n);
    static Twist bessel() { return Twist(Kind::bessel, 0); }

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int rank() const { return kind_ == Kind::power ? n_ - 1 : 2; }
    // Degree of the k-th basis form (x^deg dx).
    int basis_degree(int k) const;
    std::string basis_label(int k) const;

    // d_f P as the coefficient of dx.
    RatLaurent d(const RatLaurent& P) const;

private:
    Twist(Kind kind, int n) : kind_(kind), n_(n) {}
    Kind kind_;
    int n_;
};

// form dx = sum coeffs[k] * basis_k + d_f(certificate).
struct TwistedReduction {
    std::vector<Rational> coeffs;
    RatLaurent certificate;
};

TwistedReduction reduce_twisted(const Twist& twist, const RatLaurent& form);

bool certificate_holds(const Twist& twist, const RatLaurent& form, const TwistedReduction& r);

} // namespace periods::derham

#endif
