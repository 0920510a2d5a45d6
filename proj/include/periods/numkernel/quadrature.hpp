#ifndef PERIODS_NUMKERNEL_QUADRATURE_HPP
#define PERIODS_NUMKERNEL_QUADRATURE_HPP

#include "periods/numkernel/complex.hpp"

#include <array>
#include <functional>
#include <vector>

namespace periods {

class Endpoint {
public:
    static Endpoint at(const BigFloat& v) { return Endpoint(v, 0); }
    static Endpoint at(long v) { return Endpoint(BigFloat(v, 64), 0); }
    static Endpoint minus_infinity() { return Endpoint(BigFloat(), -1); }
    static Endpoint plus_infinity() { return Endpoint(BigFloat(), 1); }

    bool is_finite() const { return inf_ == 0; }
    int infinite_sign() const { return inf_; }
    const BigFloat& value() const { return v_; }

private:
    Endpoint(BigFloat v, int inf) : v_(std::move(v)), inf_(inf) {}
    BigFloat v_;
    int inf_;
};

// A quadrature node. For a < b, to_lower = x - a and to_upper = b - x are
// computed without cancellation so integrands with endpoint singularities
// can use them directly; they are +inf on the side of an infinite endpoint.
struct Abscissa {
    BigFloat x;
    BigFloat to_lower;
    BigFloat to_upper;
};

using Integrand = std::function<ApproxComplex(const Abscissa&)>;

struct QuadratureResult {
    ApproxComplex value;
    BigFloat gap; // |difference| between the last two levels
    int levels = 0;
    long evaluations = 0;
};

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// half-lines, sinh-sinh on the whole line. The step is halved until two
// levels agree within 10^(-prec-5) (relative to max(1, |I|)); otherwise a
// NumericError carries the best estimate and the gap. Nodes are cached per
// object, so reuse one instance for many integrals at the same precision.
class Quadrature {
public:
    explicit Quadrature(int prec, int max_level = 10);

    int prec() const { return prec_; }
    QuadratureResult integrate_detailed(const Integrand& f, const Endpoint& a, const Endpoint& b);
    ApproxComplex integrate(const Integrand& f, const Endpoint& a, const Endpoint& b);

private:
    enum Kind { kTanhSinh = 0, kExpSinh = 1, kSinhSinh = 2 };
    struct Node {
        BigFloat p; // tanh-sinh: fraction from the lower end; exp-sinh: offset; sinh-sinh: x
        BigFloat q; // tanh-sinh: fraction from the upper end
        BigFloat w; // dx/dt for unit length
    };
    // Nodes of one level on one side of t = 0, extended on demand.
    struct Ray {
        std::vector<Node> nodes;
    };
    struct Cache {
        // rays[level][side]; level 0 holds t = j*h0, j >= 1, deeper levels odd multiples.
        std::vector<std::array<Ray, 2>> rays;
        std::vector<Node> origin;
    };

    const Node& node(Kind kind, int level, int side, std::size_t j);
    Node make_node(Kind kind, const BigFloat& t) const;
    BigFloat t_of(int level, std::size_t j) const;

    int prec_;
    int max_level_;
    mpfr_prec_t bits_;
    BigFloat h0_;
    BigFloat half_pi_;
    std::array<Cache, 3> cache_;
};

// One-shot convenience wrapper around Quadrature.
ApproxComplex quadrature(const Integrand& f, const Endpoint& a, const Endpoint& b, int prec);

} // namespace periods

#endif
