#include "periods/numkernel/quadrature.hpp"

#include "periods/numkernel/errors.hpp"

namespace periods {

namespace {

constexpr int kMinLevel = 3;
constexpr long kTCap = 8; // |t| beyond this never contributes at supported precisions
constexpr int kNegligibleRun = 3;

} // namespace

Quadrature::Quadrature(int prec, int max_level)
    : prec_(prec), max_level_(max_level), bits_(bits_for_digits(prec)), h0_(1, bits_), half_pi_(BigFloat::pi(bits_) / 2)
{
    if (prec < kMinDigits) throw DomainError("quadrature precision below 10 digits");
    h0_ /= 2;
}

BigFloat Quadrature::t_of(int level, std::size_t j) const
{
    if (level == 0) return h0_ * static_cast<long>(j + 1);
    return ldexp(h0_ * static_cast<long>(2 * j + 1), -level);
}

Quadrature::Node Quadrature::make_node(Kind kind, const BigFloat& t) const
{
    BigFloat et = exp(t);
    BigFloat sh = (et - 1 / et) / 2;
    BigFloat ch = (et + 1 / et) / 2;
    BigFloat u = half_pi_ * sh;
    switch (kind) {
    case kTanhSinh: {
        // x = tanh(u) on [-1, 1] mapped to fractions of the interval.
        BigFloat e2 = exp(u * 2);
        BigFloat d = e2 + 1;
        BigFloat p = e2 / d;
        BigFloat q = 1 / d;
        BigFloat w = half_pi_ * 2 * ch * e2 / (d * d);
        return {std::move(p), std::move(q), std::move(w)};
    }
    case kExpSinh: {
        BigFloat x = exp(u);
        BigFloat w = x * half_pi_ * ch;
        return {std::move(x), BigFloat(bits_), std::move(w)};
    }
    case kSinhSinh:
    default: {
        BigFloat eu = exp(u);
        BigFloat x = (eu - 1 / eu) / 2;
        BigFloat w = (eu + 1 / eu) / 2 * half_pi_ * ch;
        return {std::move(x), BigFloat(bits_), std::move(w)};
    }
    }
}

const Quadrature::Node& Quadrature::node(Kind kind, int level, int side, std::size_t j)
{
    Cache& c = cache_[kind];
    if (c.origin.empty()) c.origin.push_back(make_node(kind, BigFloat(0, bits_)));
    while (static_cast<int>(c.rays.size()) <= level) c.rays.emplace_back();
    Ray& ray = c.rays[static_cast<std::size_t>(level)][static_cast<std::size_t>(side)];
    while (ray.nodes.size() <= j) {
        BigFloat t = t_of(level, ray.nodes.size());
        ray.nodes.push_back(make_node(kind, side == 0 ? t : -t));
    }
    return ray.nodes[j];
}

QuadratureResult Quadrature::integrate_detailed(const Integrand& f, const Endpoint& a_in, const Endpoint& b_in)
{
    Endpoint a = a_in, b = b_in;
    long orientation = 1;
    bool swap = false;
    if (a.is_finite() && b.is_finite())
        swap = a.value() > b.value();
    else
        swap = a.infinite_sign() > 0 || b.infinite_sign() < 0;
    if (swap) {
        std::swap(a, b);
        orientation = -1;
    }
    QuadratureResult result{ApproxComplex(prec_), BigFloat(bits_), 0, 0};
    if ((a.is_finite() && b.is_finite() && a.value() == b.value()) ||
        (!a.is_finite() && a.infinite_sign() == b.infinite_sign()))
        return result;

    Kind kind;
    bool mirrored = false;
    if (a.is_finite() && b.is_finite())
        kind = kTanhSinh;
    else if (a.is_finite() || b.is_finite()) {
        kind = kExpSinh;
        mirrored = b.is_finite();
    } else
        kind = kSinhSinh;

    const BigFloat inf = BigFloat::infinity(1, bits_);
    BigFloat lo = a.is_finite() ? a.value().with_bits(bits_) : BigFloat(bits_);
    BigFloat hi = b.is_finite() ? b.value().with_bits(bits_) : BigFloat(bits_);
    BigFloat length = kind == kTanhSinh ? hi - lo : BigFloat(1, bits_);

    auto term = [&](const Node& n) {
        Abscissa ab;
        BigFloat weight(bits_);
        switch (kind) {
        case kTanhSinh: {
            ab.to_lower = length * n.p;
            ab.to_upper = length * n.q;
            ab.x = n.p <= n.q ? lo + ab.to_lower : hi - ab.to_upper;
            weight = length * n.w;
            break;
        }
        case kExpSinh:
            if (mirrored) {
                ab.x = hi - n.p;
                ab.to_upper = n.p;
                ab.to_lower = inf;
            } else {
                ab.x = lo + n.p;
                ab.to_lower = n.p;
                ab.to_upper = inf;
            }
            weight = n.w;
            break;
        case kSinhSinh:
            ab.x = n.p;
            ab.to_lower = inf;
            ab.to_upper = inf;
            weight = n.w;
            break;
        }
        ++result.evaluations;
        ApproxComplex v = f(ab);
        return v * weight;
    };

    const BigFloat tiny = BigFloat::pow10(-(prec_ + kGuardDigits), bits_);
    auto negligible = [&](const ApproxComplex& t, const ApproxComplex& s) {
        BigFloat scale = s.abs();
        if (scale < 1) scale = BigFloat(1, bits_);
        return t.abs() <= tiny * scale;
    };

    // Level 0 decides how far each ray is followed.
    node(kind, 0, 0, 0); // populates the origin node
    ApproxComplex sum = term(cache_[kind].origin[0]);
    if (!sum.is_finite()) throw NumericError("integrand not finite at the centre node");
    std::array<BigFloat, 2> t_max{BigFloat(bits_), BigFloat(bits_)};
    for (int side = 0; side < 2; ++side) {
        int run = 0;
        for (std::size_t j = 0;; ++j) {
            BigFloat t = t_of(0, j);
            if (t > kTCap) break;
            ApproxComplex v = term(node(kind, 0, side, j));
            if (!v.is_finite()) {
                if (t > 2) break;
                throw NumericError("integrand not finite at t = " + (side ? -t : t).to_string(10));
            }
            sum += v;
            t_max[static_cast<std::size_t>(side)] = t;
            if (negligible(v, sum)) {
                if (++run >= kNegligibleRun) break;
            } else {
                run = 0;
            }
        }
    }
    ApproxComplex estimate = sum * h0_;

    for (int level = 1; level <= max_level_; ++level) {
        ApproxComplex odd(prec_);
        for (int side = 0; side < 2; ++side) {
            for (std::size_t j = 0;; ++j) {
                BigFloat t = t_of(level, j);
                if (t > t_max[static_cast<std::size_t>(side)]) break;
                ApproxComplex v = term(node(kind, level, side, j));
                if (!v.is_finite()) {
                    if (t > 2) break;
                    throw NumericError("integrand not finite at t = " + (side ? -t : t).to_string(10));
                }
                odd += v;
            }
        }
        ApproxComplex next = estimate / 2 + odd * ldexp(h0_, -level);
        BigFloat gap = distance(next, estimate);
        estimate = std::move(next);
        result.gap = gap;
        result.levels = level;
        BigFloat scale = estimate.abs();
        if (scale < 1) scale = BigFloat(1, bits_);
        if (level >= kMinLevel && gap <= BigFloat::pow10(-(prec_ + 5), bits_) * scale) {
            result.value = orientation < 0 ? -estimate : estimate;
            return result;
        }
    }
    throw NumericError("quadrature did not converge after " + std::to_string(max_level_) + " levels",
                       estimate.to_string(prec_), result.gap.to_string(6));
}

ApproxComplex Quadrature::integrate(const Integrand& f, const Endpoint& a, const Endpoint& b)
{
    return integrate_detailed(f, a, b).value;
}

ApproxComplex quadrature(const Integrand& f, const Endpoint& a, const Endpoint& b, int prec)
{
    Quadrature q(prec);
    return q.integrate(f, a, b);
}

} // namespace periods
