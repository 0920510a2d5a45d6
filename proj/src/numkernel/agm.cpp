#include "periods/numkernel/agm.hpp"

#include "periods/numkernel/errors.hpp"

#include <algorithm>

namespace periods {

BigFloat agm(const BigFloat& a_in, const BigFloat& b_in, int prec)
{
    if (a_in.sign() <= 0 || b_in.sign() <= 0) throw DomainError("agm needs positive arguments");
    mpfr_prec_t bits = bits_for_digits(prec);
    BigFloat a = a_in.with_bits(bits);
    BigFloat b = b_in.with_bits(bits);
    const BigFloat eps = BigFloat::pow10(-(prec + kGuardDigits), bits);
    for (int it = 0; it < 200; ++it) {
        if (abs(a - b) <= eps * a) return a;
        BigFloat m = (a + b) / 2;
        b = sqrt(a * b);
        a = std::move(m);
    }
    throw NumericError("agm iteration did not settle", a.to_string(prec), abs(a - b).to_string(6));
}

ApproxComplex agm(const ApproxComplex& a, const ApproxComplex& b, int prec)
{
    if (!a.imag().is_zero() || !b.imag().is_zero())
        throw UnsupportedDomainError("complex agm (branch choice) is not supported");
    return ApproxComplex(agm(a.real(), b.real(), prec), prec);
}

namespace {

struct Eval {
    ApproxComplex p;
    ApproxComplex dp;
};

Eval horner(const std::vector<ApproxComplex>& c, const ApproxComplex& z, int prec)
{
    ApproxComplex p(prec), dp(prec);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

} // namespace

std::vector<ApproxComplex> poly_roots(const std::vector<ApproxComplex>& coeffs_in, int prec)
{
    std::vector<ApproxComplex> c;
    for (const auto& v : coeffs_in) c.push_back(v.at_prec(prec));
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw DomainError("roots of the zero polynomial");
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};
    mpfr_prec_t bits = bits_for_digits(prec);

    // Zero roots split off exactly.
    std::size_t zeros = 0;
    while (c[zeros].is_zero()) ++zeros;
    std::vector<ApproxComplex> roots(zeros, ApproxComplex(prec));
    std::vector<ApproxComplex> q(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    const int m = static_cast<int>(q.size()) - 1;

    BigFloat max_coeff(bits);
    for (const auto& v : c) max_coeff = max(max_coeff, v.abs());

    if (m > 0) {
        // Initial points on a circle of the Cauchy bound radius, slightly rotated.
        BigFloat lead = q.back().abs();
        BigFloat radius(bits);
        for (int k = 0; k < m; ++k) radius = max(radius, q[static_cast<std::size_t>(k)].abs() / lead);
        radius = (radius + 1) / 2;
        std::vector<ApproxComplex> z;
        BigFloat two_pi = BigFloat::pi(bits) * 2;
        for (int k = 0; k < m; ++k) {
            BigFloat ang = two_pi * k / m + BigFloat::from_double(0.4, bits);
            z.emplace_back(radius * cos(ang), radius * sin(ang), prec);
        }
        const BigFloat eps = BigFloat::pow10(-(prec + kGuardDigits - 3), bits);
        const int max_iter = 60 * (m + 1) + 20 * prec;
        for (int it = 0; it < max_iter; ++it) {
            BigFloat worst(bits);
            for (int k = 0; k < m; ++k) {
                auto& zk = z[static_cast<std::size_t>(k)];
                Eval e = horner(q, zk, prec);
                if (e.p.is_zero()) continue;
                ApproxComplex ratio = e.p / e.dp;
                ApproxComplex s(prec);
                for (int j = 0; j < m; ++j)
                    if (j != k) s += ApproxComplex(1, prec) / (zk - z[static_cast<std::size_t>(j)]);
                ApproxComplex w = ratio / (ApproxComplex(1, prec) - ratio * s);
                zk -= w;
                BigFloat scale = zk.abs();
                if (scale < 1) scale = BigFloat(1, bits);
                worst = max(worst, w.abs() / scale);
            }
            if (worst <= eps) break;
        }
        roots.insert(roots.end(), z.begin(), z.end());
    }

    const BigFloat tol = BigFloat::pow10(5 - prec, bits) * max_coeff;
    for (const auto& r : roots) {
        BigFloat res = horner(c, r, prec).p.abs();
        if (!(res < tol)) throw NumericError("root residual above tolerance", r.to_string(prec), res.to_string(6));
    }
    return roots;
}

} // namespace periods
