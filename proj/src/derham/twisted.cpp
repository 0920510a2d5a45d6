#include "periods/derham/twisted.hpp"

#include "periods/numkernel/errors.hpp"

#include <map>

namespace periods::derham {

Twist Twist::power(int n)
{
    if (n < 2) throw DomainError("twisted power needs n >= 2");
    return Twist(Kind::power, n);
}

int Twist::basis_degree(int k) const
{
    if (k < 0 || k >= rank()) throw DomainError("basis index out of range");
    return kind_ == Kind::power ? k : k - 1;
}

std::string Twist::basis_label(int k) const
{
    int d = basis_degree(k);
    if (d == 0) return "dx";
    if (d == 1) return "x dx";
    if (d == -1) return "dx/x";
    return "x^" + std::to_string(d) + " dx";
}

RatLaurent Twist::d(const RatLaurent& P) const
{
    if (kind_ == Kind::power) return P.derivative() - n_ * (RatLaurent::monomial(1, n_ - 1) * P);
    return P.derivative() - P + RatLaurent::monomial(1, -2) * P;
}

namespace {

using Terms = std::map<int, Rational>;

void add(Terms& t, int k, const Rational& c)
{
    if (c == 0) return;
    Rational& slot = t[k];
    slot += c;
    if (slot == 0) t.erase(k);
}

TwistedReduction reduce_power(const Twist& tw, const RatLaurent& form)
{
    if (!form.is_zero() && form.min_deg() < 0) throw DomainError("twisted power forms must be polynomial");
    const int n = tw.n();
    Terms t;
    for (int k = form.min_deg(); !form.is_zero() && k <= form.max_deg(); ++k) add(t, k, form.coeff(k));
    Terms cert;
    // x^m dx = d_f(-x^(m-n+1)/n) + ((m-n+1)/n) x^(m-n) dx, applied from the top.
    while (!t.empty() && t.rbegin()->first >= n - 1) {
        auto [m, c] = *t.rbegin();
        t.erase(m);
        add(cert, m - n + 1, -c / n);
        add(t, m - n, c * frac(m - n + 1, n));
    }
    TwistedReduction r;
    for (int k = 0; k < tw.rank(); ++k) r.coeffs.push_back(t.count(k) ? t[k] : Rational(0));
    for (const auto& [k, c] : cert) r.certificate += RatLaurent::monomial(c, k);
    return r;
}

TwistedReduction reduce_bessel(const Twist& tw, const RatLaurent& form)
{
    Terms t;
    for (int k = form.min_deg(); !form.is_zero() && k <= form.max_deg(); ++k) add(t, k, form.coeff(k));
    Terms cert;
    // d_f(x^n) = n x^(n-1) - x^n + x^(n-2).
    // Positive exponents go down: x^n = n x^(n-1) + x^(n-2) - d_f(x^n).
    while (!t.empty() && t.rbegin()->first >= 1) {
        auto [n, c] = *t.rbegin();
        t.erase(n);
        add(cert, n, -c);
        add(t, n - 1, c * n);
        add(t, n - 2, c);
    }
    // Exponents m <= -2 go up: x^m = x^(m+2) - (m+2) x^(m+1) + d_f(x^(m+2)).
    while (!t.empty() && t.begin()->first <= -2) {
        auto [m, c] = *t.begin();
        t.erase(m);
        add(cert, m + 2, c);
        add(t, m + 2, c);
        add(t, m + 1, -c * (m + 2));
    }
    TwistedReduction r;
    for (int k = 0; k < tw.rank(); ++k) {
        int d = tw.basis_degree(k);
        r.coeffs.push_back(t.count(d) ? t[d] : Rational(0));
    }
    for (const auto& [k, c] : cert) r.certificate += RatLaurent::monomial(c, k);
    return r;
}

} // namespace

TwistedReduction reduce_twisted(const Twist& twist, const RatLaurent& form)
{
    return twist.kind() == Twist::Kind::power ? reduce_power(twist, form) : reduce_bessel(twist, form);
}

bool certificate_holds(const Twist& twist, const RatLaurent& form, const TwistedReduction& r)
{
    if (static_cast<int>(r.coeffs.size()) != twist.rank()) return false;
    RatLaurent rebuilt = twist.d(r.certificate);
    for (int k = 0; k < twist.rank(); ++k) rebuilt += RatLaurent::monomial(r.coeffs[static_cast<std::size_t>(k)], twist.basis_degree(k));
    return rebuilt == form;
}

} // namespace periods::derham
