#include "periods/numkernel/ratpoly.hpp"

#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/exact_linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace periods {

Rational frac(long p, long q)
{
    if (q == 0) throw DomainError("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text)
{
    std::size_t i = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        out = text.substr(start, i - start);
        return i > start;
    };
    std::string sign;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) sign = text[i++] == '-' ? "-" : "";
    std::string num, den = "1";
    if (!digits(num)) throw DomainError("not a rational number: '" + text + "'");
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den)) throw DomainError("not a rational number: '" + text + "'");
    }
    if (i != text.size()) throw DomainError("not a rational number: '" + text + "'");
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    Rational q(Integer(sign + num), d);
    q.canonicalize();
    return q;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

RatPoly::RatPoly(long c)
{
    if (c != 0) c_.emplace_back(c);
}

RatPoly RatPoly::x() { return monomial(1, 1); }

RatPoly RatPoly::monomial(const Rational& c, int degree)
{
    if (degree < 0) throw DomainError("negative degree in a polynomial");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RatPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

Rational RatPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

RatPoly RatPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
    return RatPoly(std::move(v));
}

RatPoly RatPoly::antiderivative() const
{
    if (c_.empty()) return {};
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k + 1] = c_[k] / static_cast<long>(k + 1);
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly RatPoly::monic() const
{
    if (c_.empty()) throw DomainError("monic normalization of the zero polynomial");
    RatPoly r(*this);
    r *= Rational(1) / leading();
    return r;
}

RatPoly RatPoly::compose(const RatPoly& inner) const
{
    RatPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + RatPoly(*it);
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(v);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

RatPoly RatPoly::operator-() const
{
    RatPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string RatPoly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) { RatPoly r(a); r += b; return r; }
RatPoly operator-(const RatPoly& a, const RatPoly& b) { RatPoly r(a); r -= b; return r; }
RatPoly operator*(const RatPoly& a, const RatPoly& b) { RatPoly r(a); r *= b; return r; }
RatPoly operator*(const Rational& s, const RatPoly& p) { RatPoly r(p); r *= s; return r; }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    const Rational lb = b.leading();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational c = r[static_cast<std::size_t>(k)] / lb;
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

ExtGcd ext_gcd(const RatPoly& f, const RatPoly& g)
{
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    RatPoly r0 = f, r1 = g;
    RatPoly s0 = 1, s1 = 0;
    RatPoly t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = Rational(1) / r0.leading();
    r0 *= inv;
    s0 *= inv;
    t0 *= inv;
    return {r0, s0, t0};
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) { return ext_gcd(f, g).d; }

Rational resultant(const RatPoly& f, const RatPoly& g)
{
    if (f.is_zero() || g.is_zero()) return 0;
    const int n = f.degree();
    const int m = g.degree();
    if (n == 0 && m == 0) return 1;
    const std::size_t size = static_cast<std::size_t>(n + m);
    RatMatrix s(size, std::vector<Rational>(size));
    // Rows hold coefficients from the highest degree down.
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(n - k);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i + k)] = g.coeff(m - k);
    return det_exact(std::move(s));
}

Rational discriminant_monic(const RatPoly& f)
{
    if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
    RatPoly p = f.monic();
    const int n = p.degree();
    if (n == 1) return 1;
    Rational r = resultant(p, p.derivative());
    return (n * (n - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

namespace {

using IntPoly = std::vector<Integer>; // lowest degree first

IntPoly primitive_integer(const RatPoly& f)
{
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly p;
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        Rational v = c * l;
        p.push_back(v.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.back().get_mpz_t());
    }
    for (auto& c : p) c /= g;
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

Integer eval_int(const IntPoly& p, long x)
{
    Integer r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<Integer> positive_divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Polynomial of degree <= k through (x_i, y_i), by Lagrange interpolation over Q.
RatPoly interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys)
{
    RatPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = 1;
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= RatPoly(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += Rational(ys[i]) / denom * basis;
    }
    return result;
}

bool integral(const RatPoly& p)
{
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

// Search for a factor of exact degree k with integer coefficients.
bool has_factor_of_degree(const RatPoly& f, const IntPoly& p, int k)
{
    struct Point {
        long x;
        std::vector<Integer> divisors;
    };
    std::vector<Point> pts;
    for (long t = 0; t <= 24; ++t) {
        long x = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
        Integer v = eval_int(p, x);
        if (v == 0) return true; // linear factor x - t
        pts.push_back({x, positive_divisors(v)});
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
    pts.resize(static_cast<std::size_t>(k) + 1);

    std::vector<long> xs;
    for (const auto& pt : pts) xs.push_back(pt.x);
    std::vector<std::size_t> idx(pts.size(), 0);
    std::vector<int> sgn(pts.size(), 1);
    // Odometer over divisor choices and signs; the first value stays positive
    // since g and -g are the same factor.
    while (true) {
        std::vector<Integer> ys;
        for (std::size_t i = 0; i < pts.size(); ++i) ys.push_back(pts[i].divisors[idx[i]] * sgn[i]);
        RatPoly g = interpolate(xs, ys);
        if (g.degree() == k && integral(g) && divmod(f, g).second.is_zero()) return true;
        std::size_t i = 0;
        for (; i < pts.size(); ++i) {
            if (i > 0 && sgn[i] == 1) {
                sgn[i] = -1;
                break;
            }
            sgn[i] = 1;
            if (++idx[i] < pts[i].divisors.size()) break;
            idx[i] = 0;
        }
        if (i == pts.size()) return false;
    }
}

} // namespace

bool is_irreducible(const RatPoly& f)
{
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (gcd(f, f.derivative()).degree() > 0) return false;
    IntPoly p = primitive_integer(f);
    std::vector<Rational> pc(p.begin(), p.end());
    RatPoly pf(std::move(pc));
    for (int k = 1; k <= f.degree() / 2; ++k)
        if (has_factor_of_degree(pf, p, k)) return false;
    return true;
}

} // namespace periods
