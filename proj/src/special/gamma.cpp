#include "periods/special/gamma.hpp"

#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/quadrature.hpp"

#include <cmath>
#include <mutex>

namespace periods::special {

namespace {

// Digits added on top of `prec` where recursions or cancellations eat some.
constexpr int kExtra = 5;

long checked_long(const BigFloat& x, const char* what)
{
    if (abs(x) > 1000000) throw DomainError(std::string(what) + " argument too large");
    return mpfr_get_si(x.get(), MPFR_RNDN);
}

// Integral of t^(s-1) e^-t over (0, inf).
ApproxComplex gamma_integral(const ApproxComplex& s, int prec)
{
    const ApproxComplex sm1 = s - 1;
    Quadrature q(prec);
    auto f = [&](const Abscissa& a) {
        if (sm1.is_zero()) return ApproxComplex(exp(-a.x), prec);
        ApproxComplex e = sm1 * log(a.to_lower);
        e -= ApproxComplex(a.to_lower, prec);
        return exp_c(e, prec);
    };
    return q.integrate(f, Endpoint::at(0), Endpoint::plus_infinity());
}

} // namespace

ApproxComplex gamma_fn(const ApproxComplex& s_in, int prec)
{
    const int wp = prec + kExtra;
    const ApproxComplex s = s_in.at_prec(wp);
    if (s.imag().is_zero() && s.real() <= 0 && floor(s.real()) == s.real())
        throw PoleError("gamma has a pole at " + s.real().to_string(10));
    const long shift = checked_long(floor(s.real()), "gamma") - 1;
    const ApproxComplex base = s - shift; // 1 <= Re < 2
    ApproxComplex g = gamma_integral(base, wp);
    for (long k = 0; k < shift; ++k) g *= base + k;
    for (long k = 1; k <= -shift; ++k) g /= base - k;
    return g.at_prec(prec);
}

ApproxComplex beta_fn(const ApproxComplex& a_in, const ApproxComplex& b_in, int prec, BetaMethod method)
{
    if (a_in.real() <= 0 || b_in.real() <= 0) throw DomainError("beta needs Re a > 0 and Re b > 0");
    const int wp = prec + kExtra;
    const ApproxComplex a = a_in.at_prec(wp), b = b_in.at_prec(wp);
    if (method == BetaMethod::gamma) return (gamma_fn(a, wp) * gamma_fn(b, wp) / gamma_fn(a + b, wp)).at_prec(prec);

    const ApproxComplex am1 = a - 1, bm1 = b - 1;
    Quadrature q(wp);
    auto f = [&](const Abscissa& t) {
        ApproxComplex e(wp);
        if (!am1.is_zero()) e += am1 * log(t.to_lower);
        if (!bm1.is_zero()) e += bm1 * log(t.to_upper);
        return exp_c(e, wp);
    };
    return q.integrate(f, Endpoint::at(0), Endpoint::at(1)).at_prec(prec);
}

std::vector<Rational> bernoulli_numbers(int n)
{
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    while (static_cast<int>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        Rational s = 0;
        Integer binom = 1; // C(m+1, k)
        for (long k = 0; k < m; ++k) {
            s += binom * cache[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        Rational b = -s / (m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return {cache.begin(), cache.begin() + n + 1};
}

ApproxComplex zeta_fn(long n, int prec)
{
    if (n < 2) throw DomainError("zeta_fn needs an integer n >= 2");
    const mpfr_prec_t bits = bits_for_digits(prec + kExtra);
    const long N = prec + 20;
    BigFloat s(bits);
    for (long k = N - 1; k >= 1; --k) s += 1 / pow(BigFloat(k, bits), n);
    const BigFloat bigN(N, bits);
    const BigFloat inv_pow = 1 / pow(bigN, n); // N^-n
    s += inv_pow * N / (n - 1);
    s += inv_pow / 2;

    // sum_j B_2j/(2j)! n(n+1)...(n+2j-2) N^(-n-2j+1)
    const BigFloat eps = BigFloat::pow10(-(prec + kGuardDigits + 2), bits);
    const int jmax = static_cast<int>(3 * N);
    const std::vector<Rational> B = bernoulli_numbers(2 * jmax);
    BigFloat factor = inv_pow * N; // N^(1-n), times rising factorial / (2j)!
    const BigFloat invN2 = 1 / (bigN * bigN);
    for (int j = 1; j <= jmax; ++j) {
        // factor <- factor * (n+2j-3)(n+2j-2) / ((2j-1)(2j)) / N^2; the j = 1 step is n/2.
        if (j == 1)
            factor = factor * n / 2 * invN2;
        else
            factor = factor * ((n + 2 * j - 3) * (n + 2 * j - 2)) / ((2 * j - 1) * (2 * j)) * invN2;
        BigFloat term = factor * BigFloat(B[static_cast<std::size_t>(2 * j)], bits);
        s += term;
        if (abs(term) < eps) return ApproxComplex(s, prec);
    }
    throw NumericError("Euler-Maclaurin for zeta did not converge", s.to_string(prec), "");
}

namespace {

// sum_{k1 > ... > kl >= 1, k1 <= N} 2^-k1 / prod k_i^s_i for a word in
// x0 = 0, x1 = 1 ending with 1 (empty word: 1).
BigFloat polylog_half(const std::vector<int>& word, long N, mpfr_prec_t bits)
{
    if (word.empty()) return BigFloat(1, bits);
    std::vector<int> s;
    int zeros = 0;
    for (int letter : word) {
        if (letter == 0) {
            ++zeros;
        } else {
            s.push_back(zeros + 1);
            zeros = 0;
        }
    }
    std::vector<BigFloat> A(static_cast<std::size_t>(N + 1), BigFloat(bits));
    for (long k = 1; k <= N; ++k) A[static_cast<std::size_t>(k)] = 1 / pow(BigFloat(k, bits), s.back());
    for (int i = static_cast<int>(s.size()) - 2; i >= 0; --i) {
        BigFloat prefix(bits);
        std::vector<BigFloat> next(A.size(), BigFloat(bits));
        for (long k = 1; k <= N; ++k) {
            next[static_cast<std::size_t>(k)] = prefix / pow(BigFloat(k, bits), s[static_cast<std::size_t>(i)]);
            prefix += A[static_cast<std::size_t>(k)];
        }
        A = std::move(next);
    }
    BigFloat total(bits);
    for (long k = N; k >= 1; --k) total += ldexp(A[static_cast<std::size_t>(k)], -k);
    return total;
}

} // namespace

ApproxComplex mzv(const std::vector<long>& n, int prec)
{
    if (n.empty() || n.size() > 3) throw DomainError("mzv supports depth 1 to 3");
    if (n[0] < 2) throw DomainError("mzv needs n1 >= 2 for convergence");
    for (long ni : n)
        if (ni < 1) throw DomainError("mzv needs every n_i >= 1");
    if (prec > kMzvMaxPrec) throw DomainError("mzv precision is capped at 25 digits");
    if (prec < kMinDigits) throw DomainError("mzv precision below 10 digits");

    std::vector<int> word;
    for (long ni : n) {
        word.insert(word.end(), static_cast<std::size_t>(ni - 1), 0);
        word.push_back(1);
    }
    const int weight = static_cast<int>(word.size());

    // Tail of one truncated sum: <= 4 * 2^-(N+1) (1 + log(N+1))^(weight-1) once N > 4 weight.
    const double target = (prec + kGuardDigits + 2) * std::log(10.0);
    long N = 4 * weight + 1;
    while ((N + 1) * std::log(2.0) - std::log(4.0) - (weight - 1) * std::log(1 + std::log(N + 1.0)) < target) ++N;

    const mpfr_prec_t bits = bits_for_digits(prec + kExtra);
    // Split the path at 1/2: the piece over [1/2, 1] is the swapped and
    // reversed word over [0, 1/2].
    BigFloat total(bits);
    for (int j = 0; j <= weight; ++j) {
        std::vector<int> left;
        for (int i = j - 1; i >= 0; --i) left.push_back(1 - word[static_cast<std::size_t>(i)]);
        std::vector<int> right(word.begin() + j, word.end());
        total += polylog_half(left, N, bits) * polylog_half(right, N, bits);
    }
    return ApproxComplex(total, prec);
}

ApproxComplex euler_gamma(int prec, EulerGammaMethod method)
{
    if (method == EulerGammaMethod::standard) {
        // gamma = H_N - log N - 1/(2N) + sum_k B_2k/(2k N^2k)
        const mpfr_prec_t bits = bits_for_digits(prec + kExtra);
        const long N = prec + 20;
        BigFloat h(bits);
        for (long k = N; k >= 1; --k) h += BigFloat(1, bits) / k;
        const BigFloat bigN(N, bits);
        h -= log(bigN);
        h -= BigFloat(1, bits) / (2 * N);
        const BigFloat eps = BigFloat::pow10(-(prec + kGuardDigits + 2), bits);
        const int kmax = static_cast<int>(3 * N);
        const std::vector<Rational> B = bernoulli_numbers(2 * kmax);
        BigFloat p(1, bits);
        const BigFloat invN2 = 1 / (bigN * bigN);
        for (int k = 1; k <= kmax; ++k) {
            p *= invN2;
            BigFloat term = p * BigFloat(B[static_cast<std::size_t>(2 * k)], bits) / (2 * k);
            h += term;
            if (abs(term) < eps) return ApproxComplex(h, prec);
        }
        throw NumericError("Euler-Maclaurin for gamma did not converge", h.to_string(prec), "");
    }

    if (prec > kEulerGammaIntegralMaxPrec) throw DomainError("the double integral for gamma is capped at 30 digits");
    Quadrature inner(prec), outer(prec);
    auto inner_integral = [&](const BigFloat& y, const Endpoint& a, const Endpoint& b) {
        return inner.integrate([&](const Abscissa& x) { return ApproxComplex(exp(-(x.x * y)), prec); }, a, b);
    };
    ApproxComplex square = outer.integrate(
        [&](const Abscissa& y) { return inner_integral(y.x, Endpoint::at(0), Endpoint::at(1)); }, Endpoint::at(0),
        Endpoint::at(1));
    ApproxComplex corner = outer.integrate(
        [&](const Abscissa& y) { return inner_integral(y.x, Endpoint::at(1), Endpoint::plus_infinity()); },
        Endpoint::at(1), Endpoint::plus_infinity());
    return square - corner;
}

} // namespace periods::special
