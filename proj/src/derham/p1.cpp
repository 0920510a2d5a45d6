#include "periods/derham/p1.hpp"

#include "periods/numkernel/errors.hpp"
#include "periods/numkernel/exact_linalg.hpp"

namespace periods::derham {

P1Cohomology verify_p1_truncated(int Nmax)
{
    if (Nmax < 4) throw DomainError("verify_p1_truncated needs Nmax >= 4");
    const int N = Nmax;
    const std::size_t dim0 = 2 * static_cast<std::size_t>(N + 1);
    // C^1 coordinates: t^i dt (i = 0..N), s^j ds (j = 0..N), h = t^k (k = -N..N).
    const std::size_t p_off = 0, q_off = static_cast<std::size_t>(N + 1), h_off = 2 * static_cast<std::size_t>(N + 1);
    const std::size_t dim1 = h_off + static_cast<std::size_t>(2 * N + 1);
    // C^2 coordinates: t^k dt, k = -N-2..N.
    const std::size_t dim2 = static_cast<std::size_t>(2 * N + 3);
    auto h_row = [&](int k) { return h_off + static_cast<std::size_t>(k + N); };
    auto c2_row = [&](int k) { return static_cast<std::size_t>(k + N + 2); };

    RatMatrix a(dim1, std::vector<Rational>(dim0));
    for (int i = 0; i <= N; ++i) {
        const std::size_t col = static_cast<std::size_t>(i);
        if (i > 0) a[p_off + static_cast<std::size_t>(i - 1)][col] = -i;
        a[h_row(i)][col] = 1;
    }
    for (int j = 0; j <= N; ++j) {
        const std::size_t col = static_cast<std::size_t>(N + 1 + j);
        if (j > 0) a[q_off + static_cast<std::size_t>(j - 1)][col] = -j;
        a[h_row(-j)][col] -= 1;
    }

    RatMatrix b(dim2, std::vector<Rational>(dim1 + 1));
    for (int i = 0; i <= N; ++i) b[c2_row(i)][p_off + static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j <= N; ++j) b[c2_row(-j - 2)][q_off + static_cast<std::size_t>(j)] = 1;
    for (int k = -N; k <= N; ++k)
        if (k != 0) b[c2_row(k - 1)][h_row(k)] = k;

    P1Cohomology r;
    r.rank_a = rank_exact(a);
    RatMatrix b_only = b;
    for (auto& row : b_only) row.pop_back();
    r.rank_b = rank_exact(b_only);
    // Last column: dt/t.
    b[c2_row(-1)][dim1] = 1;
    r.h2_has_dt_over_t = rank_exact(b) > r.rank_b;
    r.h0 = static_cast<int>(dim0) - r.rank_a;
    r.h1 = static_cast<int>(dim1) - r.rank_b - r.rank_a;
    return r;
}

NumberFieldH0 numberfield_h0_basis(const RatPoly& f, bool trust_irreducible)
{
    if (f.degree() < 1) throw DomainError("number field needs a non-constant polynomial");
    NumberFieldH0 out;
    if (f.degree() <= 8) {
        if (!is_irreducible(f)) throw DomainError("polynomial is reducible over Q: " + f.to_string());
        out.irreducibility_checked = true;
    } else if (!trust_irreducible) {
        throw DomainError("irreducibility is only checked up to degree 8");
    }
    out.dim = f.degree();
    for (int k = 0; k < out.dim; ++k) out.basis.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
    ExtGcd e = ext_gcd(f, f.derivative());
    out.omega1_zero = e.d == RatPoly(1);
    out.unit_witness = e.v;
    return out;
}

} // namespace periods::derham
