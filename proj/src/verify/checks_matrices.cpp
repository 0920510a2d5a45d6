#include "checks.hpp"

#include "periods/derham/p1.hpp"
#include "periods/matrices/named.hpp"

namespace periods::verify::detail {

namespace {

using namespace periods::matrices;

BigFloat fermat_second_kind(int prec, std::string& detail)
{
    BigFloat d(0, bits_for_digits(prec));
    for (auto [deg, r, s] : {std::tuple{2, 1, 1}, std::tuple{3, 1, 2}, std::tuple{4, 1, 3}, std::tuple{5, 2, 3}}) {
        FermatPeriod f = fermat_period(deg, r, s, prec);
        if (f.kind != FermatKind::third) {
            detail = "r + s = d not classified as a residue form";
            return exact_defect(false, prec);
        }
        d = worst({d, f.third_kind_defect});
    }
    return d;
}

BigFloat bessel_wronskian(int prec, std::string&)
{
    PeriodMatrix m = bessel_period_matrix(prec);
    return worst({m.diagnostic("det_defect"), m.diagnostic("wronskian_defect")});
}

BigFloat dilog_matrix(int prec, std::string&)
{
    PeriodMatrix m = dilog_period_matrix(frac(1, 2), prec);
    ApproxComplex tpi = two_pi_i(prec);
    return worst({m.diagnostic("li2_quadrature_defect"), m.diagnostic("entry12_quadrature_defect"),
                  distance(determinant(m), tpi * tpi * tpi)});
}

BigFloat twisted_gamma_determinant(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    for (int n : {2, 3, 4}) d = worst({d, gamma_twisted_matrix(n, prec).diagnostic("det_formula_defect")});
    return d;
}

BigFloat p1_cohomology(int prec, std::string& detail)
{
    for (int nmax : {4, 6, 8}) {
        derham::P1Cohomology c = derham::verify_p1_truncated(nmax);
        if (c.h0 != 1 || c.h1 != 0 || !c.h2_has_dt_over_t) {
            detail = "unexpected ranks at Nmax = " + std::to_string(nmax);
            return exact_defect(false, prec);
        }
    }
    return exact_defect(true, prec);
}

BigFloat vandermonde_disc(int prec, std::string&)
{
    BigFloat d(0, bits_for_digits(prec));
    const std::vector<std::vector<long>> polys = {{-2, 0, 1}, {1, 0, 1}, {-1, -1, 0, 1}, {1, 1, 1, 1, 1}, {2, 0, 0, 0, 0, 1}};
    for (const auto& c : polys) {
        std::vector<Rational> q(c.begin(), c.end());
        PeriodMatrix m = vandermonde_matrix(RatPoly(std::move(q)), prec);
        d = worst({d, m.diagnostic("disc_defect")});
    }
    return d;
}

} // namespace

void add_matrix_checks(std::vector<CheckSpec>& out)
{
    auto add = [&](std::string name, std::string description, std::vector<std::string> deps, CheckBody body,
                   int max_prec = 0, int tol_exp = 10) {
        CheckSpec c;
        c.name = std::move(name);
        c.description = std::move(description);
        c.dependencies = std::move(deps);
        c.body = std::move(body);
        c.max_prec = max_prec;
        c.tolerance_exp = tol_exp;
        out.push_back(std::move(c));
    };
    add("fermat_second_kind",
        "Fermat periods with r + s = d: (1-z^r)(1-z^s)/d B(r/d, s/d) = -(xi^r + xi^s)/d 2 pi i, xi = e^(pi i/d)",
        {"matrices", "special"}, fermat_second_kind);
    add("bessel_wronskian", "det of the Bessel period matrix is 2 pi i and W(2) = I0 K0' - I0' K0 = -1/2",
        {"matrices", "special"}, bessel_wronskian);
    add("dilog_matrix",
        "alpha = 1/2: Li2 series and (1,2) entry against iterated square integrals, det = (2 pi i)^3",
        {"matrices", "numkernel"}, dilog_matrix, 20, 5);
    add("twisted_gamma_determinant",
        "det((zeta^(ij) - 1)/n Gamma(j/n)) = n^(1/2-n) (2 pi)^((n-1)/2) V for n = 2, 3, 4", {"matrices", "special"},
        twisted_gamma_determinant);
    add("p1_cohomology", "exact: truncated Cech-de Rham complex of P^1 gives h0 = 1, h1 = 0, H^2 spanned by dt/t",
        {"derham"}, p1_cohomology);
    add("vandermonde_disc", "det(alpha_i^j)^2 equals the discriminant for five irreducible polynomials",
        {"matrices", "numkernel"}, vandermonde_disc);
}

} // namespace periods::verify::detail
