// One line per acceptance criterion. Exit status is 0 iff every criterion
// passes, except those listed as expected failures, which must still fail.

#include "periods/derham/elliptic.hpp"
#include "periods/derham/gm.hpp"
#include "periods/derham/twisted.hpp"
#include "periods/matrices/named.hpp"
#include "periods/numkernel/ratpoly.hpp"
#include "periods/special/hypergeometric.hpp"
#include "periods/verify/registry.hpp"

#include "../support/generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace periods;
using namespace periods::derham;
using periods::matrices::PeriodMatrix;
using periods::testing::random_laurent;
using periods::testing::random_poly;
using periods::testing::random_rational;

namespace {

struct Part {
    std::string label;
    BigFloat defect;
    long exp10; // passes iff defect < 10^exp10
};

struct Outcome {
    std::vector<Part> parts;
    std::string note;
};

struct Criterion {
    std::string id;
    std::string title;
    double budget_s;
    bool xfail;
    std::function<Outcome()> run;
};

bool below(const BigFloat& d, long e)
{
    return d.is_finite() && d < BigFloat::pow10(e, d.bits() < 64 ? 64 : d.bits());
}

BigFloat exact(bool ok) { return BigFloat(ok ? 0 : 1, 64); }

BigFloat check_defect(const std::string& name, int prec)
{
    return verify::run_check(name, prec).defect;
}

Outcome beukers(const Rational& z2, int prec)
{
    const mpfr_prec_t bits = bits_for_digits(prec);
    ApproxComplex first = special::hyp2f1(frac(1, 12), frac(5, 12), frac(1, 2), ApproxComplex(frac(1323, 1331), prec), prec);
    BigFloat first_rhs = 3 * sqrt(sqrt(BigFloat(11, bits))) / 4;
    ApproxComplex second = special::hyp2f1(frac(1, 12), frac(7, 12), frac(2, 3), ApproxComplex(z2, prec), prec);
    BigFloat second_rhs = 2 * pow(BigFloat(253, bits), BigFloat(frac(1, 6), bits)) / 3;
    return {{{"1323/1331", distance(first, ApproxComplex(first_rhs, prec)), -30},
             {to_string(z2), distance(second, ApproxComplex(second_rhs, prec)), -30}},
            ""};
}

EllipticCurveQ random_curve(std::mt19937_64& rng)
{
    while (true) {
        Rational a = random_rational(rng, 9), b = random_rational(rng, 9);
        if (a * a * a != 27 * b * b) return EllipticCurveQ(a, b);
    }
}

Rational random_q(std::mt19937_64& rng)
{
    while (true) {
        Rational q = random_rational(rng, 9);
        if (q != 0 && q != 1) return q;
    }
}

RatLaurent twisted_form(std::mt19937_64& rng, const Twist& tw)
{
    return tw.kind() == Twist::Kind::power ? RatLaurent(random_poly(rng, 10)) : random_laurent(rng, -5, 5);
}

std::vector<Rational> combine(const std::vector<Rational>& a, const Rational& l, const std::vector<Rational>& b)
{
    std::vector<Rational> out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] + l * b[k]);
    return out;
}

// Counts failures over 200 random forms per space.
Outcome property_suites()
{
    constexpr int kForms = 200;
    std::mt19937_64 rng(20240611);
    int cert_bad = 0, exact_bad = 0, linear_bad = 0, idem_bad = 0;

    for (int i = 0; i < kForms; ++i) {
        EllipticCurveQ E = random_curve(rng);
        EllipticClass f{random_poly(rng, 8), random_poly(rng, 4)};
        EllipticClass g{random_poly(rng, 8), random_poly(rng, 4)};
        Rational l = random_rational(rng);
        ReducedElliptic rf = reduce_elliptic(E, f), rg = reduce_elliptic(E, g);
        cert_bad += !certificate_holds(E, f, rf);
        ReducedElliptic z = reduce_elliptic(E, exact_form(E, {random_poly(rng, 5), random_poly(rng, 5)}));
        exact_bad += !(z.c0 == 0 && z.c1 == 0);
        ReducedElliptic s = reduce_elliptic(E, {f.R + l * g.R, f.S + l * g.S});
        linear_bad += !(s.c0 == rf.c0 + l * rg.c0 && s.c1 == rf.c1 + l * rg.c1);
        ReducedElliptic again = reduce_elliptic(E, {RatPoly(std::vector<Rational>{rf.c0, rf.c1}), RatPoly()});
        idem_bad += !(again.c0 == rf.c0 && again.c1 == rf.c1);
    }

    for (int i = 0; i < kForms; ++i) {
        RatLaurent f = random_laurent(rng, -6, 6), g = random_laurent(rng, -6, 6);
        Rational l = random_rational(rng);
        GmReduction rf = reduce_gm(f), rg = reduce_gm(g);
        cert_bad += !(RatLaurent::monomial(rf.coefficient, -1) + rf.primitive.derivative() == f);
        exact_bad += !(reduce_gm(random_laurent(rng, -6, 6).derivative()).coefficient == 0);
        linear_bad += !(reduce_gm(f + l * g).coefficient == rf.coefficient + l * rg.coefficient);
        idem_bad += !(reduce_gm(RatLaurent::monomial(rf.coefficient, -1)).coefficient == rf.coefficient);
    }

    for (int i = 0; i < kForms; ++i) {
        Rational q = random_q(rng);
        RelativeClass f{random_laurent(rng, -5, 5), random_rational(rng), random_rational(rng)};
        RelativeClass g{random_laurent(rng, -5, 5), random_rational(rng), random_rational(rng)};
        Rational l = random_rational(rng);
        RelativeReduction rf = reduce_relative_log(q, f), rg = reduce_relative_log(q, g);
        cert_bad += !certificate_holds(q, f, rf);
        RelativeReduction z = reduce_relative_log(q, relative_coboundary(q, random_laurent(rng, -5, 5)));
        exact_bad += !(z.alpha == 0 && z.beta == 0);
        RelativeReduction s = reduce_relative_log(q, {f.form + l * g.form, f.u + l * g.u, f.v + l * g.v});
        linear_bad += !(s.alpha == rf.alpha + l * rg.alpha && s.beta == rf.beta + l * rg.beta);
        RatLaurent rep = (rf.alpha / (q - 1)) * RatLaurent(1) + RatLaurent::monomial(rf.beta, -1);
        RelativeReduction again = reduce_relative_log(q, {rep, 0, 0});
        idem_bad += !(again.alpha == rf.alpha && again.beta == rf.beta);
    }

    const std::vector<Twist> twists = {Twist::power(2), Twist::power(3), Twist::power(4), Twist::power(5),
                                       Twist::bessel()};
    for (const Twist& tw : twists) {
        for (int i = 0; i < kForms; ++i) {
            RatLaurent f = twisted_form(rng, tw), g = twisted_form(rng, tw);
            Rational l = random_rational(rng);
            TwistedReduction rf = reduce_twisted(tw, f), rg = reduce_twisted(tw, g);
            cert_bad += !certificate_holds(tw, f, rf);
            TwistedReduction z = reduce_twisted(tw, tw.d(twisted_form(rng, tw)));
            bool zero = true;
            for (const Rational& c : z.coeffs) zero = zero && c == 0;
            exact_bad += !zero;
            linear_bad += !(reduce_twisted(tw, f + l * g).coeffs == combine(rf.coeffs, l, rg.coeffs));
            RatLaurent rep;
            for (int k = 0; k < tw.rank(); ++k) rep += RatLaurent::monomial(rf.coeffs[static_cast<std::size_t>(k)], tw.basis_degree(k));
            idem_bad += !(reduce_twisted(tw, rep).coeffs == rf.coeffs);
        }
    }

    Outcome o;
    o.parts = {{"certificates", exact(cert_bad == 0), 0},
               {"exact forms", exact(exact_bad == 0), 0},
               {"linearity", exact(linear_bad == 0), 0},
               {"idempotence", exact(idem_bad == 0), 0},
               {"P1 Nmax 4,6,8", check_defect("p1_cohomology", 30), 0},
               {"Liouville n<=5", check_defect("liouville_witness", 30), 0}};
    o.note = "8 spaces x " + std::to_string(kForms) + " forms";
    return o;
}

std::vector<Criterion> criteria()
{
    std::vector<Criterion> c;
    c.push_back({"1", "zeta(2), zeta(4), zeta(6) closed forms, prec 50", 1, false,
                 [] { return Outcome{{{"zeta_even", check_defect("zeta_even", 50), -40}}, ""}; }});
    c.push_back({"2", "Legendre relation, prec 50", 5, false, [] {
                     Outcome o;
                     for (auto [a, b] : {std::pair{4L, 0L}, std::pair{8L, 1L}}) {
                         PeriodMatrix m = matrices::elliptic_period_matrix(EllipticCurveQ(a, b), 50);
                         o.parts.push_back({"g2=" + std::to_string(a) + ",g3=" + std::to_string(b),
                                            m.diagnostic("legendre_defect"), -40});
                     }
                     return o;
                 }});
    c.push_back({"3", "omega1(4,0) = Gamma(1/4)^2/(2 sqrt(2 pi)), prec 50", 3, false,
                 [] { return Outcome{{{"cm", check_defect("cm_lemniscatic", 50), -40}}, ""}; }});
    c.push_back({"4a", "2F1 identities at 1323/1331 and literal 6400/64009, prec 40", 3, true,
                 [] { return beukers(frac(6400, 64009), 40); }});
    c.push_back({"4b", "2F1 identities at 1323/1331 and corrected 64000/64009, prec 40", 3, false,
                 [] { return beukers(frac(64000, 64009), 40); }});
    c.push_back({"5", "Bessel matrix det = 2 pi i and W(2) = -1/2, prec 40", 5, false, [] {
                     PeriodMatrix m = matrices::bessel_period_matrix(40);
                     return Outcome{{{"det", m.diagnostic("det_defect"), -30},
                                     {"wronskian", m.diagnostic("wronskian_defect"), -30}},
                                    ""};
                 }});
    c.push_back({"6", "twisted Gamma determinant n = 2, 3, 4, prec 40", 3, false, [] {
                     Outcome o;
                     for (int n : {2, 3, 4}) {
                         PeriodMatrix m = matrices::gamma_twisted_matrix(n, 40);
                         o.parts.push_back({"n=" + std::to_string(n), m.diagnostic("det_formula_defect"), -30});
                     }
                     return o;
                 }});
    c.push_back({"7", "zeta(2) zeta(3) = zeta(2,3) + zeta(3,2) + zeta(5), prec 15", 30, false,
                 [] { return Outcome{{{"stuffle", check_defect("mzv_stuffle", 15), -12}}, ""}; }});
    c.push_back({"8", "dilog matrix at alpha = 1/2, prec 15", 60, false, [] {
                     const int prec = 15;
                     PeriodMatrix m = matrices::dilog_period_matrix(frac(1, 2), prec);
                     bool triangular = true;
                     for (std::size_t i = 0; i < 3; ++i)
                         for (std::size_t j = 0; j < i; ++j) triangular = triangular && m.at(i, j).is_zero();
                     ApproxComplex diag = m.at(0, 0) * m.at(1, 1) * m.at(2, 2);
                     ApproxComplex tpi = two_pi_i(prec);
                     BigFloat det_gap = distance(diag, tpi * tpi * tpi);
                     return Outcome{{{"Li2 series vs quadrature", m.diagnostic("li2_quadrature_defect"), -10},
                                     {"(1,2) entry", m.diagnostic("entry12_quadrature_defect"), -10},
                                     {"triangular", exact(triangular), 0},
                                     {"diagonal product", det_gap, -10}},
                                    ""};
                 }});
    c.push_back({"9", "Fermat B-formula vs algebraic multiple of 2 pi i, prec 40", 2, false, [] {
                     Outcome o;
                     for (auto [d, r, s] : {std::tuple{2, 1, 1}, std::tuple{3, 1, 2}, std::tuple{4, 1, 3}}) {
                         matrices::FermatPeriod p = matrices::fermat_period(d, r, s, 40);
                         BigFloat defect = p.kind == matrices::FermatKind::third ? p.third_kind_defect : exact(false);
                         o.parts.push_back({"(" + std::to_string(d) + "," + std::to_string(r) + "," + std::to_string(s) + ")",
                                            defect, -30});
                     }
                     return o;
                 }});
    c.push_back({"10", "Eisenstein zeros, modularity and quasi-modularity, prec 30", 10, false, [] {
                     return Outcome{{{"zeros", check_defect("eisenstein_zeros", 30), -20},
                                     {"G4,G6", check_defect("modularity_G4G6", 30), -20},
                                     {"G2", check_defect("quasimodularity_G2", 30), -20}},
                                    ""};
                 }});
    c.push_back({"11", "exact property suites", 10, false, property_suites});
    c.push_back({"12", "sigma1 periods of 10 random classes on (8,1) vs c0 omega1 + c1 eta1, prec 25", 60, false,
                 [] { return Outcome{{{"roundtrip", check_defect("elliptic_reduction_roundtrip", 25), -15}}, ""}; }});
    return c;
}

} // namespace

int main()
{
    int unexpected = 0;
    for (const Criterion& c : criteria()) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        bool ok = error.empty();
        std::string parts;
        for (const Part& p : o.parts) {
            bool part_ok = below(p.defect, p.exp10);
            ok = ok && part_ok;
            if (!parts.empty()) parts += "; ";
            if (p.exp10 == 0)
                parts += p.label + (part_ok ? " ok" : " broken"); // exact checks report 0 or 1
            else
                parts += p.label + " " + p.defect.to_string(3) + (part_ok ? " < " : " !< ") + "1e" + std::to_string(p.exp10);
        }
        bool in_time = elapsed < c.budget_s;
        ok = ok && in_time;

        const char* verdict = ok ? (c.xfail ? "PASS (unexpected, xfail)" : "PASS") : (c.xfail ? "FAIL (xfail, see ledger)" : "FAIL");
        if (ok == c.xfail) ++unexpected;
        std::printf("%-4s %-26s %s\n", c.id.c_str(), verdict, c.title.c_str());
        if (!error.empty()) std::printf("     error: %s\n", error.c_str());
        if (!parts.empty()) std::printf("     %s\n", parts.c_str());
        std::printf("     %.2f s (budget %.0f s)%s%s\n", elapsed, c.budget_s, in_time ? "" : " over budget",
                    o.note.empty() ? "" : ("; " + o.note).c_str());
    }
    std::printf("%s\n", unexpected == 0 ? "acceptance: all criteria as expected" : "acceptance: unexpected results");
    return unexpected == 0 ? 0 : 1;
}
