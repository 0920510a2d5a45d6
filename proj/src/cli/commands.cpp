#include "periods/cli/commands.hpp"

#include "periods/cli/parse.hpp"
#include "periods/cli/report.hpp"
#include "periods/derham/elliptic.hpp"
#include "periods/derham/gm.hpp"
#include "periods/derham/twisted.hpp"
#include "periods/matrices/named.hpp"
#include "periods/numkernel/errors.hpp"
#include "periods/verify/registry.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

namespace periods::cli {

namespace {

struct VerifyArgs {
    int prec = 30;
    std::string filter;
    std::string json;
    bool list = false;
};

struct EllipticArgs {
    std::string g2, g3;
    int prec = 30;
};

struct ReduceArgs {
    std::string space;
    std::string g2 = "4", g3 = "0";
    std::string R = "0", S = "0";
    std::string form = "0";
    std::string q = "2";
    std::string u = "0", v = "0";
    int n = 2;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.list) {
        for (const auto& c : verify::registry())
            if (a.filter.empty() || verify::glob_match(a.filter, c.name)) out << c.name << "\n";
        return kExitOk;
    }
    std::vector<verify::CheckResult> results = verify::run_all(a.prec, a.filter);
    Report report = make_report(a.prec, results, utc_timestamp());

    std::size_t width = 4;
    for (const auto& r : results) width = std::max(width, r.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "check" << "  status  prec  defect     tolerance  seconds\n";
    for (const auto& r : results) {
        out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(6)
            << matrices::to_string(r.status) << "  " << std::setw(4) << r.prec << "  " << std::setw(9)
            << r.defect.to_string(2) << "  " << std::setw(9) << r.tolerance.to_string(2) << "  " << std::fixed
            << std::setprecision(3) << r.elapsed << std::defaultfloat;
        if (r.status != verify::Status::pass && !r.detail.empty()) out << "  " << r.detail;
        out << "\n";
    }
    out << report.summary.passed << " passed, " << report.summary.failed << " failed, " << report.summary.skipped
        << " skipped\n";

    if (!a.json.empty()) {
        std::ofstream f(a.json, std::ios::binary);
        if (!f) {
            err << "cannot write " << a.json << "\n";
            return kExitUsage;
        }
        f << serialize(report);
    }
    return report.summary.failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_elliptic(const EllipticArgs& a, std::ostream& out)
{
    derham::EllipticCurveQ E(read_rational(a.g2), read_rational(a.g3));
    if (E.discriminant() <= 0) throw UnsupportedDomainError("g2^3 - 27 g3^2 <= 0 (complex roots)");
    matrices::PeriodMatrix m = matrices::elliptic_period_matrix(E, a.prec);
    out << "curve: y^2 = 4x^3 - (" << to_string(E.a()) << ") x - (" << to_string(E.b()) << ")\n";
    out << "omega1 = " << m.at(0, 0).to_string(a.prec) << "\n";
    out << "omega2 = " << m.at(1, 0).to_string(a.prec) << "\n";
    out << "eta1   = " << m.at(0, 1).to_string(a.prec) << "\n";
    out << "eta2   = " << m.at(1, 1).to_string(a.prec) << "\n";
    out << "period matrix (rows sigma1, sigma2; columns dx/y, x dx/y):\n";
    for (std::size_t i = 0; i < 2; ++i)
        out << "  [" << m.at(i, 0).to_string(a.prec) << ", " << m.at(i, 1).to_string(a.prec) << "]\n";
    out << "legendre_defect = " << m.diagnostic("legendre_defect").to_string(3) << "\n";
    return kExitOk;
}

void print_twisted(const derham::Twist& tw, const RatLaurent& form, std::ostream& out)
{
    derham::TwistedReduction r = derham::reduce_twisted(tw, form);
    for (int k = 0; k < tw.rank(); ++k)
        out << "[" << tw.basis_label(k) << "] = " << to_string(r.coeffs[static_cast<std::size_t>(k)]) << "\n";
    out << "certificate P = " << r.certificate.to_string() << "\n";
    out << "check: " << (derham::certificate_holds(tw, form, r) ? "ok" : "FAILED") << "\n";
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out)
{
    if (a.space == "elliptic") {
        derham::EllipticCurveQ E(read_rational(a.g2), read_rational(a.g3));
        derham::EllipticClass form{read_poly(a.R), read_poly(a.S)};
        derham::ReducedElliptic r = derham::reduce_elliptic(E, form);
        out << "c0 = " << to_string(r.c0) << "\n";
        out << "c1 = " << to_string(r.c1) << "\n";
        out << "certificate T = " << r.certificate.T.to_string() << "\n";
        out << "certificate U = " << r.certificate.U.to_string() << "\n";
        out << "check: " << (derham::certificate_holds(E, form, r) ? "ok" : "FAILED") << "\n";
    } else if (a.space == "gm") {
        RatLaurent form = read_laurent(a.form);
        derham::GmReduction r = derham::reduce_gm(form);
        out << "[dx/x] = " << to_string(r.coefficient) << "\n";
        out << "primitive = " << r.primitive.to_string() << "\n";
    } else if (a.space == "relative-log") {
        const Rational q = read_rational(a.q);
        derham::RelativeClass cls{read_laurent(a.form), read_rational(a.u), read_rational(a.v)};
        derham::RelativeReduction r = derham::reduce_relative_log(q, cls);
        out << "[dx/(q-1)] = " << to_string(r.alpha) << "\n";
        out << "[dx/x] = " << to_string(r.beta) << "\n";
        out << "certificate h = " << r.h.to_string() << "\n";
        out << "check: " << (derham::certificate_holds(q, cls, r) ? "ok" : "FAILED") << "\n";
    } else if (a.space == "twisted-power") {
        print_twisted(derham::Twist::power(a.n), read_laurent(a.form), out);
    } else {
        print_twisted(derham::Twist::bessel(), read_laurent(a.form), out);
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Numerical periods laboratory", "periods_lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
    verify->add_option("--prec", va.prec, "decimal digits")->check(CLI::Range(verify::kMinPrec, verify::kMaxPrec));
    verify->add_option("--filter", va.filter, "glob on check names");
    verify->add_option("--json", va.json, "write the JSON report here");
    verify->add_flag("--list", va.list, "print check names and exit");

    EllipticArgs ea;
    CLI::App* elliptic = app.add_subcommand("elliptic", "period matrix of y^2 = 4x^3 - g2 x - g3");
    elliptic->add_option("--g2", ea.g2, "rational g2")->required();
    elliptic->add_option("--g3", ea.g3, "rational g3")->required();
    elliptic->add_option("--prec", ea.prec, "decimal digits")->check(CLI::Range(verify::kMinPrec, verify::kMaxPrec));

    ReduceArgs ra;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a form to the cohomology basis");
    reduce->add_option("--space", ra.space, "cohomology space")
        ->required()
        ->check(CLI::IsMember({"elliptic", "gm", "relative-log", "twisted-power", "twisted-bessel"}));
    reduce->add_option("--g2", ra.g2, "elliptic: rational g2");
    reduce->add_option("--g3", ra.g3, "elliptic: rational g3");
    reduce->add_option("--R", ra.R, "elliptic: R in (R + S y) dx/y");
    reduce->add_option("--S", ra.S, "elliptic: S in (R + S y) dx/y");
    reduce->add_option("--form", ra.form, "Laurent polynomial P in P(x) dx");
    reduce->add_option("--q", ra.q, "relative-log: endpoint q");
    reduce->add_option("--u", ra.u, "relative-log: value at 1");
    reduce->add_option("--v", ra.v, "relative-log: value at q");
    reduce->add_option("--n", ra.n, "twisted-power: exponent n >= 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(va, out, err);
        if (*elliptic) return cmd_elliptic(ea, out);
        return cmd_reduce(ra, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "unsupported domain: " << e.what() << "\n";
        return kExitUnsupportedDomain;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace periods::cli
