#include "periods/cli/commands.hpp"
#include "periods/cli/parse.hpp"
#include "periods/cli/report.hpp"

#include "../support/generators.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace periods;
using namespace periods::cli;

namespace {

struct LabRun {
    int code;
    std::string out;
    std::string err;
};

LabRun lab(std::vector<std::string> args)
{
    args.insert(args.begin(), "periods_lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string line_with(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(key, 0) == 0) return line.substr(key.size());
    return {};
}

std::string temp_path(const char* name) { return ::testing::TempDir() + name; }

} // namespace

TEST(Parse, Rationals)
{
    EXPECT_EQ(read_rational("7"), Rational(7));
    EXPECT_EQ(read_rational(" -3/4 "), Rational(-3, 4));
    EXPECT_EQ(read_rational("6/4"), Rational(3, 2));
    EXPECT_THROW(read_rational("1/0"), ParseError);
    EXPECT_THROW(read_rational("1.5"), ParseError);
    EXPECT_THROW(read_rational(""), ParseError);
    EXPECT_THROW(read_rational("x"), ParseError);
}

TEST(Parse, Polynomials)
{
    RatPoly p = read_poly("3/2*x^2 - x + 5");
    EXPECT_EQ(p, RatPoly(std::vector<Rational>{5, -1, Rational(3, 2)}));
    EXPECT_EQ(read_poly("0"), RatPoly());
    EXPECT_EQ(read_poly("x - x"), RatPoly());
    EXPECT_EQ(read_poly("-x^3"), RatPoly::monomial(-1, 3));
    EXPECT_THROW(read_poly("x^-1"), ParseError);
    EXPECT_THROW(read_poly("2*"), ParseError);
    EXPECT_THROW(read_poly("x^"), ParseError);
    EXPECT_THROW(read_poly("x + + 1"), ParseError);
    EXPECT_THROW(read_poly("sin(x)"), ParseError);
}

TEST(Parse, Laurent)
{
    RatLaurent l = read_laurent("2*x^-1 + 5*x");
    EXPECT_EQ(l, RatLaurent::monomial(2, -1) + RatLaurent::monomial(5, 1));
    EXPECT_EQ(read_laurent("x^-2 - 1/3"), RatLaurent::monomial(1, -2) + RatLaurent(Rational(-1, 3)));
}

TEST(Parse, PrintedFormsReadBack)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        RatLaurent l = periods::testing::random_laurent(rng, -4, 4);
        EXPECT_EQ(read_laurent(l.to_string()), l) << l.to_string();
        RatPoly p = periods::testing::random_poly(rng, 6);
        EXPECT_EQ(read_poly(p.to_string()), p) << p.to_string();
    }
}

TEST(Report, RoundTripIsByteIdentical)
{
    std::vector<verify::CheckResult> results(2);
    results[0].name = "a_check";
    results[0].status = verify::Status::pass;
    results[0].defect = BigFloat::pow10(-33, bits_for_digits(30)) * 3;
    results[0].tolerance = BigFloat::pow10(-20, bits_for_digits(30));
    results[0].prec = 30;
    results[0].elapsed = 0.1234567890123;
    results[1].name = "b_check";
    results[1].status = verify::Status::fail;
    results[1].defect = BigFloat(bits_for_digits(20)); // NaN from a numeric failure
    results[1].tolerance = BigFloat::pow10(-10, bits_for_digits(20));
    results[1].prec = 20;
    results[1].elapsed = 2.5e-7;
    Report r = make_report(30, results, "2024-01-02T03:04:05Z");
    EXPECT_EQ(r.summary.passed, 1);
    EXPECT_EQ(r.summary.failed, 1);
    const std::string s = serialize(r);
    const auto j = nlohmann::json::parse(s);
    EXPECT_EQ(j.dump(2) + "\n", s);
    EXPECT_EQ(serialize(report_from_json(j)), s);
    EXPECT_TRUE(j["results"][0]["defect"].is_string());
    EXPECT_EQ(j["results"][0]["defect"].get<std::string>().substr(0, 6), "3.0000");
}

TEST(Report, SummaryMustMatch)
{
    Report r = make_report(20, {}, "2024-01-02T03:04:05Z");
    auto j = to_json(r);
    j["summary"]["passed"] = 1;
    EXPECT_THROW(report_from_json(j), std::invalid_argument);
    EXPECT_EQ(utc_timestamp().size(), 20u);
}

TEST(Commands, VerifyFilterAndJson)
{
    const std::string path = temp_path("periods_lab_report.json");
    LabRun r = lab({"verify", "--filter", "legendre_*", "--prec", "40", "--json", path});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto j = nlohmann::json::parse(buf.str());
    EXPECT_EQ(j["results"].size(), 2u);
    EXPECT_EQ(j["prec"], 40);
    EXPECT_EQ(j["summary"]["passed"], 2);
    EXPECT_EQ(serialize(report_from_json(j)), buf.str());
    std::remove(path.c_str());
}

TEST(Commands, VerifyUsage)
{
    EXPECT_EQ(lab({"verify", "--prec", "5"}).code, kExitUsage);
    EXPECT_EQ(lab({"verify", "--prec", "101"}).code, kExitUsage);
    EXPECT_EQ(lab({"verify", "--bogus"}).code, kExitUsage);
    EXPECT_EQ(lab({}).code, kExitUsage);
    LabRun list = lab({"verify", "--list"});
    EXPECT_EQ(list.code, kExitOk);
    EXPECT_NE(list.out.find("legendre_relation_generic\n"), std::string::npos);
    EXPECT_EQ(lab({"verify", "--filter", "no_match_*"}).code, kExitOk);
    EXPECT_EQ(lab({"--help"}).code, kExitOk);
}

TEST(Commands, Elliptic)
{
    LabRun r = lab({"elliptic", "--g2", "4", "--g3", "0", "--prec", "40"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(line_with(r.out, "omega1 = ").substr(0, 18), "2.6220575542921198");

    LabRun g = lab({"elliptic", "--g2", "8", "--g3", "1", "--prec", "30"});
    EXPECT_EQ(g.code, kExitOk);
    double defect = std::stod(line_with(g.out, "legendre_defect = "));
    EXPECT_LT(defect, 1e-20);

    LabRun bad = lab({"elliptic", "--g2", "1", "--g3", "1"});
    EXPECT_EQ(bad.code, kExitUnsupportedDomain);
    EXPECT_NE(bad.err.find("unsupported domain"), std::string::npos);
    EXPECT_EQ(lab({"elliptic", "--g2", "3", "--g3", "1"}).code, kExitUnsupportedDomain); // singular
    EXPECT_EQ(lab({"elliptic", "--g2", "x", "--g3", "1"}).code, kExitUsage);
    EXPECT_EQ(lab({"elliptic", "--g2", "4"}).code, kExitUsage);
}

TEST(Commands, Reduce)
{
    LabRun e = lab({"reduce", "--space", "elliptic", "--g2", "4", "--g3", "0", "--R", "x^2", "--S", "0"});
    EXPECT_EQ(e.code, kExitOk) << e.err;
    EXPECT_EQ(line_with(e.out, "c0 = "), "1/3");
    EXPECT_EQ(line_with(e.out, "c1 = "), "0");
    EXPECT_EQ(line_with(e.out, "check: "), "ok");

    LabRun gm = lab({"reduce", "--space", "gm", "--form", "2*x^-1 + 5*x"});
    EXPECT_EQ(line_with(gm.out, "[dx/x] = "), "2");

    LabRun tp = lab({"reduce", "--space", "twisted-power", "--n", "2", "--form", "x^2"});
    EXPECT_EQ(line_with(tp.out, "[dx] = "), "1/2");

    LabRun tb = lab({"reduce", "--space", "twisted-bessel", "--form", "x^-3 + 2"});
    EXPECT_EQ(line_with(tb.out, "check: "), "ok");

    LabRun rl = lab({"reduce", "--space", "relative-log", "--q", "3", "--form", "x^-1 + 1", "--u", "1", "--v", "2"});
    EXPECT_EQ(line_with(rl.out, "check: "), "ok");

    EXPECT_EQ(lab({"reduce", "--space", "gm", "--form", "2*y"}).code, kExitUsage);
    EXPECT_EQ(lab({"reduce", "--space", "nowhere"}).code, kExitUsage);
    EXPECT_EQ(lab({"reduce", "--space", "twisted-power", "--n", "1", "--form", "x"}).code, kExitUnsupportedDomain);
}
