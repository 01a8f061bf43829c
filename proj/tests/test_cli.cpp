#include "capillary/curves.hpp"
#include "cli/cli.hpp"
#include "cli/output.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

using namespace capillary;
using namespace capillary::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key) {
    std::istringstream is(text);
    std::string line;
    const std::string prefix = key + " = ";
    while (std::getline(is, line)) {
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    }
    return {};
}

} // namespace

TEST(Output, NumberFormatting) {
    EXPECT_EQ(format_number(0.1, 12), "0.1");
    EXPECT_EQ(format_number(-1.0, 12), "-1");
    EXPECT_EQ(format_number(1.0 / 3.0, 5), "0.33333");
    EXPECT_DOUBLE_EQ(round_to(1.0 / 3.0, 3), 0.333);
    EXPECT_EQ(format_from_string("json"), Format::Json);
    EXPECT_FALSE(format_from_string("xml"));
    OutputSpec s;
    s.precision = 0;
    EXPECT_THROW(s.validate(), std::exception);
}

TEST(Output, CsvRoundTrip) {
    const auto curve = repelling_curve(0.6, 21);
    std::stringstream ss;
    write_curve_csv(ss, curve, 17);
    const auto back = read_curve_csv(ss);
    ASSERT_EQ(back.points.size(), curve.points.size());
    EXPECT_EQ(back.family.regime, Regime::Repelling);
    EXPECT_EQ(back.route, curve.route);
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        EXPECT_EQ(back.points[i].xi, curve.points[i].xi);
        EXPECT_EQ(back.points[i].height, curve.points[i].height);
        EXPECT_EQ(back.points[i].psi, curve.points[i].psi);
    }
}

TEST(Output, JsonRoundTripWithArclength) {
    const auto curve = attracting_curve_arclength(0.9);
    std::stringstream ss;
    write_curve_json(ss, curve, 17);
    const auto back = read_curve_json(ss);
    ASSERT_EQ(back.points.size(), curve.points.size());
    EXPECT_EQ(back.route, Route::ArclengthODE);
    EXPECT_EQ(*back.points.back().s, *curve.points.back().s);
    EXPECT_EQ(back.family.u0, curve.family.u0);
}

namespace {
struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
    char do_thousands_sep() const override { return '.'; }
    std::string do_grouping() const override { return "\3"; }
};
} // namespace

TEST(Output, IndependentOfGlobalLocale) {
    const auto curve = attracting_curve(1.0, 5);
    std::ostringstream before;
    write_curve_csv(before, curve, 12);
    const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
    std::ostringstream after;
    write_curve_csv(after, curve, 12);
    std::istringstream in(after.str());
    const auto back = read_curve_csv(in);
    std::locale::global(saved);
    EXPECT_EQ(before.str(), after.str());
    EXPECT_EQ(back.points.size(), 5u);
}

TEST(Cli, RepellingForce) {
    const auto r = invoke({"force", "--repelling", "--psi0-deg", "60"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("F = -1\n", 0), 0u) << r.out;
}

TEST(Cli, AttractingForceJson) {
    const auto r = invoke({"force", "--attracting", "--u0", "1.5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(doc["F"].get<double>(), 2.25);
    EXPECT_EQ(doc["regime"], "attracting");
}

TEST(Cli, PlatesForwardThenInverse) {
    const auto fwd = invoke({"plates", "--attracting", "--u0", "0.7", "--gamma1-deg", "20", "--gamma2-deg", "40",
                             "--precision", "17"});
    ASSERT_EQ(fwd.code, 0) << fwd.err;
    const std::string sep = value_of(fwd.out, "separation");
    ASSERT_FALSE(sep.empty());
    const auto inv = invoke({"plates", "--attracting", "--separation", sep, "--gamma1-deg", "20", "--gamma2-deg",
                             "40", "--precision", "17"});
    ASSERT_EQ(inv.code, 0) << inv.err;
    EXPECT_NEAR(std::stod(value_of(inv.out, "u0")), 0.7, 1e-9);
}

TEST(Cli, InfeasibleSeparationFails) {
    const auto r =
        invoke({"plates", "--attracting", "--separation", "10", "--gamma1-deg", "0", "--gamma2-deg", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
    EXPECT_EQ(r.out, "");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"force"}).code, 2);
    EXPECT_EQ(invoke({"force", "--attracting", "--repelling"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--attracting"}).code, 2);
    EXPECT_EQ(invoke({"curve", "--repelling", "--psi0-deg", "30", "--psi0-rad", "0.5"}).code, 2);
    EXPECT_EQ(invoke({"figure", "7"}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
}

TEST(Cli, DomainErrorExitsOne) {
    const auto r = invoke({"curve", "--attracting", "--u0", "-1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, CurveCsvParsesBack) {
    const auto r = invoke({"curve", "--repelling", "--psi0-deg", "45", "--samples", "31", "--precision", "17"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream is(r.out);
    const auto curve = read_curve_csv(is);
    EXPECT_EQ(curve.points.size(), 31u);
    EXPECT_NEAR(curve.family.psi0, std::acos(-1.0) / 4.0, 1e-15);
}

TEST(Cli, CurveRoutesAgree) {
    const auto a = invoke({"curve", "--critical", "--route", "arclength", "--psi-min-deg", "10", "--format", "json"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["route"], "arclength-ode");
    EXPECT_NEAR(doc["points"].back()["xi"].get<double>(), 0.0, 1e-7);
}

TEST(Cli, WritesToFile) {
    const std::string path = ::testing::TempDir() + "capillary_fig2.svg";
    const auto r = invoke({"figure", "2", "--format", "svg", "--output", path, "--samples", "21"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_NE(content.str().find("<svg"), std::string::npos);
    EXPECT_NE(content.str().find("<polyline"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Cli, FiguresEmit) {
    for (const char* n : {"1", "2", "3", "4"}) {
        const auto r = invoke({"figure", n, "--samples", "11"});
        EXPECT_EQ(r.code, 0) << "figure " << n << ": " << r.err;
        EXPECT_NE(r.out.find("series"), std::string::npos);
    }
    const auto f1 = invoke({"figure", "1", "--samples", "11"});
    EXPECT_NE(f1.out.find("curvature_sign"), std::string::npos);
}

TEST(Cli, LimitSweepCsv) {
    const auto r = invoke({"limit-sweep"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("u0,shift,distance,error_budget\n", 0), 0u);
    EXPECT_NE(r.out.find("0.00341983"), std::string::npos) << r.out;
}

TEST(Cli, EnvelopeJson) {
    const auto r = invoke({"envelope", "--repelling", "--grid-deg", "10,30,60,90", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["series"].size(), 2u);
}

TEST(Cli, Convert) {
    const auto r = invoke({"convert", "--rho", "1000", "--g", "9.81", "--sigma", "0.072", "--x", "0.001", "--u",
                           "0.002"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double kappa = 1000.0 * 9.81 / 0.072;
    EXPECT_NEAR(std::stod(value_of(r.out, "xi")), 0.001 * std::sqrt(kappa), 1e-9);
    const auto back = invoke({"convert", "--kappa", std::to_string(kappa), "--to-physical", "--x", "1", "--u", "1"});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_NEAR(std::stod(value_of(back.out, "x")), 1.0 / std::sqrt(kappa), 1e-12);
}
