#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <cli/commands.hpp>
#include <cli/experiments.hpp>
#include <cli/parse.hpp>
#include <cli/report.hpp>
#include <padebary/errors.hpp>
#include <padebary/io.hpp>

#include "support/oracles.hpp"

using namespace padebary;
using namespace padebary::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "padebary");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("padebary_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  static std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST(ParseComplex, Expressions) {
  EXPECT_EQ(parse_complex("1.5"), cplx{1.5});
  EXPECT_NEAR(std::abs(parse_complex("-3*pi/8") - cplx{-3 * std::numbers::pi / 8}), 0.0, 1e-16);
  EXPECT_EQ(parse_complex("0.2-1.5i"), (cplx{0.2, -1.5}));
  EXPECT_EQ(parse_complex("2i"), (cplx{0.0, 2.0}));
  EXPECT_EQ(parse_complex("(1+i)*(1-i)"), cplx{2.0});
  EXPECT_EQ(parse_complex("1e-3"), cplx{1e-3});
  EXPECT_THROW(parse_complex("1+"), InvalidArgument);
  EXPECT_THROW(parse_complex("abc"), InvalidArgument);
  EXPECT_THROW(parse_complex("1/0"), InvalidArgument);
}

TEST(ParseComplex, Lists) {
  EXPECT_EQ(parse_complex_list("1, 2,3").size(), 3u);
  EXPECT_TRUE(parse_complex_list("").empty());
  EXPECT_THROW(parse_complex_list("1,,2"), InvalidArgument);
}

TEST(ParseGrid, EndpointsAndCount) {
  const auto g = parse_grid("-1.5:1.5:601");
  ASSERT_EQ(g.size(), 601u);
  EXPECT_EQ(g.front(), -1.5);
  EXPECT_EQ(g.back(), 1.5);
  EXPECT_EQ(g[300], 0.0);
  EXPECT_THROW(parse_grid("0:1:1"), InvalidArgument);
  EXPECT_THROW(parse_grid("0:1:2.5"), InvalidArgument);
  EXPECT_THROW(parse_grid("0:1"), InvalidArgument);
}

TEST(ParseReference, Values) {
  EXPECT_EQ(parse_reference("tan-over-t").eval(0.0), cplx{1.0});
  EXPECT_NEAR(std::abs(parse_reference("tan-over-t:2").eval(0.3) - std::tan(0.6) / 0.6), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(parse_reference("log1p-over-t").eval(1.0) - std::log(2.0)), 0.0, 1e-15);
  EXPECT_EQ(parse_reference("geometric:2").eval(0.25), cplx{2.0});
  EXPECT_TRUE(std::isnan(parse_reference("none").eval(0.0).real()));
  EXPECT_THROW(parse_reference("sinc"), InvalidArgument);
  EXPECT_THROW(parse_reference("geometric"), InvalidArgument);
}

TEST(Report, ConstantAgainstConstantHasZeroError) {
  const Approximant r = RationalFunction{Polynomial{2.5}, Polynomial{1.0}};
  const ApproxReport rep = build_report(r, parse_reference("const:2.5"), parse_grid("-1:1:11"));
  for (const double e : rep.abs_err) EXPECT_EQ(e, 0.0);
}

TEST(Report, PolesAreFlaggedNotErrored) {
  const Approximant r = RationalFunction{Polynomial{1.0}, Polynomial{1.0, -1.0}};
  const ApproxReport rep = build_report(r, parse_reference("geometric:1"), parse_grid("0:2:3"));
  EXPECT_TRUE(rep.pole_mask[1]);
  EXPECT_TRUE(std::isinf(rep.abs_err[1]));
  const ErrorRange er = error_range(rep);
  EXPECT_EQ(er.max, std::abs(cplx{-1.0} - cplx{-1.0}));
}

TEST(Experiments, Example2Nodes) {
  EXPECT_EQ(example2_poles(), (CVector{-10.0, -7.75, -5.5, -3.25, -1.0}));
  EXPECT_EQ(example2_zeros(), (CVector{-10.0, -8.0, -6.0, -4.0, -2.0}));
}

TEST(Experiments, ZeroEpsReproducesUnperturbedCurves) {
  PerturbConfig cfg;
  cfg.eps = 0.0;
  cfg.seeds = {1, 2};
  const PerturbOutcome o = run_perturbation(cfg);
  ASSERT_TRUE(o.all_ok());
  const auto methods = build_methods(tan_over_t_series(4.0, 8), example1_poles(4.0), example1_zeros(4.0));
  const Reference ref = parse_reference("tan-over-t:4");
  for (const PerturbRow& row : o.rows) {
    const auto it = std::find_if(methods.begin(), methods.end(), [&](const Method& m) { return m.name == row.method; });
    const ErrorRange er = error_range(build_report(it->approximant, ref, parse_grid(kExample1Grid)));
    EXPECT_EQ(row.min_err, er.min);
    EXPECT_EQ(row.max_err, er.max);
  }
}

TEST_F(CliTest, GenTanOverT) {
  const Outcome o = call({"gen", "tan-over-t", "--omega", "4", "--order", "12", "--out", path("tan.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const FormalPowerSeries c = read_series(path("tan.json"));
  EXPECT_EQ(c.order(), 12);
  EXPECT_NEAR(c[2].real(), 16.0 / 3.0, 1e-14);
}

TEST_F(CliTest, GenExp) {
  ASSERT_EQ(call({"gen", "exp", "--order", "4", "--out", path("exp.json")}).code, 0);
  EXPECT_LT(oracle::max_diff(read_series(path("exp.json")).coeffs(), oracle::exp_coeffs(4)), 1e-16);
}

TEST_F(CliTest, GenUnknownFunctionIsInvalid) { EXPECT_EQ(call({"gen", "sinc"}).code, 3); }

TEST_F(CliTest, GenFileFromCoefficients) {
  ASSERT_EQ(call({"gen", "file", "--coeffs", "5,8,14,26", "--out", path("c.json")}).code, 0);
  EXPECT_EQ(read_series(path("c.json")).coeffs(), (CVector{5, 8, 14, 26}));
  EXPECT_EQ(call({"gen", "file"}).code, 3);
}

TEST_F(CliTest, ApproxPadeExp) {
  ASSERT_EQ(call({"gen", "exp", "--order", "2", "--out", path("exp.json")}).code, 0);
  const Outcome o = call({"approx", "--kind", "pade", "--p", "1", "--q", "1", "--series", path("exp.json"), "--out",
                          path("r.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("contact order: 3"), std::string::npos);
  const auto r = std::get<RationalFunction>(read_approximant(path("r.json")));
  EXPECT_LT(oracle::max_diff(r.num.coeffs(), {1.0, 0.5}), 1e-15);
  EXPECT_LT(oracle::max_diff(r.den.coeffs(), {1.0, -0.5}), 1e-15);

  const Outcome e = call({"expand", "--approx", path("r.json"), "--order", "3"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "0 1 0\n1 1 0\n2 0.5 0\n3 0.25 0\n");
  EXPECT_EQ(call({"expand", "--approx", path("r.json"), "--order", "0"}).out, "0 1 0\n");
}

TEST_F(CliTest, ApproxPfpaWorkedExample) {
  const Outcome o = call({"approx", "--kind", "pfpa", "--k", "1", "--coeffs", "5,8,14,26", "--out", path("pf.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  auto terms = std::get<PartialFraction>(read_approximant(path("pf.json"))).terms;
  std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.p.real() < y.p.real(); });
  EXPECT_NEAR(std::abs(terms[0].a - 2.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(terms[0].p - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(terms[1].a - 3.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(terms[1].p - 2.0), 0.0, 1e-10);
}

TEST_F(CliTest, ApproxExample1Bpa1ThenEvalAndExpand) {
  ASSERT_EQ(call({"gen", "tan-over-t", "--omega", "4", "--order", "8", "--out", path("tan.json")}).code, 0);
  const Outcome o = call({"approx", "--kind", "bpa1", "--series", path("tan.json"), "--poles",
                          "pi/8,-pi/8,3*pi/8,-3*pi/8,5*pi/8", "--zeros", "pi/4,-pi/4,3*pi/4,-3*pi/4,5*pi/4", "--out",
                          path("bpa.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("contact order: 9"), std::string::npos);

  ASSERT_EQ(call({"eval", "--approx", path("bpa.json"), "--grid", "-1.5:1.5:601", "--ref", "tan-over-t:4", "--out",
                  path("e.csv")})
                .code,
            0);
  const std::string csv = slurp(path("e.csv"));
  EXPECT_EQ(count_lines(csv), 602u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,ref_re,ref_im,val_re,val_im,abs_err,is_pole");

  const Outcome e = call({"expand", "--approx", path("bpa.json"), "--order", "8"});
  ASSERT_EQ(e.code, 0);
  std::istringstream in(e.out);
  const CVector expected = oracle::tan_over_t(4.0, 8);
  int k;
  double re, im;
  while (in >> k >> re >> im) EXPECT_NEAR(std::abs(cplx{re, im} - expected[k]), 0.0, 1e-8 * 174.0) << k;
}

TEST_F(CliTest, EvalBadGridIsInvalid) {
  std::ofstream(path("r.json")) << R"({"kind": "rational", "num": [[1, 0]], "den": [[1, 0]]})";
  EXPECT_EQ(call({"eval", "--approx", path("r.json"), "--grid", "0:1:1"}).code, 3);
}

TEST_F(CliTest, ErrorPathsExitCodes) {
  EXPECT_EQ(call({"approx", "--kind", "bpa1", "--coeffs", "1,2,3", "--poles", "1,1", "--zeros", "2"}).code, 3);
  EXPECT_EQ(call({"approx", "--kind", "bpa1", "--coeffs", "1,2,3", "--poles", "0,1", "--zeros", "2"}).code, 3);
  EXPECT_EQ(call({"approx", "--kind", "pade", "--p", "4", "--q", "4", "--coeffs", "1,2,3"}).code, 3);
  EXPECT_EQ(call({"approx", "--kind", "pfpa", "--k", "1", "--coeffs", "1,2,3,4"}).code, 2);
  EXPECT_EQ(call({"approx", "--kind", "pade", "--p", "1", "--q", "1", "--coeffs", "1,0,3"}).code, 2);
  EXPECT_EQ(call({"approx", "--kind", "nope", "--coeffs", "1"}).code, 3);
  EXPECT_EQ(call({"approx", "--kind", "pade", "--coeffs", "1"}).code, 3);
  EXPECT_EQ(call({"eval", "--approx", path("missing.json")}).code, 3);
  EXPECT_EQ(call({"bogus"}).code, 3);
  EXPECT_EQ(call({}).code, 3);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliTest, PerturbFlagsNearCancelledPair) {
  // Seed 2 gives the barycentric approximants a pole-zero pair near t = -0.025,
  // which spoils their computed Taylor coefficients; the run goes on and exits 2.
  const Outcome o = call({"perturb", "--seeds", "1,2,3", "--out", path("p.csv")});
  EXPECT_EQ(o.code, 2);
  const std::string csv = slurp(path("p.csv"));
  EXPECT_NE(csv.find("2,bpa1,failed"), std::string::npos);
  EXPECT_NE(csv.find("near-cancelled pole-zero pair at t = -0.025"), std::string::npos);
  EXPECT_NE(csv.find("summary,pade,3/3"), std::string::npos);
  EXPECT_NE(csv.find("summary,bpa1,2/3"), std::string::npos);
}

TEST_F(CliTest, ReproduceHelpDocumentsSeed) {
  const Outcome o = call({"reproduce", "--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("42"), std::string::npos);
}

TEST_F(CliTest, PerturbWritesSummary) {
  const Outcome o = call({"perturb", "--eps", "1e-4", "--seeds", "42,43,44", "--out", path("p.csv")});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string csv = slurp(path("p.csv"));
  EXPECT_NE(csv.find("3.5528e-05"), std::string::npos);
  EXPECT_NE(csv.find("28663"), std::string::npos);
  EXPECT_NE(csv.find("4.8921e-08"), std::string::npos);
  EXPECT_NE(csv.find("1813.6"), std::string::npos);
  EXPECT_NE(csv.find("summary,bpa1,3/3"), std::string::npos);
  EXPECT_EQ(call({"perturb", "--eps", "-1"}).code, 3);
}

TEST_F(CliTest, ReproduceIsDeterministic) {
  ASSERT_EQ(call({"reproduce", "example1", "--out-dir", path("a"), "--count", "3"}).code, 0);
  ASSERT_EQ(call({"reproduce", "example1", "--out-dir", path("b"), "--count", "3"}).code, 0);
  ASSERT_EQ(call({"reproduce", "example2", "--out-dir", path("a")}).code, 0);
  ASSERT_EQ(call({"reproduce", "example2", "--out-dir", path("b")}).code, 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir_ / "a")) {
    ++files;
    EXPECT_EQ(slurp(entry.path().string()), slurp((dir_ / "b" / entry.path().filename()).string()))
        << entry.path().filename();
  }
  EXPECT_EQ(files, 6u + 6u + 1u + 6u);
  EXPECT_EQ(call({"reproduce", "example3"}).code, 3);
}

TEST_F(CliTest, EmittedJsonRoundTripsToReportedContact) {
  ASSERT_EQ(call({"reproduce", "example2", "--out-dir", path("x")}).code, 0);
  const FormalPowerSeries c = log1p_over_t_series(8);
  for (const char* name : {"pade", "bpa1", "bpa2"}) {
    const Approximant r = read_approximant(dir_ / "x" / (std::string("example2_fig3_") + name + ".json"));
    EXPECT_GE(contact_order(r, c), 9) << name;
  }
}
