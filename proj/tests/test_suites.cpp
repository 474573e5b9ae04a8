#include <gtest/gtest.h>

#include "gerbeflow/errors.hpp"
#include "gerbeflow/suites.hpp"

using namespace gerbeflow;

namespace {

SuiteConfig config(const std::string& suite, int trials, std::uint64_t seed = 42) {
  SuiteConfig c;
  c.suite = suite;
  c.trials = trials;
  c.seed = seed;
  return c;
}

Json problem(int order, const DiffForm& H, const MultiVector& pi1) {
  return to_json(MCProblem{ArtinRing(order), H, pi1, order});
}

}  // namespace

TEST(RunSuite, EverySuitePassesSmallRuns) {
  for (const auto& name : suite_names()) {
    auto cfg = config(name, 10, 3);
    if (name == "linfty") cfg.tuples = 2;
    Report r = run_suite(cfg);
    EXPECT_EQ(r.trials, 10) << name;
    EXPECT_GT(r.checks, 0) << name;
    EXPECT_TRUE(r.failures.empty()) << r.to_text();
    EXPECT_EQ(r.exit_code(), 0);
  }
}

TEST(RunSuite, PhiDglaExample) {
  auto cfg = config("phi-dgla", 50);
  cfg.dim = 3;
  cfg.max_deg = 2;
  Report r = run_suite(cfg);
  EXPECT_EQ(r.trials, 50);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_GT(r.nonzero_counts.at("chain_map"), 0);
}

TEST(RunSuite, SchoutenSingleTrialBookkeeping) {
  Report r = run_suite(config("schouten", 1, 7));
  EXPECT_EQ(r.trials, 1);
  EXPECT_EQ(r.to_json()["trials"], 1);
  EXPECT_EQ(r.to_json()["rng"], "mt19937_64/v1");
}

TEST(RunSuite, NegativeControlReportsExpectedFailures) {
  auto cfg = config("linfty", 3);
  cfg.dim = 4;
  cfg.negative_control = true;
  Report r = run_suite(cfg);
  EXPECT_GE(r.expected_negative_count(), 1);
  EXPECT_EQ(r.unexpected_failures("defect_equals_phi_dH"), 0);
  EXPECT_EQ(r.exit_code(), 1);
  for (const auto& f : r.failures) EXPECT_TRUE(f.expected_negative);
}

TEST(RunSuite, Determinism) {
  for (const auto& name : {"phi-dgla", "mc", "hkr"}) {
    auto a = run_suite(config(name, 15, 99)), b = run_suite(config(name, 15, 99));
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
    EXPECT_EQ(a.to_text(false), b.to_text(false));
  }
  auto a = run_suite(config("schouten", 5, 1)), b = run_suite(config("schouten", 5, 2));
  EXPECT_EQ(a.trials, b.trials);
}

TEST(RunSuite, FailureInputsRoundTrip) {
  auto cfg = config("linfty", 2);
  cfg.dim = 4;
  cfg.negative_control = true;
  Report r = run_suite(cfg);
  ASSERT_FALSE(r.failures.empty());
  Json j = Json::parse(r.to_json().dump());
  const ArtinRing ring{};
  for (const auto& f : j["failures"]) {
    DiffForm H = diffform_from_json(f["inputs"]["H"], ring);
    EXPECT_EQ(to_json(H), f["inputs"]["H"]);
    for (const auto& a : f["inputs"]["args"]) EXPECT_EQ(to_json(multivector_from_json(a, ring)), a);
    EXPECT_EQ(to_json(multivector_from_json(f["lhs"], ring)), f["lhs"]);
  }
}

TEST(RunSuite, ConfigValidation) {
  EXPECT_THROW(run_suite(config("nope", 1)), UsageError);
  EXPECT_THROW(run_suite(config("schouten", 0)), UsageError);
  auto cfg = config("linfty", 1);
  cfg.dim = 2;
  EXPECT_THROW(run_suite(cfg), UsageError);
  cfg = config("schouten", 1);
  cfg.negative_control = true;
  EXPECT_THROW(run_suite(cfg), UsageError);
}

TEST(McJob, ReferenceExamples) {
  Chart c3{3, ArtinRing(4)};
  MultiVector dxdy = MultiVector::basis(c3, {0, 1});

  Chart flat{3, ArtinRing(3)};
  auto r0 = mc_job(problem(3, DiffForm(flat), MultiVector::basis(flat, {0, 1})), McMode::Solve);
  EXPECT_EQ(r0.output["status"], "solved");
  EXPECT_EQ(r0.exit_code, 0);

  auto r1 = mc_job(problem(4, DiffForm::basis(c3, {0, 1, 2}), dxdy), McMode::Solve);
  EXPECT_EQ(r1.output["status"], "solved");
  EXPECT_TRUE(multivector_from_json(r1.output["residual"], c3.ring).is_zero());
  EXPECT_EQ(r1.exit_code, 0);
  EXPECT_TRUE(r1.report.failures.empty());

  MultiVector bad = MultiVector::basis(flat, {0, 1}) + MultiVector::basis(flat, {1, 2}, Poly::variable(1, 3, flat.ring));
  auto r2 = mc_job(problem(3, DiffForm(flat), bad), McMode::Solve);
  EXPECT_EQ(r2.output["status"], "obstructed");
  EXPECT_EQ(r2.output["order"], 2);
  EXPECT_EQ(r2.exit_code, 3);
  EXPECT_FALSE(r2.report.failures.empty());
}

TEST(McJob, CheckMode) {
  Chart c4{4, ArtinRing(4)};
  MultiVector p1 = MultiVector::basis(c4, {0, 1}) + MultiVector::basis(c4, {2, 3});
  Json prob = problem(4, DiffForm::basis(c4, {0, 1, 2}), p1);
  auto naive = mc_job(prob, McMode::Check);
  EXPECT_EQ(naive.output["status"], "obstructed");
  EXPECT_EQ(naive.output["order"], 3);
  EXPECT_EQ(naive.exit_code, 3);

  auto solved = mc_job(prob, McMode::Solve);
  ASSERT_EQ(solved.output["status"], "solved");
  prob["pi"] = solved.output["pi"];
  auto checked = mc_job(prob, McMode::Check);
  EXPECT_EQ(checked.output["status"], "solved");
  EXPECT_EQ(checked.exit_code, 0);
}

TEST(McJob, Malformed) {
  EXPECT_THROW(mc_job(Json::parse(R"({"ring":3})"), McMode::Solve), ParseError);
  Chart c{4, ArtinRing(2)};
  Json open = problem(2, DiffForm::basis(c, {1, 2, 3}, Poly::variable(0, 4, c.ring)), MultiVector::basis(c, {0, 1}));
  EXPECT_THROW(mc_job(open, McMode::Solve), DomainError);
}
