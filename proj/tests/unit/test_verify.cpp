#include <gtest/gtest.h>

#include "f2v/error.hpp"
#include "f2v/verify.hpp"

using namespace f2v;

TEST(Verify, EverySuitePasses) {
  VerifyOptions opt;
  opt.jobs = 2;
  for (const auto& name : suite_names()) {
    const Json report = run_suite(name, opt);
    EXPECT_EQ(report.at("suite"), name);
    EXPECT_TRUE(report.at("passed").get<bool>()) << report.dump(2);
    EXPECT_FALSE(report.at("checks").empty());
  }
}

TEST(Verify, UnknownSuite) {
  try {
    run_suite("bogus", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Verify, ReportsAreDeterministic) {
  VerifyOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(run_suite("theorem", one).dump(), run_suite("theorem", four).dump());
  EXPECT_EQ(scan_class(MatrixClass::TwelveClass, 2, 1).dump(), scan_class(MatrixClass::TwelveClass, 2, 3).dump());
}

TEST(Verify, TheoremCountsAtLevelTwo) {
  const Json r = run_suite("theorem", {});
  const Json& c = r.at("checks").at(0);
  EXPECT_EQ(c.at("quadruples"), 1820);
  EXPECT_EQ(c.at("squares"), 4);
}

TEST(Verify, ScanClassSummaries) {
  const Json twelve = scan_class(MatrixClass::TwelveClass, 2, 2);
  EXPECT_TRUE(twelve.at("identical_tables").get<bool>());
  EXPECT_EQ(twelve.at("matrices").size(), 12U);
  const Json twenty_six = scan_class(MatrixClass::TwentySixClass, 2, 2);
  EXPECT_TRUE(twenty_six.at("all_independent").get<bool>());
  const Json other = scan_class(MatrixClass::Other, 1, 2);
  EXPECT_EQ(other.at("scope"), "exploratory");
}

TEST(Verify, AnalyzeReference) {
  const Json a = analyze_matrix(VertexModel::from_encoding("011001101"));
  EXPECT_EQ(a.at("class"), "TwelveClass");
  EXPECT_EQ(a.at("eigenvectors"), Json::array({"111"}));
  EXPECT_EQ(a.at("distribution").at("Q"), Json::array({"1", "0"}));
  EXPECT_EQ(a.at("distribution_transposed").at("Q"), Json::array({"1", "1"}));
  const Json z = analyze_matrix(VertexModel::from_encoding("000000000"));
  EXPECT_EQ(z.at("class"), "DeltaZero");
  EXPECT_FALSE(z.contains("distribution"));
}

TEST(Verify, ProbabilityJson) {
  const Json p = probability_json(DyadicProbability::one_over_pow2(3));
  EXPECT_EQ(p.at("exact"), "1/2^3");
  EXPECT_DOUBLE_EQ(p.at("decimal").get<double>(), 0.125);
}
