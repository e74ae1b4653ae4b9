#include <gtest/gtest.h>

#include "qbessel/report.hpp"

using namespace qbessel;

TEST(ReportJson, RelationReportShape) {
  const auto rep = rep_little_q_jacobi(Rational(1, 2), Rational(1, 3), Rational(3, 4), Rational(1, 2));
  const Json j = to_json(check_relation(rep, "YX-qXY", 6));
  for (const char* key : {"relation_id", "params", "max_degree", "measured_constants", "paper_constants",
                          "exact_match", "residual_degrees"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["params"]["q"], "1/2");
  EXPECT_EQ(j["measured_constants"]["Id"], "-16/9");
  EXPECT_EQ(j["residual_degrees"].size(), 7u);
  EXPECT_TRUE(j["residual_degrees"][0].is_null());
}

TEST(ReportJson, PolynomialShape) {
  const Json j = to_json(little_q_jacobi(2, Rational(1, 2), Rational(1, 3), Rational(3, 4)));
  EXPECT_EQ(j["family"], "little_q_jacobi");
  EXPECT_EQ(j["coeffs"][2], Json({2, "17577/7040"}));
}

TEST(ReportJson, LimitShape) {
  const Json j = to_json(run_limit(bessoula_case(Rational(1, 4))));
  for (const char* key : {"case_id", "params", "path", "errors", "rate", "passed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(ReportJson, ChecksAreSortedAndCounted) {
  std::vector<CheckEntry> e{{"b", "g", true, false, {}}, {"a", "g", false, false, {}}, {"c", "g", false, true, {}}};
  const Json j = checks_json(e);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["summary"]["informational"], 1);
  EXPECT_EQ(j["summary"]["failed_ids"], Json({"a"}));
  EXPECT_FALSE(j["summary"]["all_passed"]);
}

TEST(ReportBattery, AlgebraSectionIsDeterministic) {
  const std::string a = checks_json(algebra_checks(8)).dump();
  const std::string b = checks_json(algebra_checks(8)).dump();
  EXPECT_EQ(a, b);
}
