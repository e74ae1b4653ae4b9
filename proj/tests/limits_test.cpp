#include <gtest/gtest.h>

#include <cmath>

#include "qbessel/limits.hpp"

using namespace qbessel;

namespace {

LimitCase toy_case(std::function<double(double)> err) {
  LimitCase c;
  c.id = "toy";
  c.path_label = "h";
  c.path = {0.1, 0.05, 0.025, 0.0125};
  c.eval_labels = {"x=0"};
  c.target = {HighReal(1)};
  c.source = [err](double h) { return std::vector<HighReal>{HighReal(1 + err(h))}; };
  return c;
}

}  // namespace

TEST(RunLimit, EstimatesAlgebraicRate) {
  auto c = toy_case([](double h) { return 3 * h * h; });
  c.tolerance = 1e-3;
  const auto r = run_limit(c);
  EXPECT_TRUE(r.decreasing);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.estimated_rate, 2.0, 1e-10);
  EXPECT_NEAR(r.errors.back(), 3 * 0.0125 * 0.0125, 1e-15);
}

TEST(RunLimit, NonMonotonePathFails) {
  const auto r = run_limit(toy_case([](double h) { return h == 0.025 ? 1.0 : 1e-9; }));
  EXPECT_FALSE(r.decreasing);
  EXPECT_FALSE(r.passed);
}

TEST(RunLimit, FinalErrorAboveToleranceFails) {
  auto c = toy_case([](double h) { return h; });
  const auto r = run_limit(c);
  EXPECT_TRUE(r.decreasing);
  EXPECT_FALSE(r.passed);
}

TEST(RunLimit, MalformedCases) {
  auto c = toy_case([](double h) { return h; });
  c.path = {0.1, 0.05};
  EXPECT_THROW(run_limit(c), ParameterError);
  c = toy_case([](double h) { return h; });
  c.eval_labels.push_back("x=1");
  EXPECT_THROW(run_limit(c), ParameterError);
}

// Property: every registered case converges with a strictly decreasing
// error path, below 1e-5 (1e-8 for exact targets).
TEST(LimitProperty, RegisteredCasesPass) {
  for (const auto& c : registered_limit_cases()) {
    const auto r = run_limit(c);
    EXPECT_TRUE(r.decreasing) << r.case_id;
    EXPECT_TRUE(r.passed) << r.case_id << " final " << r.errors.back();
    EXPECT_LT(r.errors.back(), c.exact_target ? 1e-8 : 1e-5) << r.case_id;
  }
}

TEST(Bessoula, FirstOrderConvergence) {
  const auto r = run_limit(bessoula_case(Rational(1, 4)));
  EXPECT_NEAR(r.estimated_rate, 1.0, 1e-3);
}

TEST(QShifted, TargetsAndConvergence) {
  // n = 3: (-1)^1 2^3 ((alpha+1)/2)_1 and (-1)^2 2^3 (alpha/2)_2
  const double al = 0.3;
  const auto r = qshifted_limit_check(al, 3);
  EXPECT_NEAR(r.first_target, -8 * (al + 1) / 2, 1e-14);
  EXPECT_NEAR(r.second_target, 8 * (al / 2) * (al / 2 + 1), 1e-14);
  EXPECT_TRUE(r.passed);
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(qshifted_limit_check(1.5, n).passed) << n;
  EXPECT_THROW(qshifted_limit_check(al, 13), ParameterError);
}

TEST(Diagram, TwoRoutesAgree) {
  const auto d = diagram_check(Rational(1, 3), Rational(1, 2));
  EXPECT_TRUE(d.passed);
  for (double e : d.arrow_n_errors) EXPECT_LT(e, 1e-10);
}
