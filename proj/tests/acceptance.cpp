// Acceptance battery: one PASS/FAIL line per criterion, then the list of
// failed criteria. Exit status is the number of failed criteria.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qbessel/report.hpp"

using namespace qbessel;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Pinned tolerances.
constexpr int kAlgebraDegree = 16;
constexpr int kEigenMaxN = 12;
constexpr int kTermwiseOrder = 28;
constexpr double kSpecialTol = 1e-12;
constexpr double kDecompositionTol = 1e-10;
constexpr double kOrthogonalityTol = 1e-10;
constexpr double kLimitTol = 1e-5;
constexpr double kExactLimitTol = 1e-8;
constexpr int kQShiftedMaxN = 8;
constexpr double kGaussianTol = 1e-8;
constexpr double kRoundTripTol = 1e-7;
constexpr double kEvenReductionTol = 1e-8;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!passed) detail << "; ";
    passed = false;
    detail << why;
  }
};

Outcome criterion1() {
  Outcome o;
  std::vector<Representation> reps{
      rep_little_q_jacobi(R(1, 2), R(1, 3), R(3, 4), R(1, 2)), rep_little_q_jacobi(R(1, 3), R(1, 2), R(2), R(1)),
      rep_little_q_jacobi(R(2, 3), R(4, 9), R(1, 4), R(1, 3)), rep_minus1_jacobi(R(1, 2), R(3, 2)),
      rep_minus1_jacobi(R(-1, 3), R(2, 5)),                     rep_minus1_jacobi(R(2), R(-1, 4)),
      rep_qbessel3(R(1, 2), R(1, 3)),                           rep_qbessel3(R(2, 3), R(3, 5)),
      rep_qbessel3(R(3), R(1, 4)),                              rep_dunkl(R(1, 2)),
      rep_dunkl(R(-1, 4)),                                      rep_dunkl(R(3)),
      rep_qlaguerre(R(1, 2), R(1, 3)),                          rep_qlaguerre(R(2, 3), R(5, 4)),
      rep_qlaguerre(R(1, 5), R(2)),                             rep_qbessel2(R(1, 2), R(1, 3)),
      rep_qbessel2(R(2, 3), R(5, 4)),                           rep_qbessel2(R(1, 5), R(2)),
  };
  int count = 0;
  std::string dunkl_sign;
  for (const auto& rep : reps) {
    for (const auto& rel : rep.relations) {
      const auto r = check_relation(rep, rel.id, kAlgebraDegree);
      ++count;
      if (!r.holds()) o.fail(rep.name + " " + rel.id);
      if (rep.name == "dunkl" && rel.id == "{X,Y}" && dunkl_sign.empty() && !r.span_failure) {
        dunkl_sign = "Dunkl {X,Y} measured Z coefficient " + rational_string(r.measured_constants.at("Z"));
      }
    }
  }
  if (o.passed) o.detail << count << " relations zero on x^0..x^" << kAlgebraDegree << "; " << dunkl_sign;
  return o;
}

Outcome criterion2() {
  Outcome o;
  struct Case {
    Representation rep;
    Rational expected;
  };
  const Rational q = R(1, 2), a = R(1, 3), b = R(3, 4);
  std::vector<Case> cases{
      {rep_little_q_jacobi(q, a, b, R(1, 2)), -1 / b},
      {rep_minus1_jacobi(R(1, 2), R(3, 2)), R(1)},
      {rep_qbessel3(q, a), -a},
      {rep_dunkl(R(1, 2)), R(1)},
      {rep_qlaguerre(q, a), -a * q * q},
  };
  std::ostringstream ok;
  for (const auto& c : cases) {
    try {
      const Rational v = casimir_value(c.rep, kAlgebraDegree);
      if (v != c.expected) {
        o.fail(c.rep.name + " Casimir " + rational_string(v) + " != " + rational_string(c.expected));
      } else {
        ok << c.rep.name << "=" << rational_string(v) << " ";
      }
    } catch (const NotCentralError& e) {
      o.fail(c.rep.name + " Casimir is not a scalar (" + e.what() + ")");
    }
  }
  o.detail << (o.passed ? "" : "; matched: ") << ok.str();
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 0; n <= kEigenMaxN; ++n) {
    if (!little_q_jacobi_eigencheck(n, R(1, 2), R(1, 3), R(3, 4))) o.fail("little q-Jacobi n=" + std::to_string(n));
    if (!q_laguerre_eigencheck(n, R(1, 2), R(1, 3))) o.fail("q-Laguerre n=" + std::to_string(n));
    if (!minus1_jacobi_eigencheck(n, R(1, 2), R(3, 2))) o.fail("(-1)-Jacobi n=" + std::to_string(n));
  }
  if (o.passed) o.detail << "three families exact for n <= " << kEigenMaxN;
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& k : {R(1, 2), R(3, 4), R(5, 2)}) {
    if (!check_daha(k, kAlgebraDegree).all()) o.fail("k=" + rational_string(k));
  }
  if (o.passed) o.detail << "k in {1/2, 3/4, 5/2} to degree " << kAlgebraDegree;
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Rational q = R(1, 2), a = R(1, 3), l = R(2, 5);
  if (auto d = q_bessel3_eigencheck(q, a, l, kTermwiseOrder)) o.fail("J3 residual at degree " + std::to_string(*d));
  if (auto d = q_bessel2_eigencheck(q, a, l, kTermwiseOrder)) o.fail("J2 residual at degree " + std::to_string(*d));
  if (o.passed) o.detail << "zero series residual through order " << kTermwiseOrder;
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const double x = -3 + 6.0 * i / 19;
    worst = std::max({worst, std::abs(bessel_norm(-0.5, x) - std::cos(x)),
                      std::abs(bessel_norm(0.5, x) - std::sin(x) / x),
                      std::abs(dunkl_kernel(-0.5, x) - std::exp(Complex(0, x))),
                      std::abs(minus1_bessel(-0.5, x) - cas(x))});
  }
  if (!(worst < kSpecialTol)) o.fail("max error " + detail::fmt(worst));
  o.detail << (o.passed ? "" : "; ") << "max error " << worst;
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<double> xs{-2.7, -1.4, -0.6, 0.25, 0.9, 1.8, 3.1};
  double worst = 0;
  for (double al : {-0.25, 0.5, 2.0}) {
    for (double l : {0.5, 1.3}) worst = std::max(worst, decomposition_check(al, l, xs).max());
  }
  if (!(worst < kDecompositionTol)) o.fail("max residual " + detail::fmt(worst));
  o.detail << (o.passed ? "" : "; ") << "max residual " << worst;
  return o;
}

Outcome criterion8() {
  Outcome o;
  double worst = 0;
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const auto r = orthogonality_sum(m, n, R(1, 2), R(1, 3), R(1, 4), 200, kOrthogonalityTol);
      worst = std::max(worst, std::abs(r.value - r.expected));
      if (!r.passed()) o.fail("m=" + std::to_string(m) + ",n=" + std::to_string(n));
    }
  }
  o.detail << (o.passed ? "" : "; ") << "max deviation " << worst;
  return o;
}

Outcome criterion9() {
  Outcome o;
  int count = 0;
  for (const auto& c : registered_limit_cases()) {
    const auto r = run_limit(c);
    const double tol = c.exact_target ? kExactLimitTol : kLimitTol;
    ++count;
    if (!(r.decreasing && r.errors.back() < tol)) o.fail(r.case_id + " final " + detail::fmt(r.errors.back()));
  }
  for (double al : {0.3, 1.5}) {
    for (int n = 0; n <= kQShiftedMaxN; ++n) {
      if (!qshifted_limit_check(al, n, {}, kLimitTol).passed) o.fail("q-shifted n=" + std::to_string(n));
    }
  }
  if (o.passed) o.detail << count << " cases and q-shifted n <= " << kQShiftedMaxN;
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::vector<double> ls;
  for (int i = 0; i <= 16; ++i) ls.push_back(i * 0.25);
  const std::vector<double> xs{-2.5, -1.2, -0.4, 0.3, 0.9, 1.7, 2.6};
  const SampledFunction odd_gauss = [](double x) { return Complex(x * std::exp(-x * x / 2)); };
  const SampledFunction shifted = [](double x) { return Complex((1 + x) * std::exp(-x * x / 2)); };
  const SampledFunction gauss2 = [](double x) { return Complex(std::exp(-x * x)); };
  const double g = gaussian_self_reciprocity(0.5, ls);
  const double d = roundtrip_residual(TransformSpec{TransformKind::dunkl, 0.3}, odd_gauss, xs);
  const double m = roundtrip_residual(TransformSpec{TransformKind::minus1, -0.5}, shifted, xs);
  const double e = even_reduction_residual(0.5, gauss2, ls);
  if (!(g < kGaussianTol)) o.fail("Gaussian " + detail::fmt(g));
  if (!(d < kRoundTripTol)) o.fail("Dunkl round trip " + detail::fmt(d));
  if (!(m < kRoundTripTol)) o.fail("(-1) round trip " + detail::fmt(m));
  if (!(e < kEvenReductionTol)) o.fail("even reduction " + detail::fmt(e));
  o.detail << (o.passed ? "" : "; ") << "gaussian " << g << ", dunkl " << d << ", minus1 " << m << ", even " << e;
  return o;
}

Outcome criterion11() {
  Outcome o;
  const std::string first = report().dump(2);
  const std::string second = report().dump(2);
  if (first != second) o.fail("two report runs differ");
  o.detail << (o.passed ? "" : "; ") << first.size() << " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"exact algebra relations", criterion1},
      {"Casimir scalars", criterion2},
      {"exact eigenvalues", criterion3},
      {"DAHA relations", criterion4},
      {"termwise q-Bessel eigenchecks", criterion5},
      {"special values", criterion6},
      {"even/odd decomposition", criterion7},
      {"little q-Jacobi orthogonality", criterion8},
      {"limit battery", criterion9},
      {"transform round trips", criterion10},
      {"report reproducibility", criterion11},
  };
  std::vector<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << criteria[i].first << ": " << (o.passed ? "PASS" : "FAIL") << " ("
              << o.detail.str() << ")" << std::endl;
    if (!o.passed) failed.push_back(static_cast<int>(i + 1));
  }
  std::cout << "failed criteria: [";
  for (std::size_t i = 0; i < failed.size(); ++i) std::cout << (i ? ", " : "") << failed[i];
  std::cout << "]" << std::endl;
  return static_cast<int>(failed.size());
}
