#include <gtest/gtest.h>

#include <cmath>

#include "qbessel/qseries.hpp"

using namespace qbessel;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST(Rational, ParsesFractionsExactly) {
  EXPECT_EQ(parse_rational("3/4"), R(3, 4));
  EXPECT_EQ(parse_rational(" -6/8 "), R(-3, 4));
  EXPECT_EQ(parse_rational("5"), R(5));
  EXPECT_THROW(parse_rational("0.5"), ParameterError);
  EXPECT_THROW(parse_rational("1/0"), ParameterError);
  EXPECT_THROW(parse_rational("1/x"), ParameterError);
}

TEST(Rational, RealParserAcceptsBoth) {
  EXPECT_DOUBLE_EQ(parse_real("1/4"), 0.25);
  EXPECT_DOUBLE_EQ(parse_real("-2.5e-1"), -0.25);
  EXPECT_THROW(parse_real("1.0abc"), ParameterError);
}

TEST(Rational, IntegerPowers) {
  EXPECT_EQ(ipow(R(2, 3), 3), R(8, 27));
  EXPECT_EQ(ipow(R(2, 3), -2), R(9, 4));
  EXPECT_EQ(ipow(R(5), 0), R(1));
}

TEST(ComplexRational, FieldOperations) {
  const ComplexRational a{R(1, 2), R(3)};
  const ComplexRational b{R(-2), R(1, 5)};
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(ComplexRational::i() * ComplexRational::i(), ComplexRational(R(-1)));
  EXPECT_EQ(a.conj() * a, ComplexRational(a.norm()));
}

TEST(LaurentPoly, ArithmeticAndEvaluation) {
  using P = RationalPoly;
  const P p = P::monomial(2, R(3)) + P::monomial(-1, R(1, 2)) - P::constant(R(1));
  EXPECT_EQ(p.min_degree(), -1);
  EXPECT_EQ(p.max_degree(), 2);
  EXPECT_EQ(p.coeff(0), R(-1));
  EXPECT_EQ(p.coeff(5), R(0));
  EXPECT_FALSE(poly_is_proper(p));
  EXPECT_EQ(poly_eval(p, R(2)), R(3 * 4) + R(1, 4) - R(1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(pow(P::x() + P::constant(R(1)), 3).coeff(1), R(3));
}

// (a;q)_n against the product definition evaluated independently.
TEST(QPochhammer, FiniteExact) {
  EXPECT_EQ(q_pochhammer(R(1, 3), R(1, 2), 4), R(1265, 2592));
  EXPECT_EQ(q_pochhammer(R(2), R(-1, 3), 3), R(-35, 27));
  EXPECT_EQ(q_pochhammer(R(7), R(1, 2), 0), R(1));
  EXPECT_EQ(q_pochhammer(R(1, 4), R(4), 3), R(0));  // a q = 1
  EXPECT_THROW(q_pochhammer(R(1), R(1, 2), -1), ParameterError);
}

TEST(QPochhammer, InfiniteProductMatchesOracle) {
  const auto p = q_pochhammer_inf(0.5, 0.5);
  EXPECT_NEAR(p.value, 0.28878809508660242128, 1e-16);
  EXPECT_LE(p.tail_bound, 2e-17);
  const auto h = q_pochhammer_inf(HighReal("0.3"), HighReal("0.7"), HighReal("1e-45"));
  EXPECT_LT(abs(h.value - HighReal("0.3310895172403178741523969160123990365022")), HighReal("1e-40"));
}

TEST(QPochhammer, InfiniteProductRejections) {
  EXPECT_THROW(q_pochhammer_inf(0.5, 1.0), ParameterError);
  EXPECT_THROW(q_pochhammer_inf(0.5, 0.5, 2.0), ParameterError);
  EXPECT_THROW(q_pochhammer_inf(R(1, 2), R(1, 2)), UnsupportedModeError);
}

// (q^3;q)_inf/(q;q)_inf = 1/((1-q)(1-q^2)) exactly.
TEST(QPochhammer, RatioStaysFiniteNearOne) {
  const double q = 0.9;
  EXPECT_NEAR(q_pochhammer_ratio_inf(q * q * q, q, q).value, 1 / ((1 - q) * (1 - q * q)), 1e-11);
  const double q2 = 0.999;
  const auto r = q_pochhammer_ratio_inf(q2 * q2 * q2, q2, q2);
  EXPECT_NEAR(r.value * (1 - q2) * (1 - q2 * q2), 1.0, 1e-9);
}

TEST(BasicHypergeometric, TerminatingExact) {
  const Rational q = R(1, 2);
  const HyperSpec<Rational> s{{ipow(q, -3), R(1, 5)}, {R(1, 7)}, q, R(1, 3)};
  EXPECT_EQ(phi(s, 10), R(63439, 394875));
}

TEST(BasicHypergeometric, ExactModeNeedsTermination) {
  const HyperSpec<Rational> s{{R(1, 5)}, {R(1, 7)}, R(1, 2), R(1, 3)};
  EXPECT_THROW(phi(s, 10), UnsupportedModeError);
}

TEST(BasicHypergeometric, NumericMatchesOracle) {
  const HyperSpec<double> s{{0.0}, {1.0 / 3}, 0.5, 0.4};
  EXPECT_NEAR(phi_converged(s), 0.13871971584812624221, 1e-15);
}

TEST(BasicHypergeometric, VanishingDenominatorIsParameterError) {
  EXPECT_THROW(hyper_coefficients<Rational>({R(0)}, {R(2)}, R(1, 2), R(1), 5), ParameterError);
}

TEST(BasicHypergeometric, TermCapIsAccuracyError) {
  const HyperSpec<double> s{{0.0}, {0.5}, 0.999, 0.9};
  EXPECT_THROW(phi_converged(s, SeriesPolicy{1e-17, 3}), AccuracyError);
}

TEST(ClassicalHypergeometric, MatchesBinomialSeries) {
  // 1F0(a;;z) truncated = (1-z)^{-a} for a terminating a = -n
  EXPECT_EQ(classical_hyp<Rational>({R(-3)}, {}, R(1, 2), 10), R(1, 8));
  EXPECT_EQ(pochhammer(R(1, 2), 3), R(15, 8));
}

// Property: the q-Pochhammer recursion (a;q)_{n+1} = (a;q)_n (1 - a q^n).
TEST(QPochhammerProperty, Recursion) {
  for (const auto& a : {R(1, 3), R(-2, 5), R(7, 2)}) {
    for (const auto& q : {R(1, 2), R(-3, 4), R(5, 3)}) {
      for (int n = 0; n < 8; ++n) {
        EXPECT_EQ(q_pochhammer(a, q, n + 1), q_pochhammer(a, q, n) * (1 - a * ipow(q, n)));
      }
    }
  }
}
