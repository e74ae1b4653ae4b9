#include <gtest/gtest.h>

#include "qbessel/representations.hpp"

using namespace qbessel;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
using Op = LinOp<Rational>;
using P = RationalPoly;

}  // namespace

TEST(LinOp, CompositionAppliesRightFactorFirst) {
  const Op A = Op::mult_by_x();
  const Op B = Op::derivative();
  // (A B) x^3 = x * 3x^2, (B A) x^3 = 4 x^3
  EXPECT_EQ((A * B)(P::monomial(3)), P::monomial(3, R(3)));
  EXPECT_EQ((B * A)(P::monomial(3)), P::monomial(3, R(4)));
}

TEST(LinOp, ElementaryActions) {
  const P f = P::monomial(3, R(2)) + P::monomial(0, R(5));
  EXPECT_EQ(Op::dilate(R(1, 2))(f), P::monomial(3, R(1, 4)) + P::monomial(0, R(5)));
  EXPECT_EQ(Op::reflect()(f), P::monomial(3, R(-2)) + P::monomial(0, R(5)));
  EXPECT_EQ(Op::derivative()(f), P::monomial(2, R(6)));
  EXPECT_EQ((R(3) * Op::identity() - Op::identity())(f), f * R(2));
}

TEST(LinOp, BracketsOnMonomials) {
  // [d/dx, x] = 1
  EXPECT_TRUE(equal_on_monomials(q_bracket(Op::derivative(), Op::mult_by_x(), R(1)), Op::identity(), 10));
  // {x, s} = 0
  EXPECT_TRUE(is_zero_on_monomials(anticommutator(Op::mult_by_x(), Op::reflect()), 10));
}

TEST(Operators, ReflectionDifferenceKeepsPolynomials) {
  EXPECT_TRUE(preserves_polynomials(ops::reflection_difference<Rational>(), 12));
  EXPECT_TRUE(preserves_polynomials(dunkl_operator(R(1, 3)), 12));
  EXPECT_TRUE(preserves_polynomials(minus1_jacobi_operator(R(1, 2), R(3, 2)), 12));
}

TEST(LittleQJacobiAlgebra, RelationsAndCasimir) {
  const auto rep = rep_little_q_jacobi(R(1, 2), R(1, 3), R(3, 4), R(1, 2));
  for (const auto& rel : rep.relations) {
    const auto r = check_relation(rep, rel.id, 16);
    EXPECT_TRUE(r.holds()) << rel.id;
    EXPECT_TRUE(r.exact_match) << rel.id;
    EXPECT_TRUE(r.unique) << rel.id;
  }
  // w3 = -(1+a)/((1+q) r) = -16/9
  const auto r = check_relation(rep, "YX-qXY", 16);
  EXPECT_EQ(r.measured_constants.at("Z"), R(1));
  EXPECT_EQ(r.measured_constants.at("Id"), R(-16, 9));
  EXPECT_EQ(casimir_value(rep, 16), R(-4, 3));
  EXPECT_TRUE(casimir_is_central(rep, 12));
}

TEST(LittleQJacobiAlgebra, RejectsInconsistentR) {
  EXPECT_THROW(rep_little_q_jacobi(R(1, 2), R(1, 3), R(3, 4), R(1, 3)), ParameterError);
  EXPECT_THROW(rep_little_q_jacobi(R(1), R(1, 3), R(3, 4), R(1, 2)), ParameterError);
}

// Measured constants differ from the printed ones: {X,Y} = Z - alpha and
// {Y,Z} = X + beta.
TEST(Minus1JacobiAlgebra, MeasuredConstants) {
  const auto rep = rep_minus1_jacobi(R(1, 2), R(3, 2));
  const auto xy = check_relation(rep, "{X,Y}", 16);
  EXPECT_TRUE(xy.holds());
  EXPECT_FALSE(xy.exact_match);
  EXPECT_EQ(xy.measured_constants.at("Z"), R(1));
  EXPECT_EQ(xy.measured_constants.at("Id"), R(-1, 2));
  const auto yz = check_relation(rep, "{Y,Z}", 16);
  EXPECT_TRUE(yz.holds());
  EXPECT_EQ(yz.measured_constants.at("X"), R(1));
  EXPECT_EQ(yz.measured_constants.at("Id"), R(3, 2));
  EXPECT_TRUE(check_relation(rep, "{X,Z}", 16).holds());
}

TEST(Minus1JacobiAlgebra, SumOfSquaresIsNotCentral) {
  const auto rep = rep_minus1_jacobi(R(1, 2), R(3, 2));
  EXPECT_THROW(casimir_value(rep, 8), NotCentralError);
  EXPECT_FALSE(casimir_is_central(rep, 8));
}

TEST(Minus1JacobiAlgebra, RejectsNegativeOddAlpha) {
  EXPECT_THROW(rep_minus1_jacobi(R(-3), R(1)), ParameterError);
}

TEST(QBessel3Algebra, RelationsAndCasimir) {
  const auto rep = rep_qbessel3(R(2, 3), R(3, 5));
  for (const auto& rel : rep.relations) EXPECT_TRUE(check_relation(rep, rel.id, 16).holds()) << rel.id;
  EXPECT_EQ(casimir_value(rep, 16), R(-3, 5));
}

// The anticommutator carries +Z + 2 alpha + 1, opposite in sign to the
// printed -Z - 2 alpha - 1.
TEST(DunklAlgebra, AnticommutatorSign) {
  const auto rep = rep_dunkl(R(1, 2));
  const auto r = check_relation(rep, "{X,Y}", 16);
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(r.exact_match);
  EXPECT_EQ(r.measured_constants.at("Z"), R(1));
  EXPECT_EQ(r.measured_constants.at("Id"), R(2));
  EXPECT_EQ(r.paper_constants.at("Z"), R(-1));
  EXPECT_EQ(casimir_value(rep, 16), R(1));
}

TEST(QLaguerreAlgebra, RelationsAndCasimir) {
  const auto rep = rep_qlaguerre(R(1, 2), R(1, 3));
  for (const auto& rel : rep.relations) EXPECT_TRUE(check_relation(rep, rel.id, 16).holds()) << rel.id;
  EXPECT_EQ(casimir_value(rep, 16), R(-1, 12));
}

TEST(QBessel2Algebra, DeclaredAndLiteralForms) {
  const auto rep = rep_qbessel2(R(1, 2), R(1, 3));
  const auto r = check_relation(rep, "XY-q^2YX", 16);
  EXPECT_TRUE(r.holds());
  // -q^2(1+a)/(1+q) = -2/9, -aq = -1/6, -aq^2 = -1/12
  EXPECT_EQ(r.measured_constants.at("Z"), R(-2, 9));
  EXPECT_EQ(r.measured_constants.at("X"), R(-1, 6));
  EXPECT_EQ(r.measured_constants.at("Id"), R(-1, 12));
  const auto lit = check_relation(rep, "YX-q^2XY", 16);
  EXPECT_TRUE(lit.span_failure);
  EXPECT_FALSE(lit.holds());
}

TEST(RelationChecker, UnknownRelationIsParameterError) {
  EXPECT_THROW(check_relation(rep_dunkl(R(1)), "nope", 4), ParameterError);
}

TEST(Daha, RelationsForSeveralK) {
  for (const auto& k : {R(1, 2), R(3, 4), R(5, 2)}) {
    const auto c = check_daha(k, 16);
    EXPECT_TRUE(c.s_z_s_is_minus_z);
    EXPECT_TRUE(c.s_d_s_is_minus_d);
    EXPECT_TRUE(c.commutator);
  }
}

TEST(Intertwining, QLaguerreToQBessel2) {
  EXPECT_TRUE(intertwining_check(R(1, 2), R(1, 3), 12));
  EXPECT_TRUE(intertwining_check(R(2, 3), R(5, 4), 12));
}

// Property: every declared relation holds on random-looking parameter
// tuples, and the Casimir values follow their closed forms.
TEST(AlgebraProperty, DeclaredRelationsHoldAcrossParameters) {
  const std::vector<Rational> qs{R(1, 3), R(3, 7), R(5, 2)};
  const std::vector<Rational> as{R(2, 9), R(7, 4), R(-3, 5)};
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const Rational q = qs[i];
    const Rational a = as[i];
    for (const auto& rep : {rep_qbessel3(q, a), rep_qlaguerre(q, a), rep_qbessel2(q, a)}) {
      for (const auto& rel : rep.relations) EXPECT_TRUE(check_relation(rep, rel.id, 10).holds()) << rep.name;
    }
    EXPECT_EQ(casimir_value(rep_qbessel3(q, a), 10), -a);
    EXPECT_EQ(casimir_value(rep_qlaguerre(q, a), 10), -a * q * q);
    const Rational b = a * R(4);  // ab = 4a^2, r = 2a
    EXPECT_EQ(casimir_value(rep_little_q_jacobi(q, a, b, 2 * a), 10), -1 / b);
  }
}
