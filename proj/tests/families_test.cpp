#include <gtest/gtest.h>

#include "qbessel/families.hpp"

using namespace qbessel;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

RationalPoly poly(std::initializer_list<std::pair<int, Rational>> t) { return ops::poly<Rational>(t); }

}  // namespace

TEST(LittleQJacobi, CoefficientsMatchOracle) {
  EXPECT_EQ(little_q_jacobi(2, R(1, 2), R(1, 3), R(3, 4)).coeffs,
            poly({{0, R(1)}, {1, R(-279, 80)}, {2, R(17577, 7040)}}));
  EXPECT_EQ(little_q_jacobi(3, R(2, 3), R(1, 2), R(2)).coeffs,
            poly({{0, R(1)}, {1, R(-1235, 216)}, {2, R(260585, 27216)}, {3, R(-1302925, 268272)}}));
  EXPECT_EQ(poly_eval(little_q_jacobi(2, R(1, 2), R(1, 3), R(3, 4)).coeffs, R(1, 2)), R(-3367, 28160));
}

TEST(QLaguerre, CoefficientsMatchOracle) {
  EXPECT_EQ(q_laguerre(2, R(1, 2), R(1, 3)).coeffs, poly({{0, R(55, 27)}, {1, R(-11, 18)}, {2, R(1, 54)}}));
}

TEST(Minus1Jacobi, CoefficientsMatchOracle) {
  EXPECT_EQ(minus1_jacobi(2, R(1, 2), R(3, 2)).coeffs, poly({{0, R(1)}, {1, R(4, 3)}, {2, R(-4)}}));
  EXPECT_EQ(minus1_jacobi(3, R(1, 2), R(3, 2)).coeffs,
            poly({{0, R(1)}, {1, R(-4)}, {2, R(-4)}, {3, R(64, 7)}}));
}

TEST(ClassicalFamilies, CoefficientsMatchOracle) {
  EXPECT_EQ(jacobi_classical(2, R(1, 2), R(1, 4)).coeffs,
            poly({{0, R(-75, 128)}, {1, R(15, 64)}, {2, R(285, 128)}}));
  EXPECT_EQ(laguerre_classical(3, R(1, 2)).coeffs,
            poly({{0, R(35, 16)}, {1, R(-35, 8)}, {2, R(7, 4)}, {3, R(-1, 6)}}));
  EXPECT_NEAR(jacobi_value(7, 0.5, 0.25, 0.3), -0.20710785583983364720, 1e-14);
}

TEST(Families, DegreeAndNormalization) {
  for (int n = 0; n <= 6; ++n) {
    const auto p = little_q_jacobi(n, R(1, 2), R(1, 3), R(3, 4)).coeffs;
    EXPECT_EQ(p.max_degree(), n);
    EXPECT_EQ(poly_eval(p, R(0)), R(1));  // p_n(0) = 1
  }
  EXPECT_THROW(little_q_jacobi(-1, R(1, 2), R(1, 3), R(3, 4)), ParameterError);
}

TEST(Eigen, LittleQJacobiEigenvalueFormula) {
  // q^-n (1-q^n)(1-abq^{n+1}) at n = 2, q = 1/2, ab = 1/4
  EXPECT_EQ(little_q_jacobi_eigenvalue(2, R(1, 2), R(1, 3), R(3, 4)), R(4) * R(3, 4) * R(31, 32));
  EXPECT_EQ(minus1_jacobi_eigenvalue(4, R(1, 2), R(3, 2)), R(-4));
  EXPECT_EQ(minus1_jacobi_eigenvalue(3, R(1, 2), R(3, 2)), R(6));
}

// Property: exact eigen-equations for every n <= 12.
TEST(EigenProperty, AllFamiliesUpToTwelve) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_TRUE(little_q_jacobi_eigencheck(n, R(1, 2), R(1, 3), R(3, 4))) << n;
    EXPECT_TRUE(little_q_jacobi_eigencheck(n, R(-2, 5), R(7, 3), R(1, 9))) << n;
    EXPECT_TRUE(q_laguerre_eigencheck(n, R(1, 2), R(1, 3))) << n;
    EXPECT_TRUE(q_laguerre_eigencheck(n, R(3, 4), R(2))) << n;
    EXPECT_TRUE(minus1_jacobi_eigencheck(n, R(1, 2), R(3, 2))) << n;
    EXPECT_TRUE(minus1_jacobi_eigencheck(n, R(-1, 3), R(2, 5))) << n;
  }
}

TEST(EigenProperty, QLaguerreThreeTermRecurrence) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(q_laguerre_recurrence_check(n, R(1, 2), R(1, 3))) << n;
  EXPECT_THROW(q_laguerre_recurrence_check(0, R(1, 2), R(1, 3)), ParameterError);
}

TEST(Orthogonality, DiagonalMatchesClosedForm) {
  const auto r = orthogonality_sum(3, 3, R(1, 2), R(1, 3), R(1, 4));
  EXPECT_NEAR(r.expected, 2952936.0 / 1734005075.0, 1e-18);
  EXPECT_TRUE(r.passed());
}

// Property: discrete orthogonality for 0 <= m, n <= 6 with a certified tail.
TEST(OrthogonalityProperty, OffDiagonalVanishes) {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const auto r = orthogonality_sum(m, n, R(1, 3), R(2), R(-1, 2));
      EXPECT_TRUE(r.passed()) << m << "," << n << " value " << r.value;
      EXPECT_LT(r.tail_bound, 1e-15);
    }
  }
}

TEST(Orthogonality, RangeChecks) {
  EXPECT_THROW(orthogonality_sum(1, 1, R(3, 2), R(1, 3), R(1, 4)), ParameterError);
  EXPECT_THROW(orthogonality_sum(1, 1, R(1, 2), R(3), R(1, 4)), ParameterError);
  EXPECT_THROW(orthogonality_sum(1, 1, R(1, 2), R(1, 3), R(5)), ParameterError);
}
