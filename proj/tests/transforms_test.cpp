#include <gtest/gtest.h>

#include <cmath>

#include "qbessel/transforms.hpp"

using namespace qbessel;

namespace {

const SampledFunction kGauss = [](double x) { return Complex(std::exp(-x * x / 2)); };
const SampledFunction kShifted = [](double x) { return Complex((1 + x) * std::exp(-x * x / 2)); };

}  // namespace

TEST(TransformSpec, ConstantsAndValidation) {
  TransformSpec h{TransformKind::hankel, 0.5};
  EXPECT_NEAR(h.constant(), 1 / (std::sqrt(2.0) * std::tgamma(1.5)), 1e-15);
  TransformSpec d{TransformKind::dunkl, 0.5};
  EXPECT_NEAR(d.constant(), h.constant() / 2, 1e-15);
  h.normalization = Normalization::printed;
  EXPECT_NEAR(h.constant(), 1 / (2 * std::tgamma(1.5)), 1e-15);
  EXPECT_THROW((TransformSpec{TransformKind::hankel, -1.0}.validate()), ParameterError);
  EXPECT_EQ(parse_transform_kind("minus1"), TransformKind::minus1);
  EXPECT_THROW(parse_transform_kind("fourier"), ParameterError);
}

TEST(Hankel, MatchesOracleQuadrature) {
  const SampledFunction f = [](double x) { return Complex(x * x * std::exp(-x * x / 2)); };
  TransformSpec h{TransformKind::hankel, 0.5};
  EXPECT_NEAR(forward(h, f, 0.7).real(), 1.9645883909870892107, 1e-11);
  EXPECT_NEAR(forward(h, f, 2.1).real(), -0.15545324067932418130, 1e-11);
}

TEST(Hankel, GaussianIsSelfReciprocal) {
  EXPECT_LT(gaussian_self_reciprocity(0.5, {0.0, 0.5, 1.0, 2.0, 3.5}), 1e-8);
  EXPECT_LT(gaussian_self_reciprocity(2.0, {0.0, 1.0, 2.5}), 1e-8);
}

// Under the printed constant 2^{alpha+1/2} the Gaussian is not reproduced.
TEST(Hankel, PrintedConstantBreaksSelfReciprocity) {
  EXPECT_NEAR(gaussian_self_reciprocity(0.5, {0.0}, Normalization::printed), 1 - 1 / std::sqrt(2.0), 1e-9);
}

// For even f the odd kernel part integrates to zero.
TEST(Dunkl, GaussianMapsToGaussian) {
  TransformSpec d{TransformKind::dunkl, 0.3};
  for (double l : {0.0, 0.8, 2.2}) {
    const Complex v = forward(d, kGauss, l);
    EXPECT_NEAR(v.real(), std::exp(-l * l / 2), 1e-10);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  }
}

TEST(RoundTripProperty, DunklAndMinus1) {
  const std::vector<double> xs{-1.9, -0.4, 0.6, 2.1};
  EXPECT_LT(roundtrip_residual(TransformSpec{TransformKind::dunkl, 0.3}, kShifted, xs), 1e-7);
  EXPECT_LT(roundtrip_residual(TransformSpec{TransformKind::minus1, 0.7}, kShifted, xs), 1e-7);
}

TEST(EvenReduction, Minus1EqualsHankelOnEvenFunctions) {
  EXPECT_LT(even_reduction_residual(0.5, kGauss, {0.0, 0.9, 2.4}), 1e-8);
}

TEST(Quadrature, RefinementCapIsAccuracyError) {
  TransformSpec h{TransformKind::hankel, 0.5};
  h.max_refinements = 0;
  EXPECT_THROW(forward(h, kGauss, 1.0), AccuracyError);
}

TEST(Kernels, StandardMinus1KernelUsesNegativeArgument) {
  TransformSpec m{TransformKind::minus1, 0.3};
  const auto [kp, km] = detail::transform_kernel_pair(m, 1.2, 0.9, false);
  EXPECT_NEAR(kp.real(), minus1_bessel(0.3, -1.2 * 0.9), 1e-15);
  EXPECT_NEAR(km.real(), minus1_bessel(0.3, 1.2 * 0.9), 1e-15);
}
