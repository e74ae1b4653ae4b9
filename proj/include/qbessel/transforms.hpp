#pragma once

// Hankel, nonsymmetric (Dunkl) Hankel and (-1)-Bessel transforms by composite
// Gauss-Legendre quadrature with panel refinement.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qbessel/besselfam.hpp"

namespace qbessel {

enum class TransformKind { hankel, dunkl, minus1 };

// standard: kernels and constants under which the pair inverts itself.
// printed: Hankel constant 2^{alpha+1/2}; Dunkl kernel E(lambda x) both ways;
// (-1) kernel J(-lambda x) forward and J(lambda x) back.
enum class Normalization { standard, printed };

inline std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::hankel: return "hankel";
    case TransformKind::dunkl: return "dunkl";
    case TransformKind::minus1: return "minus1";
  }
  return "?";
}

inline TransformKind parse_transform_kind(const std::string& s) {
  if (s == "hankel") return TransformKind::hankel;
  if (s == "dunkl") return TransformKind::dunkl;
  if (s == "minus1") return TransformKind::minus1;
  throw ParameterError("unknown transform kind '" + s + "'");
}

struct TransformSpec {
  TransformKind kind = TransformKind::hankel;
  double alpha = 0;
  double domain_cut = 12;     // R: integrate over [0, R] or [-R, R]
  double tolerance = 1e-12;   // successive-refinement threshold
  int initial_panels = 16;
  int max_refinements = 6;
  Normalization normalization = Normalization::standard;

  void validate() const {
    if (!(alpha > -1)) throw ParameterError("transform: alpha must exceed -1");
    if (!(domain_cut > 0)) throw ParameterError("transform: domain cut must be positive");
    if (!(tolerance > 0)) throw ParameterError("transform: tolerance must be positive");
    if (initial_panels < 1) throw ParameterError("transform: need at least one panel");
  }

  bool real_line() const { return kind != TransformKind::hankel; }

  // Constant in front of the integral.
  double constant() const {
    const double g = boost::math::tgamma(alpha + 1);
    if (kind == TransformKind::hankel) {
      return 1 / (std::pow(2.0, normalization == Normalization::printed ? alpha + 0.5 : alpha) * g);
    }
    return 1 / (std::pow(2.0, alpha + 1) * g);
  }

  std::string constant_label() const {
    if (kind == TransformKind::hankel) {
      return normalization == Normalization::printed ? "1/(2^(alpha+1/2) Gamma(alpha+1))"
                                                     : "1/(2^alpha Gamma(alpha+1))";
    }
    return "1/(2^(alpha+1) Gamma(alpha+1))";
  }
};

using SampledFunction = std::function<Complex(double)>;

namespace detail {

// Kernel values K(lambda, x) and K(lambda, -x) of the forward (inverse ==
// false) or inverse map, sharing one evaluation of J_alpha and J_{alpha+1}.
inline std::pair<Complex, Complex> transform_kernel_pair(const TransformSpec& s, double lambda, double x,
                                                         bool inverse) {
  const double t = lambda * x;
  const double even = bessel_norm(s.alpha, t);
  if (s.kind == TransformKind::hankel) return {even, even};
  const double odd = t / (2 * (s.alpha + 1)) * bessel_norm(s.alpha + 1, t);
  const bool printed = s.normalization == Normalization::printed;
  // sign of the odd part at +x
  double sign = -1;
  if (s.kind == TransformKind::dunkl) {
    sign = (printed || inverse) ? 1 : -1;
    return {Complex(even, sign * odd), Complex(even, -sign * odd)};
  }
  if (printed && inverse) sign = 1;
  return {even + sign * odd, even - sign * odd};
}

inline Complex transform_kernel(const TransformSpec& s, double lambda, double x, bool inverse) {
  return transform_kernel_pair(s, lambda, x, inverse).first;
}

// Panel breakpoints on [0, R]: n uniform panels with the first one split
// geometrically toward 0.
inline std::vector<double> panel_edges(double r, int n) {
  std::vector<double> edges{0.0};
  const double h = r / n;
  for (int j = 6; j >= 1; --j) edges.push_back(h * std::ldexp(1.0, -j));
  for (int i = 1; i <= n; ++i) edges.push_back(h * i);
  return edges;
}

template <class F>
Complex gauss_panels(F&& g, const std::vector<double>& edges) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  Complex total = 0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = (edges[p] + edges[p + 1]) / 2;
    const double half = (edges[p + 1] - edges[p]) / 2;
    Complex acc = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double u = half * nodes[i];
      if (nodes[i] == 0) {
        acc += weights[i] * g(mid);
      } else {
        acc += weights[i] * (g(mid - u) + g(mid + u));
      }
    }
    total += half * acc;
  }
  return total;
}

// Integral over [0, R] of g with panel doubling until two successive values
// agree to the tolerance.
template <class F>
Complex refined_integral(const TransformSpec& s, F&& g) {
  int panels = s.initial_panels;
  Complex prev = gauss_panels(g, panel_edges(s.domain_cut, panels));
  for (int r = 0; r < s.max_refinements; ++r) {
    panels *= 2;
    const Complex next = gauss_panels(g, panel_edges(s.domain_cut, panels));
    if (std::abs(next - prev) <= s.tolerance * (1 + std::abs(next))) return next;
    prev = next;
  }
  throw AccuracyError("transform quadrature did not converge after " + std::to_string(s.max_refinements) +
                      " refinements");
}

inline Complex apply_transform(const TransformSpec& s, const SampledFunction& f, double at, bool inverse) {
  s.validate();
  const double w = 2 * s.alpha + 1;
  auto g = [&](double x) -> Complex {
    const double weight = x == 0 ? (w == 0 ? 1.0 : 0.0) : std::pow(x, w);
    const auto [kp, km] = transform_kernel_pair(s, at, x, inverse);
    Complex v = f(x) * kp;
    if (s.real_line()) v += f(-x) * km;
    return v * weight;
  };
  return s.constant() * refined_integral(s, g);
}

}  // namespace detail

inline Complex forward(const TransformSpec& s, const SampledFunction& f, double lambda) {
  return detail::apply_transform(s, f, lambda, false);
}

inline Complex inverse(const TransformSpec& s, const SampledFunction& fhat, double x) {
  return detail::apply_transform(s, fhat, x, true);
}

// (lambda, fhat(lambda)) on the given grid.
inline std::vector<std::pair<double, Complex>> forward_table(const TransformSpec& s, const SampledFunction& f,
                                                             const std::vector<double>& lambdas) {
  std::vector<std::pair<double, Complex>> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.emplace_back(l, forward(s, f, l));
  return out;
}

// max |inverse(forward(f))(x) - f(x)| over the sample points.
inline double roundtrip_residual(const TransformSpec& s, const SampledFunction& f, const std::vector<double>& xs) {
  // The inverse quadrature uses the same lambda nodes for every x.
  std::map<double, Complex> cache;
  const SampledFunction fhat = [&](double l) {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, forward(s, f, l)).first;
    return it->second;
  };
  double worst = 0;
  for (double x : xs) worst = std::max(worst, std::abs(inverse(s, fhat, x) - f(x)));
  return worst;
}

// For even f the (-1)-Bessel transform equals the Hankel transform.
inline double even_reduction_residual(double alpha, const SampledFunction& f_even, const std::vector<double>& lambdas,
                                      double tolerance = 1e-12) {
  TransformSpec m{TransformKind::minus1, alpha};
  TransformSpec h{TransformKind::hankel, alpha};
  m.tolerance = h.tolerance = tolerance;
  double worst = 0;
  for (double l : lambdas) worst = std::max(worst, std::abs(forward(m, f_even, l) - forward(h, f_even, l)));
  return worst;
}

// max over lambdas of |hankel(e^{-x^2/2})(lambda) - e^{-lambda^2/2}|
inline double gaussian_self_reciprocity(double alpha, const std::vector<double>& lambdas,
                                        Normalization n = Normalization::standard) {
  TransformSpec h{TransformKind::hankel, alpha};
  h.normalization = n;
  const SampledFunction g = [](double x) { return Complex(std::exp(-x * x / 2)); };
  double worst = 0;
  for (double l : lambdas) worst = std::max(worst, std::abs(forward(h, g, l) - std::exp(-l * l / 2)));
  return worst;
}

}  // namespace qbessel
