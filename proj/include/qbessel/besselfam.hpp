#pragma once

// Normalized Bessel, Dunkl kernel, (-1)-Bessel, cas, normalized second and
// third q-Bessel and the Jackson J^(2), J^(3); termwise eigenchecks.

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qbessel/qseries.hpp"
#include "qbessel/representations.hpp"

namespace qbessel {

using Complex = std::complex<double>;

// Power series sum_{k<=K} c_k x^k.
template <class T>
struct TruncSeries {
  std::vector<T> c;

  int trunc_order() const { return static_cast<int>(c.size()) - 1; }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (std::size_t k = c.size(); k-- > 0;) {
      if constexpr (std::is_same_v<T, V>) {
        acc = acc * x + c[k];
      } else {
        acc = acc * x + V(c[k]);
      }
    }
    return acc;
  }

  TruncSeries derivative() const {
    TruncSeries d;
    for (std::size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * T(static_cast<int>(k)));
    if (d.c.empty()) d.c.push_back(T(0));
    return d;
  }

  // f(x) -> f(s x)
  TruncSeries scaled(const T& s) const {
    TruncSeries out = *this;
    T p(1);
    for (auto& v : out.c) {
      v *= p;
      p *= s;
    }
    return out;
  }

  LaurentPoly<T> as_poly() const { return LaurentPoly<T>(0, c); }
};

namespace detail {

inline void require_alpha(double alpha) {
  if (!(alpha > -1)) throw ParameterError("Bessel order alpha must exceed -1");
}

// Terms of 0F1(; alpha+1; -t^2/4) beyond this order are below 1e-30 for |t| <= 20.
inline constexpr int kBesselSeriesOrder = 160;

}  // namespace detail

// Coefficients of J_alpha(t) = sum_k (-t^2/4)^k / ((alpha+1)_k k!), K = 2 * half_order.
template <class T>
TruncSeries<T> bessel_norm_series(const T& alpha, int half_order = detail::kBesselSeriesOrder / 2) {
  TruncSeries<T> s;
  s.c.assign(static_cast<std::size_t>(2 * half_order + 1), T(0));
  T term(1);
  for (int k = 0; k <= half_order; ++k) {
    s.c[static_cast<std::size_t>(2 * k)] = term;
    const T den = (alpha + T(k + 1)) * T(k + 1);
    if (is_zero(den)) throw ParameterError("bessel_norm_series: (alpha+1)_k vanishes");
    term = term * T(-1) / (T(4) * den);
  }
  return s;
}

// J_{alpha,-1}(t) = J_alpha(t) + t/(2(alpha+1)) J_{alpha+1}(t)
template <class T>
TruncSeries<T> minus1_bessel_series(const T& alpha, int half_order = detail::kBesselSeriesOrder / 2) {
  auto s = bessel_norm_series(alpha, half_order);
  const auto up = bessel_norm_series(alpha + T(1), half_order);
  const T f = T(1) / (T(2) * (alpha + T(1)));
  s.c.push_back(T(0));
  for (std::size_t k = 0; k + 1 < s.c.size(); ++k) s.c[k + 1] += f * up.c[k];
  return s;
}

// E_alpha(t) = J_alpha(t) + i t/(2(alpha+1)) J_{alpha+1}(t); C is a complex field over T.
template <class C, class T>
TruncSeries<C> dunkl_kernel_series(const T& alpha, int half_order = detail::kBesselSeriesOrder / 2) {
  const auto even = bessel_norm_series(alpha, half_order);
  const auto up = bessel_norm_series(alpha + T(1), half_order);
  const T f = T(1) / (T(2) * (alpha + T(1)));
  TruncSeries<C> s;
  s.c.assign(even.c.size() + 1, C(0));
  for (std::size_t k = 0; k < even.c.size(); ++k) {
    s.c[k] += C(even.c[k]);
    s.c[k + 1] += C(T(0), f * up.c[k]);
  }
  return s;
}

// Normalized Bessel function Gamma(alpha+1)(2/x)^alpha J_alpha(x).
inline double bessel_norm(double alpha, double x) {
  detail::require_alpha(alpha);
  const double ax = std::abs(x);
  if (ax <= 10) {
    long double t = -static_cast<long double>(x) * x / 4;
    long double term = 1;
    long double sum = 1;
    for (int k = 0; k < detail::kBesselSeriesOrder; ++k) {
      term *= t / ((alpha + k + 1) * (k + 1.0L));
      sum += term;
      if (std::abs(term) < 1e-22L * (1 + std::abs(sum))) break;
    }
    return static_cast<double>(sum);
  }
  return boost::math::tgamma(alpha + 1) * std::pow(2 / ax, alpha) * boost::math::cyl_bessel_j(alpha, ax);
}

// d/dt J_alpha(t) = -t/(2(alpha+1)) J_{alpha+1}(t); below |t| <= 10 it is the
// termwise derivative of the series.
inline double bessel_norm_derivative(double alpha, double t) {
  detail::require_alpha(alpha);
  if (std::abs(t) <= 10) {
    static thread_local std::optional<std::pair<double, TruncSeries<long double>>> cache;
    if (!cache || cache->first != alpha) {
      cache.emplace(alpha, bessel_norm_series<long double>(alpha).derivative());
    }
    return static_cast<double>(cache->second.eval(static_cast<long double>(t)));
  }
  return -t / (2 * (alpha + 1)) * bessel_norm(alpha + 1, t);
}

inline Complex dunkl_kernel(double alpha, double x) {
  detail::require_alpha(alpha);
  return {bessel_norm(alpha, x), x / (2 * (alpha + 1)) * bessel_norm(alpha + 1, x)};
}

inline double minus1_bessel(double alpha, double x) {
  detail::require_alpha(alpha);
  return bessel_norm(alpha, x) + x / (2 * (alpha + 1)) * bessel_norm(alpha + 1, x);
}

inline double cas(double x) { return std::cos(x) + std::sin(x); }

// Third normalized q-Bessel function 1Phi1(0; aq | q; qx). The series also
// converges for |q| > 1, which the q -> -1 limit uses.
template <class R>
R q_bessel3_norm(const R& x, const R& a, const R& q, SeriesPolicy policy = {}) {
  using std::abs;
  if (q == R(0) || abs(q) == R(1)) throw ParameterError("q_bessel3_norm: need q != 0, |q| != 1");
  return phi_converged(HyperSpec<R>{{R(0)}, {a * q}, q, q * x}, policy);
}

// Second normalized q-Bessel function 0Phi1(-; qa | q; -qax).
template <class R>
R q_bessel2_norm(const R& x, const R& a, const R& q, SeriesPolicy policy = {}) {
  using std::abs;
  if (!(abs(q) < R(1)) || q == R(0)) throw ParameterError("q_bessel2_norm: need 0 < |q| < 1");
  return phi_converged(HyperSpec<R>{{}, {a * q}, q, R(-1) * q * a * x}, policy);
}

// Exact series coefficients of J_3(lambda x, a; q) and J_2(lambda x; a; q).
template <class T>
TruncSeries<T> q_bessel3_series(const T& a, const T& q, const T& lambda, int order) {
  return {hyper_coefficients<T>({T(0)}, {a * q}, q, q * lambda, order)};
}

template <class T>
TruncSeries<T> q_bessel2_series(const T& a, const T& q, const T& lambda, int order) {
  return {hyper_coefficients<T>({}, {a * q}, q, T(-1) * q * a * lambda, order)};
}

// Jackson's J^(2)_nu and J^(3)_nu for x > 0, 0 < q < 1.
template <class R>
R jackson_q_bessel(int kind, const R& nu, const R& x, const R& q, SeriesPolicy policy = {}) {
  using std::pow;
  if (kind != 2 && kind != 3) throw ParameterError("jackson_q_bessel: kind must be 2 or 3");
  if (!(x > R(0))) throw ParameterError("jackson_q_bessel: need x > 0");
  if (!(q > R(0) && q < R(1))) throw ParameterError("jackson_q_bessel: need 0 < q < 1");
  const R qnu = pow(q, nu + R(1));
  const R tol(policy.tolerance);
  const R pref = q_pochhammer_ratio_inf(qnu, q, q, tol).value;
  const R half = x / R(2);
  const R series = kind == 2
                       ? phi_converged(HyperSpec<R>{{}, {qnu}, q, R(-1) * qnu * half * half}, policy)
                       : phi_converged(HyperSpec<R>{{R(0)}, {qnu}, q, q * half * half}, policy);
  return pref * pow(half, nu) * series;
}

// Exact termwise check of op S = mu S on the truncated series S. Returns the
// lowest degree (< trunc order) where the residual is nonzero, or nullopt.
template <class T>
std::optional<int> termwise_residual(const LinOp<T>& op, const TruncSeries<T>& s, const T& mu) {
  const auto f = s.as_poly();
  const auto r = op(f) - f * mu;
  const int top = s.trunc_order() - 1;
  std::optional<int> first;
  r.for_each_term([&](int d, const T&) {
    if (d <= top && !first) first = d;
  });
  return first;
}

// Y_{a,q} J_3(lambda x, a; q) = -lambda J_3(lambda x, a; q)
inline std::optional<int> q_bessel3_eigencheck(const Rational& q, const Rational& a, const Rational& lambda,
                                               int order) {
  return termwise_residual(q_bessel3_operator(q, a), q_bessel3_series(a, q, lambda, order), -lambda);
}

// Y_{a,q,2} J_2(lambda x; a; q) = -a lambda J_2(lambda x; a; q)
inline std::optional<int> q_bessel2_eigencheck(const Rational& q, const Rational& a, const Rational& lambda,
                                               int order) {
  return termwise_residual(q_bessel2_operator(q, a), q_bessel2_series(a, q, lambda, order), -a * lambda);
}

// T_alpha E_alpha(lambda x) = i lambda E_alpha(lambda x), exactly over Q(i).
inline std::optional<int> dunkl_kernel_exact_eigencheck(const Rational& alpha, const Rational& lambda,
                                                        int half_order) {
  using C = ComplexRational;
  auto s = dunkl_kernel_series<C>(alpha, half_order).scaled(C(lambda));
  s.c.pop_back();  // the top odd coefficient lacks its even partner's image
  return termwise_residual(dunkl_operator(C(alpha)), s, C(Rational(0), lambda));
}

// Y_alpha J_{alpha,-1}(lambda x) = lambda J_{alpha,-1}(lambda x), exactly.
inline std::optional<int> minus1_bessel_exact_eigencheck(const Rational& alpha, const Rational& lambda,
                                                         int half_order) {
  auto s = minus1_bessel_series(alpha, half_order).scaled(lambda);
  s.c.pop_back();
  return termwise_residual(y_alpha_operator(alpha), s, lambda);
}

// |T_alpha E_alpha(lambda .)(x) - i lambda E_alpha(lambda x)|, termwise derivative.
inline double dunkl_eigen_residual(double alpha, double lambda, double x) {
  detail::require_alpha(alpha);
  if (x == 0) throw DomainError("dunkl_eigen_residual: x must be nonzero");
  const auto s = dunkl_kernel_series<std::complex<long double>, long double>(alpha);
  const auto d = s.derivative();
  using LC = std::complex<long double>;
  const long double l = lambda;
  const long double xl = x;
  const LC f = s.eval(LC(l * xl));
  const LC fm = s.eval(LC(-l * xl));
  const LC df = l * d.eval(LC(l * xl));
  const LC t = df + (static_cast<long double>(alpha) + 0.5L) * (f - fm) / xl;
  return static_cast<double>(std::abs(t - LC(0, l) * f));
}

// |Y_alpha J_{alpha,-1}(lambda .)(x) - lambda J_{alpha,-1}(lambda x)|
inline double minus1_eigen_residual(double alpha, double lambda, double x) {
  detail::require_alpha(alpha);
  if (x == 0) throw DomainError("minus1_eigen_residual: x must be nonzero");
  const auto s = minus1_bessel_series<long double>(alpha);
  const auto d = s.derivative();
  const long double l = lambda;
  const long double xl = x;
  const long double f = s.eval(l * xl);
  const long double fm = s.eval(-l * xl);
  const long double dfm = l * d.eval(-l * xl);  // f'(-x)
  const long double y = dfm + (static_cast<long double>(alpha) + 0.5L) * (f - fm) / xl;
  return static_cast<double>(std::abs(y - l * f));
}

// |(d^2/dx^2 + (2alpha+1)/x d/dx) J_alpha(lambda x) + lambda^2 J_alpha(lambda x)|
inline double bessel_ode_residual(double alpha, double lambda, double x) {
  detail::require_alpha(alpha);
  if (x == 0) throw DomainError("bessel_ode_residual: x must be nonzero");
  const auto s = bessel_norm_series<long double>(alpha);
  const auto d1 = s.derivative();
  const auto d2 = d1.derivative();
  const long double l = lambda;
  const long double t = l * x;
  const long double r = l * l * d2.eval(t) + (2 * static_cast<long double>(alpha) + 1) / x * l * d1.eval(t) +
                        l * l * s.eval(t);
  return static_cast<double>(std::abs(r));
}

// J_alpha(x) and J'_alpha(x) for x > 0 from the series sum (-1)^k (x/2)^{2k+alpha}/(k! Gamma(k+alpha+1)).
inline std::pair<double, double> bessel_j_with_derivative(double alpha, double x) {
  if (!(x > 0)) throw DomainError("bessel_j_with_derivative: need x > 0");
  const long double h = x / 2.0L;
  long double term = std::pow(h, static_cast<long double>(alpha)) / std::tgamma(static_cast<long double>(alpha) + 1);
  long double j = 0;
  long double dj = 0;
  for (int k = 0; k < detail::kBesselSeriesOrder; ++k) {
    j += term;
    dj += term * (2 * k + static_cast<long double>(alpha)) / static_cast<long double>(x);
    term *= -h * h / ((k + 1) * (k + 1 + static_cast<long double>(alpha)));
    if (std::abs(term) < 1e-24L && k > 4) break;
  }
  return {static_cast<double>(j), static_cast<double>(dj)};
}

// max over samples of the lowering/raising residuals
// |J'_a - (a/x)J_a + J_{a+1}| and |J'_{a+1} + ((a+1)/x)J_{a+1} - J_a|.
inline double raising_lowering_check(double alpha, const std::vector<double>& xs) {
  detail::require_alpha(alpha);
  double worst = 0;
  for (double x : xs) {
    const auto [ja, dja] = bessel_j_with_derivative(alpha, x);
    const auto [jb, djb] = bessel_j_with_derivative(alpha + 1, x);
    worst = std::max(worst, std::abs(dja - alpha / x * ja + jb));
    worst = std::max(worst, std::abs(djb + (alpha + 1) / x * jb - ja));
  }
  return worst;
}

struct DecompositionResidual {
  double even = 0;      // |even part of J_{a,-1}(lambda x) - J_a(lambda x)|
  double odd = 0;       // |odd part + (1/lambda) d/dx J_a(lambda x)|
  double identity = 0;  // |-(1/lambda) d/dx J_a(lambda x) - lambda x/(2(a+1)) J_{a+1}(lambda x)|
  double max() const { return std::max({even, odd, identity}); }
};

inline DecompositionResidual decomposition_check(double alpha, double lambda, const std::vector<double>& xs) {
  detail::require_alpha(alpha);
  if (lambda == 0) throw ParameterError("decomposition_check: lambda must be nonzero");
  DecompositionResidual r;
  for (double x : xs) {
    const double fp = minus1_bessel(alpha, lambda * x);
    const double fm = minus1_bessel(alpha, -lambda * x);
    const double dj = lambda * bessel_norm_derivative(alpha, lambda * x);
    r.even = std::max(r.even, std::abs((fp + fm) / 2 - bessel_norm(alpha, lambda * x)));
    r.odd = std::max(r.odd, std::abs((fp - fm) / 2 + dj / lambda));
    r.identity = std::max(r.identity, std::abs(-dj / lambda - lambda * x / (2 * (alpha + 1)) *
                                                                  bessel_norm(alpha + 1, lambda * x)));
  }
  return r;
}

struct DunklRelationFit {
  Complex c1;
  Complex c2;
  double fitted_residual = 0;   // max residual with the fitted constants
  double paper_residual = 0;    // with c1 = (1+i)/2, c2 = (1-i)/2
  double swapped_residual = 0;  // with c1 = (1-i)/2, c2 = (1+i)/2
};

// Least-squares fit of J_{a,-1}(lambda x) ~ c1 E_a(lambda x) + c2 E_a(-lambda x).
inline DunklRelationFit minus1_dunkl_relation_check(double alpha, double lambda, const std::vector<double>& xs) {
  detail::require_alpha(alpha);
  std::array<std::array<Complex, 2>, 2> g{};
  std::array<Complex, 2> rhs{};
  std::vector<std::array<Complex, 3>> rows;
  for (double x : xs) {
    const Complex e1 = dunkl_kernel(alpha, lambda * x);
    const Complex e2 = dunkl_kernel(alpha, -lambda * x);
    const Complex f = minus1_bessel(alpha, lambda * x);
    rows.push_back({e1, e2, f});
    const std::array<Complex, 2> b{e1, e2};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) g[i][j] += std::conj(b[i]) * b[j];
      rhs[i] += std::conj(b[i]) * f;
    }
  }
  const Complex det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  if (std::abs(det) < 1e-300) throw DomainError("minus1_dunkl_relation_check: degenerate sample set");
  DunklRelationFit out;
  out.c1 = (rhs[0] * g[1][1] - g[0][1] * rhs[1]) / det;
  out.c2 = (g[0][0] * rhs[1] - g[1][0] * rhs[0]) / det;
  auto resid = [&](Complex c1, Complex c2) {
    double w = 0;
    for (const auto& r : rows) w = std::max(w, std::abs(r[2] - c1 * r[0] - c2 * r[1]));
    return w;
  };
  const Complex p(0.5, 0.5);
  const Complex m(0.5, -0.5);
  out.fitted_residual = resid(out.c1, out.c2);
  out.paper_residual = resid(p, m);
  out.swapped_residual = resid(m, p);
  return out;
}

}  // namespace qbessel
