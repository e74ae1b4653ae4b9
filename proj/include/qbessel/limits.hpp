#pragma once

// Limit transitions between the families, certified by error paths that
// decrease strictly toward the limit.

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qbessel/besselfam.hpp"
#include "qbessel/families.hpp"

namespace qbessel {

enum class RateKind {
  algebraic,  // error ~ h^p, h = path value (decreasing) or 1/path (increasing); reports p
  geometric,  // error ~ r^n along an integer path; reports -log(r) per unit step
};

struct LimitCase {
  std::string id;
  std::string description;
  std::string path_label;
  std::map<std::string, std::string> params;
  std::vector<double> path;
  std::vector<std::string> eval_labels;
  // Values of the source at every evaluation point for one path value.
  std::function<std::vector<HighReal>(double)> source;
  std::vector<HighReal> target;
  double tolerance = 1e-5;
  bool exact_target = false;
  RateKind rate_kind = RateKind::algebraic;
  std::string note;
};

struct LimitReport {
  std::string case_id;
  std::string description;
  std::string path_label;
  std::map<std::string, std::string> params;
  std::vector<double> path;
  std::vector<std::string> eval_labels;
  std::vector<double> errors;
  std::vector<double> rates;
  double estimated_rate = 0;
  double tolerance = 0;
  bool exact_target = false;
  bool decreasing = false;
  bool passed = false;
  std::string note;
};

namespace detail {

inline HighReal hr(double v) { return HighReal(v); }
inline HighReal hr(const Rational& v) { return to<HighReal>(v); }

inline std::vector<double> geometric_path(double start, double ratio, int count) {
  std::vector<double> p;
  for (int j = 0; j < count; ++j) p.push_back(start * std::pow(ratio, j));
  return p;
}

inline double log_ratio(double a, double b) { return std::log(a / b); }

// Errors are decreasing when each is strictly below its predecessor; an
// all-zero path counts as decreasing (exact agreement).
inline bool strictly_decreasing(const std::vector<double>& e) {
  bool all_zero = true;
  for (double v : e) all_zero = all_zero && v == 0;
  if (all_zero) return true;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (!(e[i] < e[i - 1])) return false;
  }
  return true;
}

// Shortest decimal that reads back as v.
inline std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline LimitReport run_limit(const LimitCase& c) {
  if (c.path.size() < 3) throw ParameterError("limit case '" + c.id + "' needs at least 3 path points");
  if (c.target.size() != c.eval_labels.size()) {
    throw ParameterError("limit case '" + c.id + "': target/label size mismatch");
  }
  LimitReport r;
  r.case_id = c.id;
  r.description = c.description;
  r.path_label = c.path_label;
  r.params = c.params;
  r.path = c.path;
  r.eval_labels = c.eval_labels;
  r.tolerance = c.tolerance;
  r.exact_target = c.exact_target;
  r.note = c.note;
  for (double p : c.path) {
    std::vector<HighReal> v;
    try {
      v = c.source(p);
    } catch (const std::exception& e) {
      throw DomainError("limit case '" + c.id + "' at " + c.path_label + " = " + detail::fmt(p) + ": " + e.what());
    }
    if (v.size() != c.target.size()) throw DomainError("limit case '" + c.id + "': source size mismatch");
    HighReal worst(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const HighReal d = abs(v[i] - c.target[i]);
      if (d > worst) worst = d;
    }
    r.errors.push_back(worst.convert_to<double>());
  }
  const bool increasing_path = c.path.back() > c.path.front();
  for (std::size_t i = 1; i < r.errors.size(); ++i) {
    const double e0 = r.errors[i - 1];
    const double e1 = r.errors[i];
    double rate = 0;
    if (e0 > 0 && e1 > 0) {
      if (c.rate_kind == RateKind::geometric) {
        rate = detail::log_ratio(e0, e1) / (c.path[i] - c.path[i - 1]);
      } else {
        const double h0 = increasing_path ? 1 / c.path[i - 1] : c.path[i - 1];
        const double h1 = increasing_path ? 1 / c.path[i] : c.path[i];
        rate = detail::log_ratio(e0, e1) / detail::log_ratio(h0, h1);
      }
    }
    r.rates.push_back(rate);
  }
  r.estimated_rate = r.rates.empty() ? 0 : r.rates.back();
  r.decreasing = detail::strictly_decreasing(r.errors);
  r.passed = r.decreasing && r.errors.back() < c.tolerance;
  return r;
}

// q = -e^eps, a = -e^{eps(2alpha+1)}: J_3((1-q^2)x, a; q) -> J_{alpha,-1}(x).
inline LimitCase bessoula_case(const Rational& alpha, std::vector<double> xs = {-2.0, -0.7, 0.5, 1.5, 3.0},
                               int steps = 27) {
  const double ad = to<double>(alpha);
  const bool cas_case = alpha == Rational(-1, 2);
  LimitCase c;
  c.id = cas_case ? "bessoula-cas" : "bessoula";
  c.description = "third q-Bessel to (-1)-Bessel as q -> -1";
  c.path_label = "epsilon";
  c.params = {{"alpha", to_string(alpha)}};
  c.path = detail::geometric_path(0.2, 0.5, steps);
  const HighReal al = detail::hr(alpha);
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(HighReal(cas_case ? cas(x) : minus1_bessel(ad, x)));
  }
  c.source = [xs, al](double eps) {
    const HighReal e(eps);
    const HighReal q = -exp(e);
    const HighReal a = -exp(e * (2 * al + 1));
    std::vector<HighReal> out;
    SeriesPolicy pol{1e-40, 5000};
    for (double x : xs) out.push_back(q_bessel3_norm<HighReal>((1 - q * q) * HighReal(x), a, q, pol));
    return out;
  };
  c.note = "argument scaled by 1-q^2; without it the limit is 1 for every x";
  return c;
}

// p_n(q^n x; a, b | q) -> J_3(x, a; q) as n -> infinity.
inline LimitCase prop_a1_case(const Rational& q, const Rational& a, const Rational& b,
                              std::vector<double> xs = {0.2, 1.0, 3.0}, std::vector<double> ns = {4, 8, 16, 24, 32}) {
  LimitCase c;
  c.id = "little-q-jacobi-to-qbessel3";
  c.description = "p_n(q^n x; a, b | q) -> J_3(x, a; q) as n -> infinity";
  c.path_label = "n";
  c.params = {{"q", to_string(q)}, {"a", to_string(a)}, {"b", to_string(b)}};
  c.path = std::move(ns);
  c.rate_kind = RateKind::geometric;
  const HighReal qh = detail::hr(q);
  const HighReal ah = detail::hr(a);
  SeriesPolicy pol{1e-40, 5000};
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(q_bessel3_norm<HighReal>(HighReal(x), ah, qh, pol));
  }
  c.source = [xs, q, a, b](double nd) {
    const int n = static_cast<int>(nd);
    const auto p = little_q_jacobi(n, q, a, b).coeffs;
    LaurentPoly<HighReal> ph;
    p.for_each_term([&](int d, const Rational& v) { ph += LaurentPoly<HighReal>::monomial(d, to<HighReal>(v)); });
    const HighReal qn = pow(to<HighReal>(q), n);
    std::vector<HighReal> out;
    for (double x : xs) out.push_back(poly_eval(ph, qn * HighReal(x)));
    return out;
  };
  return c;
}

// p_n(x; -e^{eps alpha}, -e^{eps beta} | -e^eps) -> P_n^{(alpha,beta,-1)}(x), n = 1..max_n.
inline LimitCase little_q_jacobi_to_minus1_case(const Rational& alpha, const Rational& beta, int max_n = 6,
                                                std::vector<double> xs = {-0.9, -0.3, 0.4, 0.8}, int steps = 36) {
  LimitCase c;
  c.id = "little-q-jacobi-to-minus1-jacobi";
  c.description = "little q-Jacobi to little (-1)-Jacobi as q -> -1";
  c.path_label = "epsilon";
  c.params = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"max_n", std::to_string(max_n)}};
  c.path = detail::geometric_path(0.2, 0.5, steps);
  c.exact_target = true;
  c.tolerance = 1e-8;
  for (int n = 1; n <= max_n; ++n) {
    const auto p = minus1_jacobi(n, alpha, beta).coeffs;
    for (double x : xs) {
      c.eval_labels.push_back("n=" + std::to_string(n) + ",x=" + detail::fmt(x));
      c.target.push_back(poly_eval_as<HighReal>(p, HighReal(x)));
    }
  }
  const HighReal al = detail::hr(alpha);
  const HighReal be = detail::hr(beta);
  c.source = [xs, al, be, max_n](double eps) {
    const HighReal e(eps);
    const HighReal q = -exp(e);
    const HighReal a = -exp(e * al);
    const HighReal b = -exp(e * be);
    std::vector<HighReal> out;
    for (int n = 1; n <= max_n; ++n) {
      const auto p = little_q_jacobi<HighReal>(n, q, a, b).coeffs;
      for (double x : xs) out.push_back(poly_eval(p, HighReal(x)));
    }
    return out;
  };
  return c;
}

// Gamma(alpha+1)/n^alpha P_n^{(alpha,beta)}(1 - x^2/(2n^2)) -> J_alpha(x).
inline LimitCase jacobi_to_bessel_case(double alpha, double beta, std::vector<double> xs = {0.5, 1.5, 3.0},
                                       int max_log2_n = 20) {
  LimitCase c;
  c.id = "jacobi-to-bessel";
  c.description = "Gamma(alpha+1) n^-alpha P_n^(alpha,beta)(1 - x^2/(2n^2)) -> J_alpha(x)";
  c.path_label = "n";
  c.params = {{"alpha", detail::fmt(alpha)}, {"beta", detail::fmt(beta)}};
  for (int j = 4; j <= max_log2_n; ++j) c.path.push_back(std::ldexp(1.0, j));
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(HighReal(bessel_norm(alpha, x)));
  }
  c.source = [xs, alpha, beta](double nd) {
    const int n = static_cast<int>(nd);
    std::vector<HighReal> out;
    const long double g = std::tgamma(static_cast<long double>(alpha) + 1);
    for (double x : xs) {
      const long double u = static_cast<long double>(x) * x / (2.0L * nd * nd);
      const long double p = jacobi_value_offset<long double>(n, alpha, beta, u);
      out.push_back(HighReal(static_cast<double>(g * p / std::pow(static_cast<long double>(nd), alpha))));
    }
    return out;
  };
  return c;
}

// (aq;q)_n/(q;q)_n p_n(-x/(qb); a, b | q) -> L_n(x, a; q) as b -> infinity.
inline LimitCase lag2_case(const Rational& q, const Rational& a, int max_n = 5,
                           std::vector<double> xs = {0.3, 1.0, 2.5}, int steps = 12) {
  LimitCase c;
  c.id = "little-q-jacobi-to-q-laguerre";
  c.description = "little q-Jacobi to q-Laguerre as b -> infinity";
  c.path_label = "b";
  c.params = {{"q", to_string(q)}, {"a", to_string(a)}, {"max_n", std::to_string(max_n)}};
  for (int j = 1; j <= steps; ++j) c.path.push_back(std::pow(10.0, j));
  c.exact_target = true;
  c.tolerance = 1e-8;
  for (int n = 1; n <= max_n; ++n) {
    const auto p = q_laguerre(n, q, a).coeffs;
    for (double x : xs) {
      c.eval_labels.push_back("n=" + std::to_string(n) + ",x=" + detail::fmt(x));
      c.target.push_back(poly_eval_as<HighReal>(p, HighReal(x)));
    }
  }
  const HighReal qh = detail::hr(q);
  const HighReal ah = detail::hr(a);
  c.source = [xs, qh, ah, max_n](double bd) {
    const HighReal b(bd);
    std::vector<HighReal> out;
    for (int n = 1; n <= max_n; ++n) {
      const auto p = little_q_jacobi<HighReal>(n, qh, ah, b).coeffs;
      const HighReal pref = q_pochhammer(ah * qh, qh, n) / q_pochhammer(qh, qh, n);
      for (double x : xs) out.push_back(pref * poly_eval(p, -HighReal(x) / (qh * b)));
    }
    return out;
  };
  c.note = "prefactor (aq;q)_n/(q;q)_n; the infinite-product prefactor misses by a constant factor";
  return c;
}

// L_n(x, a; q) -> (aq;q)_inf/(q;q)_inf J_2(x; a; q) as n -> infinity.
inline LimitCase q_laguerre_to_qbessel2_case(const Rational& q, const Rational& a,
                                             std::vector<double> xs = {0.3, 1.0, 2.0},
                                             std::vector<double> ns = {5, 10, 20, 30, 40}) {
  LimitCase c;
  c.id = "q-laguerre-to-qbessel2";
  c.description = "L_n(x, a; q) -> (aq;q)_inf/(q;q)_inf J_2(x; a; q) as n -> infinity";
  c.path_label = "n";
  c.params = {{"q", to_string(q)}, {"a", to_string(a)}};
  c.path = std::move(ns);
  c.rate_kind = RateKind::geometric;
  const HighReal qh = detail::hr(q);
  const HighReal ah = detail::hr(a);
  const HighReal tol("1e-45");
  const HighReal pref = q_pochhammer_ratio_inf(ah * qh, qh, qh, tol).value;
  SeriesPolicy pol{1e-40, 5000};
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(pref * q_bessel2_norm<HighReal>(HighReal(x), ah, qh, pol));
  }
  c.source = [xs, q, a](double nd) {
    const auto p = q_laguerre(static_cast<int>(nd), q, a).coeffs;
    std::vector<HighReal> out;
    for (double x : xs) out.push_back(poly_eval_as<HighReal>(p, HighReal(x)));
    return out;
  };
  c.note = "the limit carries the factor (aq;q)_inf/(q;q)_inf";
  return c;
}

// L_n((1-q)x, q^alpha; q) -> L_n^alpha(x) as q = e^-eps -> 1.
inline LimitCase q_laguerre_to_laguerre_case(const Rational& alpha, int max_n = 5,
                                             std::vector<double> xs = {0.3, 1.0, 2.5}, int steps = 31) {
  LimitCase c;
  c.id = "q-laguerre-to-laguerre";
  c.description = "L_n((1-q)x, q^alpha; q) -> L_n^alpha(x) as q -> 1";
  c.path_label = "epsilon";
  c.params = {{"alpha", to_string(alpha)}, {"max_n", std::to_string(max_n)}};
  c.path = detail::geometric_path(0.2, 0.5, steps);
  c.exact_target = true;
  c.tolerance = 1e-8;
  for (int n = 1; n <= max_n; ++n) {
    const auto p = laguerre_classical(n, alpha).coeffs;
    for (double x : xs) {
      c.eval_labels.push_back("n=" + std::to_string(n) + ",x=" + detail::fmt(x));
      c.target.push_back(poly_eval_as<HighReal>(p, HighReal(x)));
    }
  }
  const HighReal al = detail::hr(alpha);
  c.source = [xs, al, max_n](double eps) {
    const HighReal q = exp(-HighReal(eps));
    const HighReal a = exp(-HighReal(eps) * al);
    std::vector<HighReal> out;
    for (int n = 1; n <= max_n; ++n) {
      const auto p = q_laguerre<HighReal>(n, q, a).coeffs;
      for (double x : xs) out.push_back(poly_eval(p, (1 - q) * HighReal(x)));
    }
    return out;
  };
  c.note = "argument scaled by 1-q";
  return c;
}

// J_3((1-q)^2 x, q^alpha; q) -> J_alpha(2 sqrt x) as q -> 1.
inline LimitCase qbessel3_classical_case(const Rational& alpha, std::vector<double> xs = {0.2, 1.0, 2.5},
                                         int steps = 8) {
  LimitCase c;
  c.id = "qbessel3-to-bessel";
  c.description = "J_3((1-q)^2 x, q^alpha; q) -> J_alpha(2 sqrt x) as q -> 1";
  c.path_label = "1-q";
  c.params = {{"alpha", to_string(alpha)}};
  for (int j = 1; j <= steps; ++j) c.path.push_back(std::pow(10.0, -j));
  const double ad = to<double>(alpha);
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(HighReal(bessel_norm(ad, 2 * std::sqrt(x))));
  }
  const HighReal al = detail::hr(alpha);
  c.source = [xs, al](double h) {
    const HighReal q = 1 - HighReal(h);
    const HighReal a = pow(q, al);
    SeriesPolicy pol{1e-40, 20000};
    std::vector<HighReal> out;
    for (double x : xs) out.push_back(q_bessel3_norm<HighReal>(HighReal(h) * HighReal(h) * HighReal(x), a, q, pol));
    return out;
  };
  return c;
}

// J^(2)_nu((1-q)x; q) -> J_nu(x) as q -> 1.
inline LimitCase jackson2_classical_case(double nu, std::vector<double> xs = {0.5, 1.3, 2.5}, int steps = 5) {
  LimitCase c;
  c.id = "jackson2-to-bessel";
  c.description = "J^(2)_nu((1-q)x; q) -> J_nu(x) as q -> 1";
  c.path_label = "1-q";
  c.params = {{"nu", detail::fmt(nu)}};
  for (int j = 1; j <= steps; ++j) c.path.push_back(std::pow(10.0, -j));
  for (double x : xs) {
    c.eval_labels.push_back("x=" + detail::fmt(x));
    c.target.push_back(HighReal(boost::math::cyl_bessel_j(nu, x)));
  }
  c.source = [xs, nu](double h) {
    const double q = 1 - h;
    std::vector<HighReal> out;
    for (double x : xs) out.push_back(HighReal(jackson_q_bessel<double>(2, nu, h * x, q)));
    return out;
  };
  c.note = "argument scaled by 1-q";
  return c;
}

// All registered cases at their default parameters.
inline std::vector<LimitCase> registered_limit_cases() {
  return {
      bessoula_case(Rational(1, 4)),
      bessoula_case(Rational(-1, 2)),
      prop_a1_case(Rational(1, 3), Rational(1, 4), Rational(1, 5)),
      little_q_jacobi_to_minus1_case(Rational(1, 2), Rational(3, 2)),
      jacobi_to_bessel_case(0.5, 0.25),
      lag2_case(Rational(1, 2), Rational(1, 3)),
      q_laguerre_to_qbessel2_case(Rational(1, 3), Rational(1, 4)),
      q_laguerre_to_laguerre_case(Rational(1, 2)),
      qbessel3_classical_case(Rational(1, 2)),
      jackson2_classical_case(0.7),
  };
}

struct QShiftedLimitReport {
  double alpha = 0;
  int n = 0;
  std::vector<double> path;
  double first_target = 0;   // (-1)^[n/2] 2^n ((alpha+1)/2)_[n/2]
  double second_target = 0;  // (-1)^[(n+1)/2] 2^n (alpha/2)_[(n+1)/2]
  std::vector<double> first_errors;
  std::vector<double> second_errors;
  double tolerance = 1e-5;
  bool passed = false;
};

inline QShiftedLimitReport qshifted_limit_check(double alpha, int n, std::vector<double> eps_path = {},
                                                double tolerance = 1e-5) {
  if (n < 0 || n > 12) throw ParameterError("qshifted_limit_check: need 0 <= n <= 12");
  if (eps_path.empty()) eps_path = detail::geometric_path(0.2, 0.5, 41);
  QShiftedLimitReport r;
  r.alpha = alpha;
  r.n = n;
  r.path = eps_path;
  r.tolerance = tolerance;
  const int h1 = n / 2;
  const int h2 = (n + 1) / 2;
  r.first_target = (h1 % 2 ? -1.0 : 1.0) * std::ldexp(1.0, n) * pochhammer((alpha + 1) / 2, h1);
  r.second_target = (h2 % 2 ? -1.0 : 1.0) * std::ldexp(1.0, n) * pochhammer(alpha / 2, h2);
  const HighReal al(alpha);
  for (double e : eps_path) {
    const HighReal eh(e);
    const HighReal q = -exp(eh);
    const HighReal v1 = q_pochhammer<HighReal>(-exp(eh * al), q, n) / pow(eh, h1);
    const HighReal v2 = q_pochhammer<HighReal>(exp(eh * al), q, n) / pow(eh, h2);
    r.first_errors.push_back(abs(v1 - HighReal(r.first_target)).convert_to<double>());
    r.second_errors.push_back(abs(v2 - HighReal(r.second_target)).convert_to<double>());
  }
  r.passed = detail::strictly_decreasing(r.first_errors) && detail::strictly_decreasing(r.second_errors) &&
             r.first_errors.back() < tolerance && r.second_errors.back() < tolerance;
  return r;
}

// Two routes around the square little q-Jacobi -> J_3 -> J_{alpha,-1}, with
// q = -e^-eps inside the unit disc so that the n -> infinity arrow applies.
// The little (-1)-Jacobi -> (-1)-Bessel arrow has no scaling formula and is
// not part of the check.
struct DiagramReport {
  double alpha = 0;
  std::vector<double> path;
  std::vector<int> degrees;
  std::vector<double> arrow_n_errors;  // |p_N(q^N y) - J_3(y, a; q)|
  std::vector<double> target_errors;   // |J_3((1-q^2)x, a; q) - J_{alpha,-1}(x)|
  bool passed = false;
  std::string note;
};

inline DiagramReport diagram_check(const Rational& alpha, const Rational& b, std::vector<double> xs = {-1.5, 0.4, 2.0},
                                   std::vector<double> eps_path = {0.2, 0.1, 0.05, 0.025, 0.0125}) {
  DiagramReport r;
  r.alpha = to<double>(alpha);
  r.path = eps_path;
  r.note = "the (-1)-Jacobi to (-1)-Bessel arrow has no scaling formula and is left out";
  const HighReal al = detail::hr(alpha);
  const HighReal bh = detail::hr(b);
  SeriesPolicy pol{1e-40, 5000};
  bool ok = true;
  for (double e : eps_path) {
    const HighReal eh(e);
    const HighReal q = -exp(-eh);
    const HighReal a = -exp(-eh * (2 * al + 1));
    const int n = static_cast<int>(std::ceil(100 / e));
    r.degrees.push_back(n);
    const auto p = little_q_jacobi<HighReal>(n, q, a, bh).coeffs;
    const HighReal qn = pow(q, n);
    double arrow = 0;
    double target = 0;
    for (double x : xs) {
      const HighReal y = (1 - q * q) * HighReal(x);
      const HighReal j3 = q_bessel3_norm<HighReal>(y, a, q, pol);
      arrow = std::max(arrow, abs(poly_eval(p, qn * y) - j3).convert_to<double>());
      target = std::max(target, abs(j3 - HighReal(minus1_bessel(r.alpha, x))).convert_to<double>());
    }
    r.arrow_n_errors.push_back(arrow);
    r.target_errors.push_back(target);
    ok = ok && arrow < 1e-10;
  }
  r.passed = ok && detail::strictly_decreasing(r.target_errors);
  return r;
}

}  // namespace qbessel
