#pragma once

// q-Pochhammer symbols, basic hypergeometric series r_Phi_s and classical
// pFq series, in exact (terminating) or numeric (truncated) mode.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "qbessel/numerics.hpp"

namespace qbessel {

template <class T>
inline constexpr bool is_exact_v =
    std::is_same_v<T, Rational> || std::is_same_v<T, ComplexRational>;

template <class T>
auto magnitude(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return abs(v);
  } else {
    using std::abs;
    return abs(v);
  }
}

// (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k); (a;q)_0 = 1.
template <class T>
T q_pochhammer(const T& a, const T& q, int n) {
  if (n < 0) throw ParameterError("q_pochhammer: negative length");
  T result(1);
  T aqk = a;
  for (int k = 0; k < n; ++k) {
    result *= T(1) - aqk;
    aqk *= q;
  }
  return result;
}

template <class T>
struct InfiniteProduct {
  T value;
  // Relative error bound of the truncation: |value/true - 1| <= tail_bound.
  T tail_bound;
  int factors;
};

// (a;q)_inf truncated once |a| |q|^K / (1 - |q|) < tol, so that the omitted
// factors change the product by at most exp(that) - 1 <= 2 * that relative
// (tol <= 1).
template <class R>
InfiniteProduct<R> q_pochhammer_inf(const R& a, const R& q, const R& tol = R(1e-17),
                                    long max_factors = 50'000'000) {
  if constexpr (is_exact_v<R>) {
    throw UnsupportedModeError("(a;q)_inf has no exact rational value");
  } else {
    using std::abs;
    if (!(tol > R(0) && tol <= R(1))) throw ParameterError("(a;q)_inf: tolerance must lie in (0, 1]");
    const R aq = abs(q);
    if (!(aq < R(1))) throw ParameterError("(a;q)_inf requires |q| < 1");
    R result(1);
    R aqk = a;
    const R scale = R(1) / (R(1) - aq);
    for (long k = 0; k < max_factors; ++k) {
      const R bound = abs(aqk) * scale;
      if (bound < tol) {
        return {result, R(2) * bound, static_cast<int>(k)};
      }
      result *= R(1) - aqk;
      aqk *= q;
    }
    throw AccuracyError("(a;q)_inf: factor cap reached before tolerance");
  }
}

// (a;q)_inf / (b;q)_inf as one product of factor ratios, which stays finite
// when both products underflow (q near 1).
template <class R>
InfiniteProduct<R> q_pochhammer_ratio_inf(const R& a, const R& b, const R& q, const R& tol = R(1e-17),
                                          long max_factors = 50'000'000) {
  if constexpr (is_exact_v<R>) {
    throw UnsupportedModeError("(a;q)_inf/(b;q)_inf has no exact rational value");
  } else {
    using std::abs;
    const R aq = abs(q);
    if (!(aq < R(1))) throw ParameterError("(a;q)_inf requires |q| < 1");
    if (!(tol > R(0) && tol <= R(1) / R(4))) throw ParameterError("ratio product: tolerance must lie in (0, 1/4]");
    R result(1);
    R ak = a;
    R bk = b;
    const R scale = R(1) / (R(1) - aq);
    for (long k = 0; k < max_factors; ++k) {
      const R bound = (abs(ak) + abs(bk)) * scale;
      if (bound < tol) return {result, R(4) * bound, static_cast<int>(k)};
      const R den = R(1) - bk;
      if (den == R(0)) throw ParameterError("(b;q)_inf vanishes");
      result *= (R(1) - ak) / den;
      ak *= q;
      bk *= q;
    }
    throw AccuracyError("ratio product: factor cap reached before tolerance");
  }
}

// Parameters of r_Phi_s(a_1..a_r; b_1..b_s | q; z).
template <class T>
struct HyperSpec {
  std::vector<T> numerator_params;
  std::vector<T> denominator_params;
  T q;
  T z;
};

namespace detail {

// Smallest n <= limit with a q^n = 1 for some numerator parameter a, i.e. the
// order at which (a;q)_k first vanishes.
template <class T>
std::optional<int> termination_order(const std::vector<T>& nums, const T& q, int limit) {
  std::optional<int> best;
  for (const auto& a : nums) {
    T aqk = a;
    for (int k = 0; k <= limit; ++k) {
      if (aqk == T(1)) {
        if (!best || k < *best) best = k;
        break;
      }
      aqk *= q;
    }
  }
  return best;
}

}  // namespace detail

// Coefficients c_k of r_Phi_s(nums; dens | q; z_scale * x) as a power series
// in x, for k = 0..max_k (fewer if the series terminates). The term includes
// ((-1)^k q^{k(k-1)/2})^{1+s-r} exactly.
template <class T>
std::vector<T> hyper_coefficients(const std::vector<T>& nums, const std::vector<T>& dens,
                                  const T& q, const T& z_scale, int max_k) {
  const long exponent = 1 + static_cast<long>(dens.size()) - static_cast<long>(nums.size());
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(max_k) + 1);
  T term(1);
  T qk(1);  // q^k
  out.push_back(term);
  for (int k = 0; k < max_k; ++k) {
    T num(1);
    for (const auto& a : nums) num *= T(1) - a * qk;
    if (is_zero(num)) break;
    T den = T(1) - qk * q;
    for (const auto& b : dens) den *= T(1) - b * qk;
    if (is_zero(den)) {
      throw ParameterError("basic hypergeometric series: denominator (q, b; q)_k vanishes at k = " +
                           std::to_string(k + 1));
    }
    T factor = ipow(T(-1) * qk, exponent);
    term = term * num / den * factor * z_scale;
    out.push_back(term);
    qk *= q;
  }
  return out;
}

// Partial sum sum_{k=0}^{trunc} of the basic hypergeometric series. Exact
// scalar types require a terminating series.
template <class T>
T phi(const HyperSpec<T>& spec, int trunc) {
  if (trunc < 0) throw ParameterError("phi: negative truncation order");
  if constexpr (is_exact_v<T>) {
    const auto order = detail::termination_order(spec.numerator_params, spec.q, trunc);
    if (!order) {
      throw UnsupportedModeError("phi: exact mode needs a terminating series (a = q^-n, n <= trunc)");
    }
    const auto c = hyper_coefficients(spec.numerator_params, spec.denominator_params, spec.q,
                                      spec.z, *order);
    T s(0);
    for (const auto& t : c) s += t;
    return s;
  } else {
    const auto c = hyper_coefficients(spec.numerator_params, spec.denominator_params, spec.q,
                                      spec.z, trunc);
    T s(0);
    int growing = 0;
    const int limit = trunc / 2;
    for (std::size_t k = 0; k < c.size(); ++k) {
      s += c[k];
      if (k > 0 && magnitude(c[k]) > magnitude(c[k - 1])) {
        if (++growing >= limit && limit >= 2) {
          throw DivergenceError("phi: terms grew for " + std::to_string(growing) +
                                " consecutive orders");
        }
      } else {
        growing = 0;
      }
    }
    return s;
  }
}

struct SeriesPolicy {
  double tolerance = 1e-17;
  int max_terms = 5000;
};

// Numeric r_Phi_s summed until two consecutive increments fall below
// tol * (1 + |partial sum|). Hitting max_terms is an AccuracyError.
template <class R>
R phi_converged(const HyperSpec<R>& spec, SeriesPolicy policy = {}) {
  static_assert(!is_exact_v<R>, "phi_converged is numeric-only");
  const long exponent =
      1 + static_cast<long>(spec.denominator_params.size()) - static_cast<long>(spec.numerator_params.size());
  R term(1);
  R sum(1);
  R qk(1);
  int small = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    R num(1);
    for (const auto& a : spec.numerator_params) num *= R(1) - a * qk;
    if (num == R(0)) return sum;
    R den = R(1) - qk * spec.q;
    for (const auto& b : spec.denominator_params) den *= R(1) - b * qk;
    if (den == R(0)) throw ParameterError("basic hypergeometric series: zero denominator");
    term = term * num / den * ipow(R(-1) * qk, exponent) * spec.z;
    sum += term;
    qk *= spec.q;
    if (magnitude(term) < R(policy.tolerance) * (R(1) + magnitude(sum))) {
      if (++small >= 2) return sum;
    } else {
      small = 0;
    }
  }
  throw AccuracyError("phi: series did not converge within the term cap");
}

// Coefficients of pFq(p_params; q_params; z_scale * x) in x, k = 0..max_k.
template <class T>
std::vector<T> classical_coefficients(const std::vector<T>& p_params, const std::vector<T>& q_params,
                                      const T& z_scale, int max_k) {
  std::vector<T> out;
  T term(1);
  out.push_back(term);
  for (int k = 0; k < max_k; ++k) {
    T num(1);
    for (const auto& a : p_params) num *= a + T(k);
    if (is_zero(num)) break;
    T den(k + 1);
    for (const auto& b : q_params) {
      if (is_zero(b + T(k))) {
        throw ParameterError("classical hypergeometric series: denominator Pochhammer vanishes");
      }
      den *= b + T(k);
    }
    term = term * num / den * z_scale;
    out.push_back(term);
  }
  return out;
}

// sum_{k=0}^{trunc} prod (a_i)_k / prod (b_j)_k * z^k / k!
template <class T>
T classical_hyp(const std::vector<T>& p_params, const std::vector<T>& q_params, const T& z, int trunc) {
  const auto c = classical_coefficients(p_params, q_params, z, trunc);
  T s(0);
  for (const auto& t : c) s += t;
  return s;
}

// Rising factorial (a)_n.
template <class T>
T pochhammer(const T& a, int n) {
  T r(1);
  for (int k = 0; k < n; ++k) r *= a + T(k);
  return r;
}

}  // namespace qbessel
