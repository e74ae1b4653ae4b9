#pragma once

// Little q-Jacobi, q-Laguerre, little (-1)-Jacobi, Jacobi and Laguerre
// polynomials from their terminating hypergeometric representations, with
// eigenvalue, recurrence and orthogonality checks.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qbessel/qseries.hpp"
#include "qbessel/representations.hpp"

namespace qbessel {

template <class T>
struct PolyFamilyInstance {
  std::string family;
  int n = 0;
  std::map<std::string, T> params;
  LaurentPoly<T> coeffs;
};

namespace detail {

template <class T>
LaurentPoly<T> from_coefficients(const std::vector<T>& c, int stride = 1) {
  std::vector<T> dense(c.empty() ? 0 : (c.size() - 1) * static_cast<std::size_t>(stride) + 1, T(0));
  for (std::size_t k = 0; k < c.size(); ++k) dense[k * static_cast<std::size_t>(stride)] = c[k];
  return LaurentPoly<T>(0, std::move(dense));
}

inline void require_degree(int n) {
  if (n < 0) throw ParameterError("polynomial degree must be nonnegative");
}

}  // namespace detail

// p_n(x; a, b | q) = 2Phi1(q^-n, abq^{n+1}; aq | q; qx)
template <class T>
PolyFamilyInstance<T> little_q_jacobi(int n, const T& q, const T& a, const T& b) {
  detail::require_degree(n);
  if (is_zero(q)) throw ParameterError("little_q_jacobi: q must be nonzero");
  const auto c = hyper_coefficients<T>({ipow(q, -n), a * b * ipow(q, n + 1)}, {a * q}, q, q, n);
  return {"little_q_jacobi", n, {{"q", q}, {"a", a}, {"b", b}}, detail::from_coefficients(c)};
}

// L_n(x, a; q) = (aq;q)_n/(q;q)_n 1phi1(q^-n; aq | q; -a q^{n+1} x)
template <class T>
PolyFamilyInstance<T> q_laguerre(int n, const T& q, const T& a) {
  detail::require_degree(n);
  if (is_zero(q)) throw ParameterError("q_laguerre: q must be nonzero");
  const T qn = q_pochhammer(q, q, n);
  if (is_zero(qn)) throw ParameterError("q_laguerre: (q;q)_n vanishes");
  const auto c = hyper_coefficients<T>({ipow(q, -n)}, {a * q}, q, T(-1) * a * ipow(q, n + 1), n);
  auto p = detail::from_coefficients(c);
  p *= q_pochhammer(a * q, q, n) / qn;
  return {"q_laguerre", n, {{"q", q}, {"a", a}}, std::move(p)};
}

// P_n^{(alpha,beta,-1)} from the even/odd pair of 2F1 in x^2.
template <class T>
PolyFamilyInstance<T> minus1_jacobi(int n, const T& alpha, const T& beta) {
  detail::require_degree(n);
  if (is_zero(alpha + T(1))) throw ParameterError("minus1_jacobi: alpha + 1 must be nonzero");
  const T two(2);
  const T nn(n);
  const int m = n / 2;
  LaurentPoly<T> p;
  const auto x = LaurentPoly<T>::x();
  if (n % 2 == 0) {
    p = detail::from_coefficients(
        classical_coefficients<T>({T(-1) * nn / two, (alpha + beta + nn + two) / two}, {(alpha + T(1)) / two},
                                  T(1), m),
        2);
    if (n > 0) {
      const auto odd = detail::from_coefficients(
          classical_coefficients<T>({T(1) - nn / two, (alpha + beta + nn + two) / two},
                                    {(alpha + T(3)) / two}, T(1), m),
          2);
      p += (x * odd) * (nn / (alpha + T(1)));
    }
  } else {
    const T top = T(-1) * (nn - T(1)) / two;
    p = detail::from_coefficients(
        classical_coefficients<T>({top, (alpha + beta + nn + T(1)) / two}, {(alpha + T(1)) / two}, T(1), m), 2);
    const auto odd = detail::from_coefficients(
        classical_coefficients<T>({top, (alpha + beta + nn + T(3)) / two}, {(alpha + T(3)) / two}, T(1), m), 2);
    p -= (x * odd) * ((alpha + beta + nn + T(1)) / (alpha + T(1)));
  }
  return {"minus1_jacobi", n, {{"alpha", alpha}, {"beta", beta}}, std::move(p)};
}

// P_n^{(alpha,beta)}(x) = (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)
template <class T>
PolyFamilyInstance<T> jacobi_classical(int n, const T& alpha, const T& beta) {
  detail::require_degree(n);
  const auto c = classical_coefficients<T>({T(-n), T(n) + alpha + beta + T(1)}, {alpha + T(1)}, T(1), n);
  const auto u = LaurentPoly<T>(0, {T(1) / T(2), T(-1) / T(2)});
  LaurentPoly<T> p;
  LaurentPoly<T> uk = LaurentPoly<T>::constant(T(1));
  for (const auto& ck : c) {
    p.accumulate(uk, ck);
    uk = uk * u;
  }
  p *= pochhammer(alpha + T(1), n) / pochhammer(T(1), n);
  return {"jacobi", n, {{"alpha", alpha}, {"beta", beta}}, std::move(p)};
}

// L_n^alpha(x) = (alpha+1)_n/n! 1F1(-n; alpha+1; x)
template <class T>
PolyFamilyInstance<T> laguerre_classical(int n, const T& alpha) {
  detail::require_degree(n);
  auto p = detail::from_coefficients(classical_coefficients<T>({T(-n)}, {alpha + T(1)}, T(1), n));
  p *= pochhammer(alpha + T(1), n) / pochhammer(T(1), n);
  return {"laguerre", n, {{"alpha", alpha}}, std::move(p)};
}

// P_n^{(alpha,beta)}(1 - u) by the three-term recurrence written in u, so
// that arguments extremely close to 1 keep their relative accuracy.
template <class R>
R jacobi_value_offset(int n, const R& alpha, const R& beta, const R& u) {
  detail::require_degree(n);
  R p0(1);
  if (n == 0) return p0;
  R p1 = (alpha + R(1)) - (alpha + beta + R(2)) * u / R(2);
  const R ab = alpha + beta;
  const R a2b2 = alpha * alpha - beta * beta;
  for (int k = 2; k <= n; ++k) {
    const R kk(k);
    const R c = R(2) * kk + ab;
    const R a1 = R(2) * kk * (kk + ab) * (c - R(2));
    const R a2 = (c - R(1)) * a2b2;
    const R a3 = (c - R(2)) * (c - R(1)) * c;
    const R a4 = R(2) * (kk + alpha - R(1)) * (kk + beta - R(1)) * c;
    const R p2 = ((a2 + a3 - a3 * u) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

template <class R>
R jacobi_value(int n, const R& alpha, const R& beta, const R& x) {
  return jacobi_value_offset(n, alpha, beta, R(1) - x);
}

// Eigenvalues.

template <class T>
T little_q_jacobi_eigenvalue(int n, const T& q, const T& a, const T& b) {
  return ipow(q, -n) * (T(1) - ipow(q, n)) * (T(1) - a * b * ipow(q, n + 1));
}

template <class T>
T q_laguerre_eigenvalue(int n, const T& q, const T& a) {
  return T(-1) * a * (T(1) - ipow(q, n));
}

template <class T>
T minus1_jacobi_eigenvalue(int n, const T& alpha, const T& beta) {
  return n % 2 == 0 ? T(-n) : alpha + beta + T(n + 1);
}

// Exact eigenchecks: operator image equals eigenvalue times the polynomial.

inline bool little_q_jacobi_eigencheck(int n, const Rational& q, const Rational& a, const Rational& b) {
  const auto p = little_q_jacobi(n, q, a, b).coeffs;
  return little_q_jacobi_operator(q, a, b)(p) == p * little_q_jacobi_eigenvalue(n, q, a, b);
}

inline bool q_laguerre_eigencheck(int n, const Rational& q, const Rational& a) {
  const auto p = q_laguerre(n, q, a).coeffs;
  return q_laguerre_operator(q, a)(p) == p * q_laguerre_eigenvalue(n, q, a);
}

inline bool minus1_jacobi_eigencheck(int n, const Rational& alpha, const Rational& beta) {
  const auto p = minus1_jacobi(n, alpha, beta).coeffs;
  return minus1_jacobi_operator(alpha, beta)(p) == p * minus1_jacobi_eigenvalue(n, alpha, beta);
}

// -a q^{2n+1} x L_n = (1-q^{n+1}) L_{n+1} - [(1-q^{n+1}) + q(1-aq^n)] L_n + q(1-aq^n) L_{n-1}
inline bool q_laguerre_recurrence_check(int n, const Rational& q, const Rational& a) {
  if (n < 1) throw ParameterError("q_laguerre_recurrence_check: n >= 1");
  const auto lm = q_laguerre(n - 1, q, a).coeffs;
  const auto l0 = q_laguerre(n, q, a).coeffs;
  const auto lp = q_laguerre(n + 1, q, a).coeffs;
  const Rational u = 1 - ipow(q, n + 1);
  const Rational v = q * (1 - a * ipow(q, n));
  const auto lhs = (RationalPoly::x() * l0) * (-a * ipow(q, 2 * n + 1));
  const auto rhs = lp * u - l0 * (u + v) + lm * v;
  return lhs == rhs;
}

struct OrthogonalityResult {
  int m = 0;
  int n = 0;
  int terms = 0;
  double value = 0;       // prefactor * truncated sum
  double tail_bound = 0;  // bound on |prefactor * omitted terms| plus prefactor truncation
  double expected = 0;    // closed-form right-hand side
  double tolerance = 0;

  bool passed() const { return std::abs(value - expected) <= tolerance + tail_bound; }
};

// (aq;q)_inf/(abq^2;q)_inf sum_{k<=K} p_m(q^k) p_n(q^k) (aq)^k (bq;q)_k/(q;q)_k
inline OrthogonalityResult orthogonality_sum(int m, int n, const Rational& q, const Rational& a,
                                             const Rational& b, int trunc_k = 200, double tolerance = 1e-10) {
  if (!(q > 0 && q < 1)) throw ParameterError("orthogonality_sum: need 0 < q < 1");
  if (!(a > 0 && a * q < 1)) throw ParameterError("orthogonality_sum: need 0 < a < 1/q");
  if (!(b * q < 1)) throw ParameterError("orthogonality_sum: need b < 1/q");
  if (trunc_k < 1) throw ParameterError("orthogonality_sum: truncation must be positive");

  const auto pm = little_q_jacobi(m, q, a, b).coeffs;
  const auto pn = little_q_jacobi(n, q, a, b).coeffs;
  // 50 digits: p_n(q^k) cancels heavily for small q, and double rounding
  // would swamp the 1e-10 tolerance.
  using H = HighReal;
  const H qd = to<H>(q);
  const H ad = to<H>(a);
  const H bd = to<H>(b);

  H sum(0);
  H qk(1);        // q^k
  H aqk(1);       // (aq)^k
  H ratio(1);     // (bq;q)_k/(q;q)_k
  for (int k = 0; k <= trunc_k; ++k) {
    sum += poly_eval_as<H>(pm, qk) * poly_eval_as<H>(pn, qk) * aqk * ratio;
    ratio *= (1 - bd * qd * qk) / (1 - qd * qk);
    qk *= qd;
    aqk *= ad * qd;
  }

  const H tol(1e-40);
  const auto num = q_pochhammer_inf(ad * qd, qd, tol);
  const auto den = q_pochhammer_inf(ad * bd * qd * qd, qd, tol);
  const H pref = num.value / den.value;

  auto abs_sum = [](const RationalPoly& p) {
    H s(0);
    p.for_each_term([&](int, const Rational& c) { s += abs(to<H>(c)); });
    return s;
  };
  // |(bq;q)_k/(q;q)_k| <= (-|b|q;q)_inf/(q;q)_inf for every k.
  const H ratio_bound = q_pochhammer_inf(H(-abs(bd) * qd), qd, tol).value / q_pochhammer_inf(qd, qd, tol).value;
  const H aq = ad * qd;
  const H omitted = abs(pref) * abs_sum(pm) * abs_sum(pn) * ratio_bound * pow(aq, trunc_k + 1) / (1 - aq);
  const H pref_err = abs(pref * sum) * (num.tail_bound + den.tail_bound);

  OrthogonalityResult r;
  r.m = m;
  r.n = n;
  r.terms = trunc_k + 1;
  r.value = static_cast<double>(pref * sum);
  r.tail_bound = static_cast<double>(omitted + pref_err);
  r.tolerance = tolerance;
  if (m == n) {
    const Rational rhs = (1 - a * b * q) * ipow(a * q, n) / (1 - a * b * ipow(q, 2 * n + 1)) *
                         q_pochhammer(q, q, n) * q_pochhammer(b * q, q, n) /
                         (q_pochhammer(a * q, q, n) * q_pochhammer(a * b * q, q, n));
    r.expected = to<double>(rhs);
  }
  return r;
}

}  // namespace qbessel
