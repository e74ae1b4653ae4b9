#pragma once

// Scalar substrate: exact rationals, complex rationals, extended floats and
// finite Laurent polynomials over any of them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "qbessel/errors.hpp"

namespace qbessel {

// Expression templates off so that products deduce as plain values in templates.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Real = double;
using HighReal = boost::multiprecision::cpp_bin_float_50;

// re + i*im with exact rational parts.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  ComplexRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    const Rational n = o.norm();
    if (n == 0) throw DomainError("complex rational division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << '(' << z.re << ")+(" << z.im << ")i";
  }
};

template <class T>
bool is_zero(const T& v) {
  return v == T(0);
}

// Conversions out of the exact field.
template <class V>
V to(const Rational& r);

template <>
inline Rational to<Rational>(const Rational& r) {
  return r;
}
template <>
inline double to<double>(const Rational& r) {
  return r.convert_to<double>();
}
template <>
inline long double to<long double>(const Rational& r) {
  return r.convert_to<long double>();
}
template <>
inline HighReal to<HighReal>(const Rational& r) {
  return HighReal(numerator(r).str()) / HighReal(denominator(r).str());
}
template <>
inline ComplexRational to<ComplexRational>(const Rational& r) {
  return ComplexRational(r);
}
template <>
inline std::complex<double> to<std::complex<double>>(const Rational& r) {
  return {to<double>(r), 0.0};
}

// Integer power, negative exponents allowed for invertible bases.
template <class T>
T ipow(const T& base, long e) {
  if (e < 0) {
    if (is_zero(base)) throw DomainError("zero raised to a negative power");
    return T(1) / ipow(base, -e);
  }
  T result(1);
  T b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

// Parses "p", "-p", "p/q". Decimals are rejected so that exact checks never
// pass through floating point.
inline Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  auto parse_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) throw ParameterError("not an integer: '" + std::string(v) + "'");
    for (std::size_t j = i; j < v.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(v[j])))
        throw ParameterError("not an exact rational: '" + std::string(v) + "'");
    }
    return BigInt(std::string(v[0] == '+' ? v.substr(1) : v));
  };
  s = trim(s);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(trim(s.substr(0, slash)));
  const BigInt den = parse_int(trim(s.substr(slash + 1)));
  if (den == 0) throw ParameterError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

// Accepts everything parse_rational does plus decimal/scientific notation.
inline double parse_real(std::string_view s) {
  if (s.find('/') != std::string_view::npos) return to<double>(parse_rational(s));
  std::size_t used = 0;
  const std::string str(s);
  double v = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + str + "'");
  }
  if (used != str.size()) throw ParameterError("trailing characters in '" + str + "'");
  return v;
}

// Finite Laurent polynomial sum_{d=lo}^{hi} c_d x^d. The zero polynomial has
// no stored coefficients and min_degree 0; otherwise both end coefficients
// are nonzero.
template <class T>
class LaurentPoly {
 public:
  using value_type = T;

  LaurentPoly() = default;
  LaurentPoly(int min_degree, std::vector<T> coeffs) : lo_(min_degree), c_(std::move(coeffs)) {
    normalize();
  }

  static LaurentPoly constant(T c) { return LaurentPoly(0, {std::move(c)}); }
  static LaurentPoly monomial(int degree, T c = T(1)) { return LaurentPoly(degree, {std::move(c)}); }
  static LaurentPoly x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  int min_degree() const { return lo_; }
  // -1 for the zero polynomial.
  int max_degree() const { return c_.empty() ? -1 : lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int d) const {
    if (c_.empty() || d < lo_ || d > max_degree()) return T(0);
    return c_[static_cast<std::size_t>(d - lo_)];
  }

  template <class F>
  void for_each_term(F&& f) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!qbessel::is_zero(c_[i])) f(lo_ + static_cast<int>(i), c_[i]);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, T(1)); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, T(-1)); }
  LaurentPoly& operator*=(const T& s) {
    if (qbessel::is_zero(s)) {
      *this = LaurentPoly();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  // this += s * o
  LaurentPoly& accumulate(const LaurentPoly& o, const T& s) {
    if (o.is_zero() || qbessel::is_zero(s)) return *this;
    if (is_zero()) {
      lo_ = o.lo_;
      c_.assign(o.c_.size(), T(0));
    }
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::max(max_degree(), o.max_degree());
    if (lo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), T(0));
    lo_ = lo;
    c_.resize(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += s * o.c_[i];
    }
    normalize();
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= T(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const T& s) { return a *= s; }
  friend LaurentPoly operator*(const T& s, LaurentPoly a) { return a *= s; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (qbessel::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    p.for_each_term([&](int d, const T& c) {
      if (!first) os << " + ";
      first = false;
      os << '(' << c << ")x^" << d;
    });
    return os;
  }

 private:
  void normalize() {
    std::size_t front = 0;
    while (front < c_.size() && qbessel::is_zero(c_[front])) ++front;
    if (front == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    while (qbessel::is_zero(c_.back())) c_.pop_back();
    if (front > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
      lo_ += static_cast<int>(front);
    }
  }

  int lo_ = 0;
  std::vector<T> c_;
};

template <class T>
LaurentPoly<T> pow(const LaurentPoly<T>& p, unsigned e) {
  LaurentPoly<T> r = LaurentPoly<T>::constant(T(1));
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

template <class T>
bool poly_is_proper(const LaurentPoly<T>& p) {
  return p.min_degree() >= 0;
}

// sum_d c_d x^d with coefficients mapped into V. Throws DomainError at x = 0
// when negative powers are present.
template <class V, class T>
V poly_eval_as(const LaurentPoly<T>& p, const V& x) {
  if (p.is_zero()) return V(0);
  if (p.min_degree() < 0 && x == V(0)) {
    throw DomainError("Laurent polynomial with negative powers evaluated at 0");
  }
  V acc(0);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if constexpr (std::is_same_v<T, V>) {
      acc = acc * x + c[i];
    } else {
      acc = acc * x + to<V>(c[i]);
    }
  }
  return acc * ipow(x, p.min_degree());
}

template <class T>
T poly_eval(const LaurentPoly<T>& p, const T& x) {
  return poly_eval_as<T, T>(p, x);
}

using RationalPoly = LaurentPoly<Rational>;
using ComplexPoly = LaurentPoly<ComplexRational>;

}  // namespace qbessel
