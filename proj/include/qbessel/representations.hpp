#pragma once

// The difference / differential-reflection operators of the little q-Jacobi,
// q-Laguerre, little (-1)-Jacobi, q-Bessel and Dunkl families, and their
// three-generator realizations with declared relation sets.

#include <string>

#include "qbessel/opalgebra.hpp"

namespace qbessel {

namespace ops {

template <class T>
LaurentPoly<T> poly(std::initializer_list<std::pair<int, T>> terms) {
  LaurentPoly<T> p;
  for (const auto& [d, c] : terms) p += LaurentPoly<T>::monomial(d, c);
  return p;
}

template <class T>
LinOp<T> id() {
  return LinOp<T>::identity();
}

// f -> (f(x) - f(-x)) / x
template <class T>
LinOp<T> reflection_difference() {
  return LinOp<T>::mult_by(LaurentPoly<T>::monomial(-1)) * (id<T>() - LinOp<T>::reflect());
}

}  // namespace ops

// Y_{a,b,q} f = a (bq - 1/x)(f(qx) - f(x)) + (1 - 1/x)(f(x/q) - f(x))
template <class T>
LinOp<T> little_q_jacobi_operator(const T& q, const T& a, const T& b) {
  using P = LaurentPoly<T>;
  const auto I = ops::id<T>();
  return a * (LinOp<T>::mult_by(ops::poly<T>({{0, b * q}, {-1, T(-1)}})) * (LinOp<T>::dilate(q) - I)) +
         LinOp<T>::mult_by(P::constant(T(1)) - P::monomial(-1)) *
             (LinOp<T>::dilate(T(1) / q) - I);
}

// L_{a,q} y = a(1 + 1/x) y(qx) - [1/x + a(1 + 1/x)] y(x) + (1/x) y(x/q)
template <class T>
LinOp<T> q_laguerre_operator(const T& q, const T& a) {
  return LinOp<T>::mult_by(ops::poly<T>({{0, a}, {-1, a}})) * LinOp<T>::dilate(q) -
         LinOp<T>::mult_by(ops::poly<T>({{0, a}, {-1, a + T(1)}})) +
         LinOp<T>::mult_by(LaurentPoly<T>::monomial(-1)) * LinOp<T>::dilate(T(1) / q);
}

// (x - 1) f'(-x) + (alpha + beta + 1 - alpha/x) (f(x) - f(-x)) / 2
template <class T>
LinOp<T> minus1_jacobi_operator(const T& alpha, const T& beta) {
  const auto s = LinOp<T>::reflect();
  const T half = T(1) / T(2);
  return LinOp<T>::mult_by(ops::poly<T>({{1, T(1)}, {0, T(-1)}})) * s * LinOp<T>::derivative() +
         half * (LinOp<T>::mult_by(ops::poly<T>({{0, alpha + beta + T(1)}, {-1, T(-1) * alpha}})) *
                 (ops::id<T>() - s));
}

// Y_{a,q} f = (a/x)(f(qx) - f(x)) + (1/x)(f(x/q) - f(x))
template <class T>
LinOp<T> q_bessel3_operator(const T& q, const T& a) {
  const auto I = ops::id<T>();
  const auto inv_x = LinOp<T>::mult_by(LaurentPoly<T>::monomial(-1));
  return a * (inv_x * (LinOp<T>::dilate(q) - I)) + inv_x * (LinOp<T>::dilate(T(1) / q) - I);
}

// Y_{a,q,2} y = (aq/x) y(x) - q(a + 1)/x y(x/q) + (q/x) y(x/q^2)
template <class T>
LinOp<T> q_bessel2_operator(const T& q, const T& a) {
  const auto inv_x = LinOp<T>::mult_by(LaurentPoly<T>::monomial(-1));
  return (a * q) * inv_x - (q * (a + T(1))) * (inv_x * LinOp<T>::dilate(T(1) / q)) +
         q * (inv_x * LinOp<T>::dilate(T(1) / (q * q)));
}

// Dunkl operator T_alpha f = f' + (alpha + 1/2)(f(x) - f(-x))/x.
template <class T>
LinOp<T> dunkl_operator(const T& alpha) {
  return LinOp<T>::derivative() + (alpha + T(1) / T(2)) * ops::reflection_difference<T>();
}

// Y_alpha f = f'(-x) + (alpha + 1/2)(f(x) - f(-x))/x, i.e. reflect o T_alpha.
template <class T>
LinOp<T> y_alpha_operator(const T& alpha) {
  return LinOp<T>::reflect() * LinOp<T>::derivative() +
         (alpha + T(1) / T(2)) * ops::reflection_difference<T>();
}

// Lambda = s o d/dx
template <class T>
LinOp<T> lambda_operator() {
  return LinOp<T>::reflect() * LinOp<T>::derivative();
}

namespace detail {

inline void require_generic_q(const Rational& q) {
  if (q == 0 || q == 1 || q == -1) throw ParameterError("q must not be 0 or +-1");
}

}  // namespace detail

inline Representation rep_little_q_jacobi(const Rational& q, const Rational& a, const Rational& b,
                                          const Rational& r) {
  detail::require_generic_q(q);
  if (r * r != a * b) throw ParameterError("rep_little_q_jacobi: r^2 must equal ab");
  if (r == 0 || b == 0) throw ParameterError("rep_little_q_jacobi: ab must be nonzero");
  using Op = LinOp<Rational>;
  const Rational mu = Rational(-1) / ((1 - q * q) * r);
  Representation rep;
  rep.name = "little-q-jacobi";
  rep.params = {{"q", q}, {"a", a}, {"b", b}, {"r", r}};
  rep.X = Op::mult_by_x();
  rep.Y = mu * (little_q_jacobi_operator(q, a, b) + (1 + q * a * b) * Op::identity());
  rep.Z = (Rational(1) / (q * r)) * (Op::mult_by(ops::poly<Rational>({{0, 1}, {1, -1}})) *
                                     Op::dilate(Rational(1) / q));
  const Rational w2 = -(1 + b) / ((1 + q) * b);
  const Rational w3 = -(1 + a) / ((1 + q) * r);
  rep.relations = {
      {"YX-qXY", "YX - qXY = Z + w3", "YX - qXY = Z + w3", q_bracket(rep.Y, rep.X, q),
       {{"Z", 1}, {"Id", w3}}, {{"Z", 1}, {"Id", w3}}},
      {"ZY-qYZ", "ZY - qYZ = X + w2", "ZY - qYZ = X + w2", q_bracket(rep.Z, rep.Y, q),
       {{"X", 1}, {"Id", w2}}, {{"X", 1}, {"Id", w2}}},
      {"XZ-qZX", "XZ - qZX = 0", "XZ - qZX = 0", q_bracket(rep.X, rep.Z, q), {}, {}},
  };
  const Op& X = rep.X;
  const Op& Y = rep.Y;
  const Op& Z = rep.Z;
  rep.casimir = CasimirDecl{
      "(q^2-1) YXZ + q^2 X^2 + Z^2 + (q+1)(w2 q X + w3 Z)",
      (q * q - 1) * (Y * X * Z) + (q * q) * (X * X) + Z * Z + (q + 1) * ((w2 * q) * X + w3 * Z),
      Rational(-1) / b};
  return rep;
}

inline Representation rep_minus1_jacobi(const Rational& alpha, const Rational& beta) {
  if (alpha < 0 && denominator(alpha) == 1 && numerator(alpha) % 2 != 0) {
    throw ParameterError("rep_minus1_jacobi: alpha must not be a negative odd integer");
  }
  using Op = LinOp<Rational>;
  Representation rep;
  rep.name = "minus1-jacobi";
  rep.params = {{"alpha", alpha}, {"beta", beta}};
  rep.X = Op::mult_by_x();
  rep.Y = minus1_jacobi_operator(alpha, beta) - ((alpha + beta + 1) / 2) * Op::identity();
  rep.Z = Op::mult_by(ops::poly<Rational>({{1, 1}, {0, -1}})) * Op::reflect();
  rep.relations = {
      {"{X,Y}", "{X,Y} = Z - alpha", "{X,Y} = Z + alpha", anticommutator(rep.X, rep.Y),
       {{"Z", 1}, {"Id", -alpha}}, {{"Z", 1}, {"Id", alpha}}},
      {"{X,Z}", "{X,Z} = 0", "{X,Z} = 0", anticommutator(rep.X, rep.Z), {}, {}},
      {"{Y,Z}", "{Y,Z} = X + beta", "{Y,Z} = Y + beta", anticommutator(rep.Y, rep.Z),
       {{"X", 1}, {"Id", beta}}, {{"Y", 1}, {"Id", beta}}},
  };
  rep.casimir = CasimirDecl{"Y^2 + Z^2", rep.Y * rep.Y + rep.Z * rep.Z, Rational(1)};
  return rep;
}

// Rescaled n -> infinity limit of the little q-Jacobi realization. Y carries
// the sign produced by the limit, Y = Y_{a,q} / (1 - q^2).
inline Representation rep_qbessel3(const Rational& q, const Rational& a) {
  detail::require_generic_q(q);
  using Op = LinOp<Rational>;
  Representation rep;
  rep.name = "qbessel3";
  rep.params = {{"q", q}, {"a", a}};
  rep.X = Op::mult_by_x();
  rep.Y = (Rational(1) / (1 - q * q)) * q_bessel3_operator(q, a);
  rep.Z = (Rational(1) / q) * Op::dilate(Rational(1) / q);
  const Rational w3 = -(1 + a) / (1 + q);
  rep.relations = {
      {"YX-qXY", "YX - qXY = Z + w3", "YX - qXY = Z + w3", q_bracket(rep.Y, rep.X, q),
       {{"Z", 1}, {"Id", w3}}, {{"Z", 1}, {"Id", w3}}},
      {"ZY-qYZ", "ZY - qYZ = 0", "ZY - qYZ = 0", q_bracket(rep.Z, rep.Y, q), {}, {}},
      {"XZ-qZX", "XZ - qZX = 0", "XZ - qZX = 0", q_bracket(rep.X, rep.Z, q), {}, {}},
  };
  rep.casimir = CasimirDecl{"(q^2-1) YXZ + Z^2 - (1+a) Z",
                            (q * q - 1) * (rep.Y * rep.X * rep.Z) + rep.Z * rep.Z - (1 + a) * rep.Z,
                            -a};
  return rep;
}

inline Representation rep_dunkl(const Rational& alpha) {
  using Op = LinOp<Rational>;
  Representation rep;
  rep.name = "dunkl";
  rep.params = {{"alpha", alpha}};
  rep.X = Op::mult_by_x();
  rep.Y = y_alpha_operator(alpha);
  rep.Z = Op::reflect();
  const Rational c = 2 * alpha + 1;
  rep.relations = {
      {"{X,Y}", "{X,Y} = Z + 2alpha + 1", "{X,Y} = -Z - 2alpha - 1", anticommutator(rep.X, rep.Y),
       {{"Z", 1}, {"Id", c}}, {{"Z", -1}, {"Id", -c}}},
      {"{X,Z}", "{X,Z} = 0", "{X,Z} = 0", anticommutator(rep.X, rep.Z), {}, {}},
      {"{Y,Z}", "{Y,Z} = 0", "{Y,Z} = 0", anticommutator(rep.Y, rep.Z), {}, {}},
  };
  rep.casimir = CasimirDecl{"Z^2", rep.Z * rep.Z, Rational(1)};
  return rep;
}

inline Representation rep_qlaguerre(const Rational& q, const Rational& a) {
  detail::require_generic_q(q);
  using Op = LinOp<Rational>;
  Representation rep;
  rep.name = "qlaguerre";
  rep.params = {{"q", q}, {"a", a}};
  rep.X = Op::mult_by_x();
  rep.Y = (q / (q * q - 1)) * (q_laguerre_operator(q, a) + a * Op::identity());
  rep.Z = Rational(-1) * Op::dilate(Rational(1) / q);
  const Rational w2 = a * q / (1 + q);
  const Rational w3 = q * (1 + a) / (1 + q);
  rep.relations = {
      {"YX-qXY", "YX - qXY = Z + w3", "YX - qXY = Z + w3", q_bracket(rep.Y, rep.X, q),
       {{"Z", 1}, {"Id", w3}}, {{"Z", 1}, {"Id", w3}}},
      {"ZY-qYZ", "ZY - qYZ = w2", "ZY - qYZ = w2", q_bracket(rep.Z, rep.Y, q), {{"Id", w2}},
       {{"Id", w2}}},
      {"XZ-qZX", "XZ - qZX = 0", "XZ - qZX = 0", q_bracket(rep.X, rep.Z, q), {}, {}},
  };
  const Op& X = rep.X;
  const Op& Y = rep.Y;
  const Op& Z = rep.Z;
  rep.casimir = CasimirDecl{"(q^2-1) YXZ + Z^2 + (q+1)(w2 q X + w3 Z)",
                            (q * q - 1) * (Y * X * Z) + Z * Z + (q + 1) * ((w2 * q) * X + w3 * Z),
                            -a * q * q};
  return rep;
}

inline Representation rep_qbessel2(const Rational& q, const Rational& a) {
  detail::require_generic_q(q);
  using Op = LinOp<Rational>;
  Representation rep;
  rep.name = "qbessel2";
  rep.params = {{"q", q}, {"a", a}};
  rep.X = Op::mult_by_x();
  rep.Y = (q / (q * q - 1)) * (q_bessel2_operator(q, a) + a * Op::identity());
  rep.Z = Rational(-1) * Op::dilate(Rational(1) / q);
  const Rational mu1 = -q * (1 + a) / (1 + q);
  const Rational mu2 = -a * q;
  const Rational mu3 = -a * q * q;
  const Rational mu4 = -a * q / (1 + q);
  const ConstantMap printed{{"Z", mu1}, {"X", mu2}, {"Id", mu3}};
  rep.relations = {
      {"XY-q^2YX", "XY - q^2 YX = -q^2(1+a)/(1+q) Z - aq X - aq^2",
       "YX - q^2 XY = mu1 Z + mu2 X + mu3", q_bracket(rep.X, rep.Y, q * q),
       {{"Z", -q * q * (1 + a) / (1 + q)}, {"X", mu2}, {"Id", mu3}}, printed},
      {"ZY-qYZ", "ZY - qYZ = mu4 Z", "ZY - qYZ = mu4 Z", q_bracket(rep.Z, rep.Y, q),
       {{"Z", mu4}}, {{"Z", mu4}}},
      {"XZ-qZX", "XZ - qZX = 0", "XZ - qZX = 0", q_bracket(rep.X, rep.Z, q), {}, {}},
  };
  rep.paper_literal = {
      {"YX-q^2XY", "(not in span{Z,X,Y,Id})", "YX - q^2 XY = mu1 Z + mu2 X + mu3",
       q_bracket(rep.Y, rep.X, q * q), {}, printed},
  };
  return rep;
}

// Degenerate DAHA generators D = T_alpha (k = alpha + 1/2), Z = x, s = reflect.
struct DahaOperators {
  LinOp<Rational> D;
  LinOp<Rational> Z;
  LinOp<Rational> s;
};

inline DahaOperators rep_daha(const Rational& k) {
  using Op = LinOp<Rational>;
  return {dunkl_operator(k - Rational(1, 2)), Op::mult_by_x(), Op::reflect()};
}

struct DahaCheck {
  bool s_z_s_is_minus_z = false;
  bool s_d_s_is_minus_d = false;
  bool commutator = false;  // [D, Z] = 1 + 2k s

  bool all() const { return s_z_s_is_minus_z && s_d_s_is_minus_d && commutator; }
};

inline DahaCheck check_daha(const Rational& k, int max_degree) {
  const auto g = rep_daha(k);
  const auto I = LinOp<Rational>::identity();
  DahaCheck c;
  c.s_z_s_is_minus_z = is_zero_on_monomials(g.s * g.Z * g.s + g.Z, max_degree);
  c.s_d_s_is_minus_d = is_zero_on_monomials(g.s * g.D * g.s + g.D, max_degree);
  c.commutator = equal_on_monomials(q_bracket(g.D, g.Z, Rational(1)), I + (2 * k) * g.s, max_degree);
  return c;
}

// ((L_{a,q} + a) f)(x/q) == ((Y_{a,q,2} + a) f)(x) on x^0..x^max_degree.
inline bool intertwining_check(const Rational& q, const Rational& a, int max_degree) {
  detail::require_generic_q(q);
  const auto I = LinOp<Rational>::identity();
  const auto lhs = LinOp<Rational>::dilate(1 / q) * (q_laguerre_operator(q, a) + a * I);
  const auto rhs = q_bessel2_operator(q, a) + a * I;
  return equal_on_monomials(lhs, rhs, max_degree);
}

}  // namespace qbessel
