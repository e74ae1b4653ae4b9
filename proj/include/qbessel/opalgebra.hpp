#pragma once

// Composable linear operators on Laurent polynomials and an exact checker for
// (q-)commutation relations and Casimir scalars.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qbessel/numerics.hpp"

namespace qbessel {

template <class T>
class LinOp {
 public:
  using Poly = LaurentPoly<T>;

  struct Identity {};
  struct MultBy {
    Poly p;
  };
  struct Dilate {  // f(x) -> f(c x)
    T c;
  };
  struct Reflect {};  // f(x) -> f(-x)
  struct Derivative {};
  struct Scaled {
    T s;
    LinOp op;
  };
  struct Sum {
    std::vector<LinOp> terms;
  };
  struct Compose {  // outer(inner(f))
    LinOp outer;
    LinOp inner;
  };
  using Node = std::variant<Identity, MultBy, Dilate, Reflect, Derivative, Scaled, Sum, Compose>;

  LinOp() : LinOp(Sum{}) {}

  static LinOp identity() { return LinOp(Identity{}); }
  static LinOp zero() { return LinOp(Sum{}); }
  static LinOp mult_by(Poly p) { return LinOp(MultBy{std::move(p)}); }
  static LinOp mult_by_x() { return mult_by(Poly::x()); }
  static LinOp dilate(T c) {
    if (is_zero(c)) throw ParameterError("dilation by zero");
    return LinOp(Dilate{std::move(c)});
  }
  static LinOp reflect() { return LinOp(Reflect{}); }
  static LinOp derivative() { return LinOp(Derivative{}); }

  Poly apply(const Poly& f) const {
    return std::visit([&](const auto& n) { return apply_node(n, f); }, *node_);
  }
  Poly operator()(const Poly& f) const { return apply(f); }

  friend LinOp operator+(const LinOp& a, const LinOp& b) { return LinOp(Sum{{a, b}}); }
  friend LinOp operator-(const LinOp& a, const LinOp& b) { return LinOp(Sum{{a, T(-1) * b}}); }
  friend LinOp operator-(const LinOp& a) { return T(-1) * a; }
  // Composition: (a * b)(f) = a(b(f)).
  friend LinOp operator*(const LinOp& a, const LinOp& b) { return LinOp(Compose{a, b}); }
  friend LinOp operator*(const T& s, const LinOp& a) { return LinOp(Scaled{s, a}); }

 private:
  explicit LinOp(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  static Poly apply_node(const Identity&, const Poly& f) { return f; }
  static Poly apply_node(const MultBy& m, const Poly& f) { return m.p * f; }
  static Poly apply_node(const Dilate& d, const Poly& f) {
    if (f.is_zero()) return f;
    std::vector<T> c = f.coeffs();
    T w = ipow(d.c, f.min_degree());
    for (auto& v : c) {
      v *= w;
      w *= d.c;
    }
    return Poly(f.min_degree(), std::move(c));
  }
  static Poly apply_node(const Reflect&, const Poly& f) {
    std::vector<T> c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if ((f.min_degree() + static_cast<int>(i)) % 2 != 0) c[i] = T(-1) * c[i];
    }
    return Poly(f.min_degree(), std::move(c));
  }
  static Poly apply_node(const Derivative&, const Poly& f) {
    if (f.is_zero()) return f;
    std::vector<T> c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= T(f.min_degree() + static_cast<int>(i));
    return Poly(f.min_degree() - 1, std::move(c));
  }
  static Poly apply_node(const Scaled& s, const Poly& f) { return s.op.apply(f) * s.s; }
  static Poly apply_node(const Sum& s, const Poly& f) {
    Poly out;
    for (const auto& t : s.terms) out += t.apply(f);
    return out;
  }
  static Poly apply_node(const Compose& c, const Poly& f) { return c.outer.apply(c.inner.apply(f)); }

  std::shared_ptr<const Node> node_;
};

// A B - c B A. c = 1 is the commutator, c = -1 the anticommutator.
template <class T>
LinOp<T> q_bracket(const LinOp<T>& a, const LinOp<T>& b, const T& c) {
  return a * b - c * (b * a);
}

template <class T>
LinOp<T> anticommutator(const LinOp<T>& a, const LinOp<T>& b) {
  return q_bracket(a, b, T(-1));
}

template <class T>
std::vector<LaurentPoly<T>> monomial_images(const LinOp<T>& op, int max_degree) {
  std::vector<LaurentPoly<T>> out;
  out.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) out.push_back(op(LaurentPoly<T>::monomial(n)));
  return out;
}

// Operator equality on span{x^0..x^max_degree}.
template <class T>
bool equal_on_monomials(const LinOp<T>& a, const LinOp<T>& b, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    const auto m = LaurentPoly<T>::monomial(n);
    if (a(m) != b(m)) return false;
  }
  return true;
}

template <class T>
bool is_zero_on_monomials(const LinOp<T>& a, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    if (!a(LaurentPoly<T>::monomial(n)).is_zero()) return false;
  }
  return true;
}

// True when no monomial x^0..x^max_degree is mapped to negative powers.
template <class T>
bool preserves_polynomials(const LinOp<T>& a, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) {
    if (!poly_is_proper(a(LaurentPoly<T>::monomial(n)))) return false;
  }
  return true;
}

using ConstantMap = std::map<std::string, Rational>;

// One relation "lhs = sum_j c_j B_j" in the basis {Z, X, Y, Id}.
struct RelationDecl {
  std::string id;
  std::string form;        // relation as declared by this library
  std::string paper_form;  // relation as printed in the source
  LinOp<Rational> lhs;
  ConstantMap declared_constants;
  ConstantMap paper_constants;
};

struct CasimirDecl {
  std::string formula;
  LinOp<Rational> q;
  Rational paper_value;
};

struct Representation {
  std::string name;
  LinOp<Rational> X;
  LinOp<Rational> Y;
  LinOp<Rational> Z;
  ConstantMap params;
  std::vector<RelationDecl> relations;
  // Brackets printed in the source that differ from a declared relation.
  std::vector<RelationDecl> paper_literal;
  std::optional<CasimirDecl> casimir;

  std::vector<std::pair<std::string, LinOp<Rational>>> basis() const {
    return {{"Z", Z}, {"X", X}, {"Y", Y}, {"Id", LinOp<Rational>::identity()}};
  }
};

struct RelationReport {
  std::string relation_id;
  std::string representation;
  std::string form;
  std::string paper_form;
  ConstantMap params;
  int max_degree = 0;
  // Empty when the bracket image is not in the span of the basis.
  ConstantMap measured_constants;
  ConstantMap declared_constants;
  ConstantMap paper_constants;
  bool span_failure = false;
  bool unique = true;
  bool exact_match = false;       // zero residual under printed constants
  bool matches_declared = false;  // measured constants equal declared ones
  // Per test monomial x^n: max degree of the residual under printed
  // constants, or nullopt if the residual is zero.
  std::vector<std::optional<int>> residual_degrees;

  bool holds() const { return !span_failure && matches_declared; }
};

namespace detail {

// Solves the (overdetermined) system A c = b exactly. Returns nullopt when
// inconsistent; free variables are set to zero and reported via `unique`.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows,
                                                        std::size_t unknowns, bool& unique) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t k = 0; k <= unknowns; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][unknowns] != 0) return std::nullopt;
  }
  unique = rank == unknowns;
  std::vector<Rational> sol(unknowns, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = rows[r][unknowns];
  return sol;
}

inline RelationReport check(const Representation& rep, const RelationDecl& rel, int max_degree) {
  using Poly = RationalPoly;
  RelationReport out;
  out.relation_id = rel.id;
  out.representation = rep.name;
  out.form = rel.form;
  out.paper_form = rel.paper_form;
  out.params = rep.params;
  out.max_degree = max_degree;
  out.declared_constants = rel.declared_constants;
  out.paper_constants = rel.paper_constants;

  const auto basis = rep.basis();
  std::vector<std::vector<Rational>> rows;
  for (int n = 0; n <= max_degree; ++n) {
    const Poly m = Poly::monomial(n);
    const Poly image = rel.lhs(m);
    std::vector<Poly> b;
    int lo = image.is_zero() ? 0 : image.min_degree();
    int hi = image.max_degree();
    for (const auto& [name, op] : basis) {
      b.push_back(op(m));
      if (!b.back().is_zero()) {
        lo = std::min(lo, b.back().min_degree());
        hi = std::max(hi, b.back().max_degree());
      }
    }
    for (int d = lo; d <= hi; ++d) {
      std::vector<Rational> row;
      for (const auto& bp : b) row.push_back(bp.coeff(d));
      row.push_back(image.coeff(d));
      rows.push_back(std::move(row));
    }

    Poly residual = image;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto it = rel.paper_constants.find(basis[j].first);
      if (it != rel.paper_constants.end()) residual.accumulate(b[j], -it->second);
    }
    out.residual_degrees.push_back(residual.is_zero() ? std::nullopt
                                                      : std::optional<int>(residual.max_degree()));
  }

  bool unique = true;
  const auto sol = solve_exact(std::move(rows), basis.size(), unique);
  out.unique = unique;
  if (!sol) {
    out.span_failure = true;
  } else {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if ((*sol)[j] != 0) out.measured_constants[basis[j].first] = (*sol)[j];
    }
  }
  out.exact_match = std::all_of(out.residual_degrees.begin(), out.residual_degrees.end(),
                                [](const auto& d) { return !d.has_value(); });
  auto nonzero = [](const ConstantMap& m) {
    ConstantMap r;
    for (const auto& [k, v] : m)
      if (v != 0) r[k] = v;
    return r;
  };
  out.matches_declared = !out.span_failure && out.unique &&
                         nonzero(out.measured_constants) == nonzero(rel.declared_constants);
  return out;
}

}  // namespace detail

// Measures the constants of relation `relation_id` on x^0..x^max_degree and
// compares them with the printed and declared values.
inline RelationReport check_relation(const Representation& rep, const std::string& relation_id,
                                     int max_degree) {
  for (const auto* list : {&rep.relations, &rep.paper_literal}) {
    for (const auto& rel : *list) {
      if (rel.id == relation_id) return detail::check(rep, rel, max_degree);
    }
  }
  throw ParameterError("representation '" + rep.name + "' declares no relation '" + relation_id + "'");
}

// Scalar c with Q x^n = c x^n for n = 0..max_degree.
inline Rational casimir_value(const Representation& rep, int max_degree) {
  if (!rep.casimir) throw ParameterError("representation '" + rep.name + "' has no Casimir element");
  std::optional<Rational> c;
  for (int n = 0; n <= max_degree; ++n) {
    const auto m = RationalPoly::monomial(n);
    const auto image = rep.casimir->q(m);
    const Rational v = image.coeff(n);
    if (image != m * v) {
      throw NotCentralError("Casimir of '" + rep.name + "' maps x^" + std::to_string(n) +
                            " outside span{x^" + std::to_string(n) + "}");
    }
    if (c && *c != v) {
      throw NotCentralError("Casimir of '" + rep.name + "' acts by different scalars on x^0 and x^" +
                            std::to_string(n));
    }
    c = v;
  }
  return *c;
}

// [Q, X] = [Q, Y] = [Q, Z] = 0 on x^0..x^max_degree.
inline bool casimir_is_central(const Representation& rep, int max_degree) {
  if (!rep.casimir) return false;
  const Rational one(1);
  for (const auto* g : {&rep.X, &rep.Y, &rep.Z}) {
    if (!is_zero_on_monomials(q_bracket(rep.casimir->q, *g, one), max_degree)) return false;
  }
  return true;
}

}  // namespace qbessel
