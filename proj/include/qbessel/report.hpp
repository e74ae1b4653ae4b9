#pragma once

// JSON serialization of check results and the aggregate verification battery.
// Rationals are written as strings "p/q" so that no exact value passes
// through floating point.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qbessel/besselfam.hpp"
#include "qbessel/families.hpp"
#include "qbessel/limits.hpp"
#include "qbessel/opalgebra.hpp"
#include "qbessel/representations.hpp"
#include "qbessel/transforms.hpp"

namespace qbessel {

using Json = nlohmann::json;

inline std::string rational_string(const Rational& v) { return v.str(); }

inline Json to_json(const ConstantMap& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[k] = rational_string(v);
  return j;
}

inline Json to_json(const RelationReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.residual_degrees) degrees.push_back(d ? Json(*d) : Json(nullptr));
  return {
      {"relation_id", r.relation_id},
      {"representation", r.representation},
      {"form", r.form},
      {"paper_form", r.paper_form},
      {"params", to_json(r.params)},
      {"max_degree", r.max_degree},
      {"measured_constants", r.span_failure ? Json(nullptr) : to_json(r.measured_constants)},
      {"declared_constants", to_json(r.declared_constants)},
      {"paper_constants", to_json(r.paper_constants)},
      {"span_failure", r.span_failure},
      {"unique", r.unique},
      {"exact_match", r.exact_match},
      {"matches_declared", r.matches_declared},
      {"residual_degrees", degrees},
  };
}

// {family, n, params, coeffs: [[degree, "p/q"], ...]}
inline Json to_json(const PolyFamilyInstance<Rational>& p) {
  Json coeffs = Json::array();
  p.coeffs.for_each_term([&](int d, const Rational& c) { coeffs.push_back({d, rational_string(c)}); });
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = rational_string(v);
  return {{"family", p.family}, {"n", p.n}, {"params", params}, {"coeffs", coeffs}};
}

inline Json to_json(const LimitReport& r) {
  return {
      {"case_id", r.case_id},
      {"description", r.description},
      {"params", r.params},
      {"path_label", r.path_label},
      {"path", r.path},
      {"eval_points", r.eval_labels},
      {"errors", r.errors},
      {"rate", r.estimated_rate},
      {"tolerance", r.tolerance},
      {"exact_target", r.exact_target},
      {"decreasing", r.decreasing},
      {"passed", r.passed},
      {"note", r.note},
  };
}

inline Json to_json(const QShiftedLimitReport& r) {
  return {
      {"alpha", r.alpha},
      {"n", r.n},
      {"path", r.path},
      {"first_target", r.first_target},
      {"second_target", r.second_target},
      {"first_errors", r.first_errors},
      {"second_errors", r.second_errors},
      {"tolerance", r.tolerance},
      {"passed", r.passed},
  };
}

inline Json to_json(const DiagramReport& r) {
  return {
      {"alpha", r.alpha},
      {"path", r.path},
      {"degrees", r.degrees},
      {"arrow_n_errors", r.arrow_n_errors},
      {"target_errors", r.target_errors},
      {"passed", r.passed},
      {"note", r.note},
  };
}

inline Json to_json(const OrthogonalityResult& r) {
  return {
      {"m", r.m},
      {"n", r.n},
      {"terms", r.terms},
      {"value", r.value},
      {"expected", r.expected},
      {"tail_bound", r.tail_bound},
      {"tolerance", r.tolerance},
      {"passed", r.passed()},
  };
}

inline Json to_json(const Complex& c) { return {{"re", c.real()}, {"im", c.imag()}}; }

inline Json to_json(const DunklRelationFit& f) {
  return {
      {"c1", to_json(f.c1)},
      {"c2", to_json(f.c2)},
      {"fitted_residual", f.fitted_residual},
      {"paper_residual", f.paper_residual},
      {"swapped_residual", f.swapped_residual},
  };
}

inline Json transform_metadata(const TransformSpec& s) {
  return {
      {"kind", to_string(s.kind)},
      {"alpha", s.alpha},
      {"normalization", s.normalization == Normalization::standard ? "standard" : "printed"},
      {"constant", s.constant_label()},
      {"domain_cut", s.domain_cut},
      {"tolerance", s.tolerance},
  };
}

// One entry of the battery. Informational entries record measurements that
// are not pass/fail (printed-normalization residuals, paper-literal forms).
struct CheckEntry {
  std::string id;
  std::string group;
  bool passed = false;
  bool informational = false;
  Json details;
};

namespace detail {

inline std::string tuple_label(const ConstantMap& params) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ",";
    s += k + "=" + rational_string(v);
  }
  return s;
}

inline Rational R(long p, long q = 1) { return Rational(p, q); }

struct RepInstance {
  Representation rep;
  std::string label;
};

inline std::vector<RepInstance> algebra_instances() {
  std::vector<RepInstance> out;
  auto add = [&](Representation r) {
    const std::string label = tuple_label(r.params);
    out.push_back({std::move(r), label});
  };
  add(rep_little_q_jacobi(R(1, 2), R(1, 3), R(3, 4), R(1, 2)));
  add(rep_little_q_jacobi(R(1, 3), R(1, 2), R(2), R(1)));
  add(rep_little_q_jacobi(R(2, 3), R(4, 9), R(1, 4), R(1, 3)));
  add(rep_minus1_jacobi(R(1, 2), R(3, 2)));
  add(rep_minus1_jacobi(R(-1, 3), R(2, 5)));
  add(rep_minus1_jacobi(R(2), R(-1, 4)));
  add(rep_qbessel3(R(1, 2), R(1, 3)));
  add(rep_qbessel3(R(2, 3), R(3, 5)));
  add(rep_qbessel3(R(3), R(1, 4)));
  add(rep_dunkl(R(1, 2)));
  add(rep_dunkl(R(-1, 4)));
  add(rep_dunkl(R(3)));
  add(rep_qlaguerre(R(1, 2), R(1, 3)));
  add(rep_qlaguerre(R(2, 3), R(5, 4)));
  add(rep_qlaguerre(R(1, 5), R(2)));
  add(rep_qbessel2(R(1, 2), R(1, 3)));
  add(rep_qbessel2(R(2, 3), R(5, 4)));
  add(rep_qbessel2(R(1, 5), R(2)));
  return out;
}

}  // namespace detail

inline constexpr int kAlgebraDegree = 16;

inline std::vector<CheckEntry> algebra_checks(int degree = kAlgebraDegree) {
  std::vector<CheckEntry> out;
  for (const auto& inst : detail::algebra_instances()) {
    const auto& rep = inst.rep;
    for (const auto& rel : rep.relations) {
      const auto r = check_relation(rep, rel.id, degree);
      out.push_back({"algebra/" + rep.name + "/" + inst.label + "/" + rel.id, "algebra", r.holds(), false,
                     to_json(r)});
    }
    for (const auto& rel : rep.paper_literal) {
      const auto r = check_relation(rep, rel.id, degree);
      out.push_back({"algebra/" + rep.name + "/" + inst.label + "/literal:" + rel.id, "algebra", r.holds(), true,
                     to_json(r)});
    }
    if (rep.casimir) {
      Json d{{"representation", rep.name},
             {"params", to_json(rep.params)},
             {"formula", rep.casimir->formula},
             {"paper_value", rational_string(rep.casimir->paper_value)},
             {"max_degree", degree}};
      bool ok = false;
      try {
        const Rational v = casimir_value(rep, degree);
        d["value"] = rational_string(v);
        ok = v == rep.casimir->paper_value;
      } catch (const NotCentralError& e) {
        d["value"] = nullptr;
        d["error"] = e.what();
      }
      d["central"] = casimir_is_central(rep, degree);
      d["exact_match"] = ok;
      out.push_back({"casimir/" + rep.name + "/" + inst.label, "casimir", ok, false, d});
    }
  }
  for (const auto& k : {detail::R(1, 2), detail::R(3, 4), detail::R(5, 2)}) {
    const auto c = check_daha(k, degree);
    out.push_back({"daha/k=" + rational_string(k), "daha", c.all(), false,
                   {{"k", rational_string(k)},
                    {"max_degree", degree},
                    {"sZs=-Z", c.s_z_s_is_minus_z},
                    {"sDs=-D", c.s_d_s_is_minus_d},
                    {"[D,Z]=1+2ks", c.commutator}}});
  }
  for (const auto& [q, a] : {std::pair{detail::R(1, 2), detail::R(1, 3)}, std::pair{detail::R(2, 3), detail::R(5, 4)}}) {
    const bool ok = intertwining_check(q, a, degree);
    out.push_back({"intertwining/q=" + rational_string(q) + ",a=" + rational_string(a), "algebra", ok, false,
                   {{"q", rational_string(q)}, {"a", rational_string(a)}, {"max_degree", degree}, {"holds", ok}}});
  }
  return out;
}

inline constexpr int kEigenMaxDegree = 12;

inline std::vector<CheckEntry> eigen_checks(int max_n = kEigenMaxDegree) {
  using detail::R;
  std::vector<CheckEntry> out;
  auto pad = [](int n) { return (n < 10 ? "0" : "") + std::to_string(n); };
  struct LqjParams { Rational q, a, b; };
  for (const auto& p : {LqjParams{R(1, 2), R(1, 3), R(3, 4)}, LqjParams{R(2, 3), R(5, 2), R(1, 7)}}) {
    for (int n = 0; n <= max_n; ++n) {
      const bool ok = little_q_jacobi_eigencheck(n, p.q, p.a, p.b);
      out.push_back({"eigen/little-q-jacobi/q=" + rational_string(p.q) + ",a=" + rational_string(p.a) +
                         ",b=" + rational_string(p.b) + "/n=" + pad(n),
                     "eigen", ok, false,
                     {{"eigenvalue", rational_string(little_q_jacobi_eigenvalue(n, p.q, p.a, p.b))},
                      {"polynomial", to_json(little_q_jacobi(n, p.q, p.a, p.b))}}});
    }
  }
  for (const auto& [q, a] : {std::pair{R(1, 2), R(1, 3)}, std::pair{R(3, 4), R(2)}}) {
    for (int n = 0; n <= max_n; ++n) {
      const bool ok = q_laguerre_eigencheck(n, q, a);
      out.push_back({"eigen/q-laguerre/q=" + rational_string(q) + ",a=" + rational_string(a) + "/n=" + pad(n),
                     "eigen", ok, false,
                     {{"eigenvalue", rational_string(q_laguerre_eigenvalue(n, q, a))},
                      {"polynomial", to_json(q_laguerre(n, q, a))}}});
    }
    for (int n = 1; n < max_n; ++n) {
      const bool ok = q_laguerre_recurrence_check(n, q, a);
      out.push_back({"recurrence/q-laguerre/q=" + rational_string(q) + ",a=" + rational_string(a) + "/n=" + pad(n),
                     "eigen", ok, false, {{"holds", ok}}});
    }
  }
  for (const auto& [al, be] : {std::pair{R(1, 2), R(3, 2)}, std::pair{R(-1, 3), R(2, 5)}}) {
    for (int n = 0; n <= max_n; ++n) {
      const bool ok = minus1_jacobi_eigencheck(n, al, be);
      out.push_back({"eigen/minus1-jacobi/alpha=" + rational_string(al) + ",beta=" + rational_string(be) +
                         "/n=" + pad(n),
                     "eigen", ok, false,
                     {{"eigenvalue", rational_string(minus1_jacobi_eigenvalue(n, al, be))},
                      {"polynomial", to_json(minus1_jacobi(n, al, be))}}});
    }
  }
  return out;
}

inline constexpr int kTermwiseOrder = 30;

inline std::vector<CheckEntry> termwise_checks(int order = kTermwiseOrder) {
  using detail::R;
  std::vector<CheckEntry> out;
  auto entry = [&](const std::string& id, std::optional<int> first, Json d) {
    d["order"] = order;
    d["first_nonzero_residual_degree"] = first ? Json(*first) : Json(nullptr);
    out.push_back({id, "termwise", !first, false, d});
  };
  struct Qal { Rational q, a, l; };
  for (const auto& p : {Qal{R(1, 2), R(1, 3), R(2, 5)}, Qal{R(2, 3), R(5, 2), R(-7, 4)}}) {
    const std::string tag = "q=" + rational_string(p.q) + ",a=" + rational_string(p.a) + ",lambda=" +
                            rational_string(p.l);
    entry("termwise/qbessel3/" + tag, q_bessel3_eigencheck(p.q, p.a, p.l, order),
          {{"eigenvalue", rational_string(-p.l)}});
    entry("termwise/qbessel2/" + tag, q_bessel2_eigencheck(p.q, p.a, p.l, order),
          {{"eigenvalue", rational_string(-p.a * p.l)}});
  }
  for (const auto& [al, l] : {std::pair{R(1, 2), R(3, 2)}, std::pair{R(-1, 4), R(-2, 3)}}) {
    const std::string tag = "alpha=" + rational_string(al) + ",lambda=" + rational_string(l);
    entry("termwise/dunkl-kernel/" + tag, dunkl_kernel_exact_eigencheck(al, l, order / 2),
          {{"eigenvalue", "i*" + rational_string(l)}});
    entry("termwise/minus1-bessel/" + tag, minus1_bessel_exact_eigencheck(al, l, order / 2),
          {{"eigenvalue", rational_string(l)}});
  }
  return out;
}

inline std::vector<double> special_value_grid() {
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(-3 + 6.0 * i / 19);
  return xs;
}

inline std::vector<CheckEntry> special_value_checks(double tolerance = 1e-12) {
  const auto xs = special_value_grid();
  double e_cos = 0, e_sin = 0, e_exp = 0, e_cas = 0;
  for (double x : xs) {
    e_cos = std::max(e_cos, std::abs(bessel_norm(-0.5, x) - std::cos(x)));
    e_sin = std::max(e_sin, std::abs(bessel_norm(0.5, x) - std::sin(x) / x));
    e_exp = std::max(e_exp, std::abs(dunkl_kernel(-0.5, x) - std::exp(Complex(0, x))));
    e_cas = std::max(e_cas, std::abs(minus1_bessel(-0.5, x) - cas(x)));
  }
  std::vector<CheckEntry> out;
  auto add = [&](const std::string& name, double err) {
    out.push_back({"special/" + name, "special", err < tolerance, false,
                   {{"max_error", err}, {"tolerance", tolerance}, {"grid", xs}}});
  };
  add("J_-1/2=cos", e_cos);
  add("J_1/2=sin(x)/x", e_sin);
  add("E_-1/2=exp(ix)", e_exp);
  add("J_-1/2,-1=cas", e_cas);
  return out;
}

inline std::vector<double> decomposition_grid() { return {-2.7, -1.4, -0.6, 0.25, 0.9, 1.8, 3.1}; }

inline std::vector<CheckEntry> decomposition_checks(double tolerance = 1e-10) {
  std::vector<CheckEntry> out;
  for (double al : {-0.25, 0.5, 2.0}) {
    for (double l : {0.5, 1.3}) {
      const auto r = decomposition_check(al, l, decomposition_grid());
      out.push_back({"decomposition/alpha=" + detail::fmt(al) + ",lambda=" + detail::fmt(l), "decomposition",
                     r.max() < tolerance, false,
                     {{"even", r.even}, {"odd", r.odd}, {"identity", r.identity}, {"tolerance", tolerance}}});
    }
  }
  for (double al : {-0.25, 0.5, 2.0}) {
    std::vector<double> xs{0.4, 1.1, 2.3};
    double worst = 0;
    for (double l : {0.5, 1.3}) {
      for (double x : xs) {
        worst = std::max({worst, dunkl_eigen_residual(al, l, x), minus1_eigen_residual(al, l, x),
                          bessel_ode_residual(al, l, x)});
      }
    }
    out.push_back({"eigen-numeric/alpha=" + detail::fmt(al), "decomposition", worst < tolerance, false,
                   {{"max_residual", worst}, {"tolerance", tolerance}}});
  }
  const auto fit = minus1_dunkl_relation_check(0.3, 1.0, decomposition_grid());
  Json d = to_json(fit);
  d["alpha"] = 0.3;
  d["note"] = "fitted constants reported; the printed pairing (1+i)/2, (1-i)/2 is recorded as paper_residual";
  out.push_back({"dunkl-relation/alpha=0.3", "decomposition", fit.fitted_residual < tolerance, true, d});
  return out;
}

inline std::vector<CheckEntry> orthogonality_checks(int max_n = 6, double tolerance = 1e-10) {
  using detail::R;
  std::vector<CheckEntry> out;
  struct P { Rational q, a, b; };
  for (const auto& p : {P{R(1, 2), R(1, 3), R(1, 4)}, P{R(1, 3), R(2), R(-1, 2)}}) {
    const std::string tag =
        "q=" + rational_string(p.q) + ",a=" + rational_string(p.a) + ",b=" + rational_string(p.b);
    for (int m = 0; m <= max_n; ++m) {
      for (int n = 0; n <= max_n; ++n) {
        const auto r = orthogonality_sum(m, n, p.q, p.a, p.b, 200, tolerance);
        out.push_back({"orthogonality/" + tag + "/m=" + std::to_string(m) + ",n=" + std::to_string(n),
                       "orthogonality", r.passed(), false, to_json(r)});
      }
    }
  }
  return out;
}

inline std::vector<CheckEntry> limit_checks(int qshifted_max_n = 8) {
  std::vector<CheckEntry> out;
  for (const auto& c : registered_limit_cases()) {
    const auto r = run_limit(c);
    std::string tag;
    for (const auto& [k, v] : r.params) tag += (tag.empty() ? "" : ",") + k + "=" + v;
    const std::string id = "limit/" + r.case_id + "/" + tag;
    out.push_back({id, "limit", r.passed, false, to_json(r)});
  }
  for (double al : {0.3, 1.5}) {
    for (int n = 0; n <= qshifted_max_n; ++n) {
      const auto r = qshifted_limit_check(al, n);
      out.push_back({"qshifted/alpha=" + detail::fmt(al) + "/n=" + std::to_string(n), "limit", r.passed, false,
                     to_json(r)});
    }
  }
  const auto d = diagram_check(detail::R(1, 3), detail::R(1, 2));
  out.push_back({"diagram/alpha=1/3,b=1/2", "limit", d.passed, false, to_json(d)});
  return out;
}

struct TransformTolerances {
  double gaussian = 1e-8;
  double roundtrip = 1e-7;
  double even_reduction = 1e-8;
};

inline std::vector<double> transform_lambda_grid() {
  std::vector<double> ls;
  for (int i = 0; i <= 16; ++i) ls.push_back(i * 0.25);
  return ls;
}

inline std::vector<double> transform_x_grid() { return {-2.5, -1.2, -0.4, 0.3, 0.9, 1.7, 2.6}; }

inline std::vector<CheckEntry> transform_checks(TransformTolerances tol = {}) {
  std::vector<CheckEntry> out;
  const auto ls = transform_lambda_grid();
  const auto xs = transform_x_grid();
  const SampledFunction odd_gauss = [](double x) { return Complex(x * std::exp(-x * x / 2)); };
  const SampledFunction gauss2 = [](double x) { return Complex(std::exp(-x * x)); };
  const SampledFunction shifted = [](double x) { return Complex((1 + x) * std::exp(-x * x / 2)); };

  for (auto n : {Normalization::standard, Normalization::printed}) {
    TransformSpec h{TransformKind::hankel, 0.5};
    h.normalization = n;
    const double r = gaussian_self_reciprocity(0.5, ls, n);
    Json d{{"residual", r}, {"tolerance", tol.gaussian}, {"function", "exp(-x^2/2)"},
           {"metadata", transform_metadata(h)}};
    const bool standard = n == Normalization::standard;
    out.push_back({std::string("transform/gaussian-self-reciprocity/") + (standard ? "standard" : "printed"),
                   "transform", r < tol.gaussian, !standard, d});
  }

  struct RT {
    TransformKind kind;
    double alpha;
    const SampledFunction* f;
    std::string fname;
    std::vector<double> xs;
  };
  const std::vector<double> half{0.3, 0.9, 1.7, 2.6};
  const std::vector<RT> cases{
      {TransformKind::dunkl, 0.3, &odd_gauss, "x exp(-x^2/2)", xs},
      {TransformKind::minus1, -0.5, &shifted, "(1+x) exp(-x^2/2)", xs},
      {TransformKind::minus1, 0.7, &shifted, "(1+x) exp(-x^2/2)", xs},
      {TransformKind::hankel, 0.5, &gauss2, "exp(-x^2)", half},
  };
  for (const auto& c : cases) {
    for (auto n : {Normalization::standard, Normalization::printed}) {
      const bool standard = n == Normalization::standard;
      // Printed variants are recorded once per kind at the first alpha.
      if (!standard && !(c.kind == TransformKind::dunkl || (c.kind == TransformKind::minus1 && c.alpha < 0))) {
        continue;
      }
      TransformSpec s{c.kind, c.alpha};
      s.normalization = n;
      const double r = roundtrip_residual(s, *c.f, c.xs);
      Json d{{"residual", r}, {"tolerance", tol.roundtrip}, {"function", c.fname}, {"points", c.xs},
             {"metadata", transform_metadata(s)}};
      out.push_back({"transform/roundtrip/" + to_string(c.kind) + "/alpha=" + detail::fmt(c.alpha) + "/" +
                         (standard ? "standard" : "printed"),
                     "transform", r < tol.roundtrip, !standard, d});
    }
  }
  const double er = even_reduction_residual(0.5, gauss2, ls);
  out.push_back({"transform/even-reduction/alpha=0.5", "transform", er < tol.even_reduction, false,
                 {{"residual", er}, {"tolerance", tol.even_reduction}, {"function", "exp(-x^2)"}}});
  return out;
}

inline std::vector<CheckEntry> all_checks() {
  std::vector<CheckEntry> all;
  for (auto part : {algebra_checks(), eigen_checks(), termwise_checks(), special_value_checks(),
                    decomposition_checks(), orthogonality_checks(), limit_checks(), transform_checks()}) {
    for (auto& e : part) all.push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.id < b.id; });
  return all;
}

inline Json checks_json(const std::vector<CheckEntry>& checks) {
  Json list = Json::array();
  int passed = 0, failed = 0, info = 0;
  Json failed_ids = Json::array();
  for (const auto& c : checks) {
    list.push_back({{"id", c.id},
                    {"group", c.group},
                    {"passed", c.passed},
                    {"informational", c.informational},
                    {"details", c.details}});
    if (c.informational) {
      ++info;
    } else if (c.passed) {
      ++passed;
    } else {
      ++failed;
      failed_ids.push_back(c.id);
    }
  }
  return {{"checks", list},
          {"summary",
           {{"total", static_cast<int>(checks.size())},
            {"passed", passed},
            {"failed", failed},
            {"informational", info},
            {"failed_ids", failed_ids},
            {"all_passed", failed == 0}}}};
}

// The full battery as one deterministic document (keys sorted, checks sorted
// by id, no timestamps).
inline Json report() {
  Json j = checks_json(all_checks());
  j["schema"] = "qbessel-report/1";
  return j;
}

}  // namespace qbessel
