// qbessel: evaluate the families, run the exact and numeric checks, tabulate
// transforms and emit the aggregate report.
//
// Exit codes: 0 all checks passed (or value emitted), 1 a check failed,
// 2 usage error. QBESSEL_PRECISION=double|high picks the default arithmetic
// for q-series evaluation.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbessel/report.hpp"

using namespace qbessel;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output = "json";
  std::optional<double> tolerance;
  std::optional<int> truncation;
  unsigned seed = 0;
  std::string precision;
  std::map<std::string, std::string> params;
};

const std::vector<std::string> kParamNames{"q", "a", "b", "r", "alpha", "beta", "k", "nu", "lambda", "n"};

std::string param(const Options& o, const std::string& key) {
  const auto it = o.params.find(key);
  if (it == o.params.end() || it->second.empty()) throw UsageError("missing --" + key);
  return it->second;
}

bool has(const Options& o, const std::string& key) {
  const auto it = o.params.find(key);
  return it != o.params.end() && !it->second.empty();
}

Rational exact(const Options& o, const std::string& key) {
  try {
    return parse_rational(param(o, key));
  } catch (const ParameterError& e) {
    throw UsageError("--" + key + ": " + e.what() + " (exact checks take p/q rationals)");
  }
}

double real(const Options& o, const std::string& key) {
  try {
    return parse_real(param(o, key));
  } catch (const ParameterError& e) {
    throw UsageError("--" + key + ": " + e.what());
  }
}

int integer(const Options& o, const std::string& key) {
  const Rational v = exact(o, key);
  if (denominator(v) != 1) throw UsageError("--" + key + " must be an integer");
  return static_cast<int>(numerator(v));
}

// Flattens a JSON document into "path: value" lines.
void pretty(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      pretty(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) pretty(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void csv_flat(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      csv_flat(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) csv_flat(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

// A document may carry a "table" (list of rows with equal keys) which CSV
// writes as columns.
void emit(const Options& o, const Json& doc) {
  if (o.output == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (o.output == "pretty") {
    pretty(doc, "", std::cout);
  } else if (doc.contains("table") && doc["table"].is_array() && !doc["table"].empty()) {
    const Json& rows = doc["table"];
    std::vector<std::string> cols;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << cols[i];
    std::cout << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const Json& v = row[cols[i]];
        std::cout << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      std::cout << "\n";
    }
  } else {
    csv_flat(doc, "", std::cout);
  }
}

std::vector<std::string> sample_points(const std::vector<std::string>& xs, const std::string& grid) {
  std::vector<std::string> out = xs;
  if (!grid.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(grid);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw UsageError("--grid expects start:stop:count");
    const double a = parse_real(parts[0]);
    const double b = parse_real(parts[1]);
    const int n = std::stoi(parts[2]);
    if (n < 1) throw UsageError("--grid count must be positive");
    for (int i = 0; i < n; ++i) {
      out.push_back(detail::fmt(n == 1 ? a : a + (b - a) * i / (n - 1)));
    }
  }
  if (out.empty()) throw UsageError("give --x or --grid");
  return out;
}

std::string high_string(const HighReal& v) {
  std::ostringstream os;
  os << std::setprecision(40) << v;
  return os.str();
}

// Rationals convert exactly; decimals are read at full working precision.
HighReal high_value(const std::string& s) {
  try {
    if (s.find('/') != std::string::npos) return to<HighReal>(parse_rational(s));
    parse_real(s);
    return HighReal(s);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

bool high_precision(const Options& o) {
  std::string p = o.precision;
  if (p.empty()) {
    const char* env = std::getenv("QBESSEL_PRECISION");
    p = env ? env : "double";
  }
  if (p == "double") return false;
  if (p == "high") return true;
  throw UsageError("precision must be 'double' or 'high', got '" + p + "'");
}

SeriesPolicy series_policy(const Options& o, bool high) {
  SeriesPolicy p;
  p.tolerance = o.tolerance.value_or(high ? 1e-45 : 1e-17);
  if (o.truncation) p.max_terms = *o.truncation;
  return p;
}

// ---- eval ----

int run_eval(const Options& o, const std::string& fn, const std::vector<std::string>& xs_raw,
             const std::string& grid) {
  Json table = Json::array();
  Json doc{{"function", fn}};
  const bool polynomial = fn == "little-q-jacobi" || fn == "q-laguerre" || fn == "minus1-jacobi";
  if (polynomial) {
    const int n = integer(o, "n");
    PolyFamilyInstance<Rational> p;
    if (fn == "little-q-jacobi") p = little_q_jacobi(n, exact(o, "q"), exact(o, "a"), exact(o, "b"));
    if (fn == "q-laguerre") p = q_laguerre(n, exact(o, "q"), exact(o, "a"));
    if (fn == "minus1-jacobi") p = minus1_jacobi(n, exact(o, "alpha"), exact(o, "beta"));
    doc["polynomial"] = to_json(p);
    if (!xs_raw.empty() || !grid.empty()) {
      if (!grid.empty()) throw UsageError("polynomial values are exact; give rational --x points");
      for (const auto& s : xs_raw) {
        Rational x;
        try {
          x = parse_rational(s);
        } catch (const ParameterError& e) {
          throw UsageError(std::string("--x: ") + e.what());
        }
        table.push_back({{"x", rational_string(x)}, {"value", rational_string(poly_eval(p.coeffs, x))}});
      }
      doc["table"] = table;
    }
    emit(o, doc);
    return 0;
  }

  const auto xs = sample_points(xs_raw, grid);
  const bool high = high_precision(o);
  const auto policy = series_policy(o, high);
  doc["precision"] = high ? "high" : "double";
  for (const auto& xs_s : xs) {
    const double x = parse_real(xs_s);
    Json row{{"x", x}};
    if (fn == "bessel") {
      row["value"] = bessel_norm(real(o, "alpha"), x);
    } else if (fn == "minus1-bessel") {
      row["value"] = minus1_bessel(real(o, "alpha"), x);
    } else if (fn == "dunkl-kernel") {
      const Complex v = dunkl_kernel(real(o, "alpha"), x);
      row["re"] = v.real();
      row["im"] = v.imag();
    } else if (fn == "cas") {
      row["value"] = cas(x);
    } else if (fn == "qbessel3" || fn == "qbessel2") {
      if (high) {
        const HighReal v = fn == "qbessel3"
                               ? q_bessel3_norm<HighReal>(high_value(xs_s), high_value(param(o, "a")),
                                                          high_value(param(o, "q")), policy)
                               : q_bessel2_norm<HighReal>(high_value(xs_s), high_value(param(o, "a")),
                                                          high_value(param(o, "q")), policy);
        row["value"] = high_string(v);
      } else {
        const double a = real(o, "a");
        const double q = real(o, "q");
        row["value"] = fn == "qbessel3" ? q_bessel3_norm<double>(x, a, q, policy) : q_bessel2_norm<double>(x, a, q, policy);
      }
    } else if (fn == "jackson2" || fn == "jackson3") {
      const int kind = fn == "jackson2" ? 2 : 3;
      if (high) {
        const HighReal v = jackson_q_bessel<HighReal>(kind, high_value(param(o, "nu")), high_value(xs_s),
                                                      high_value(param(o, "q")), policy);
        row["value"] = high_string(v);
      } else {
        row["value"] = jackson_q_bessel<double>(kind, real(o, "nu"), x, real(o, "q"), policy);
      }
    } else {
      throw UsageError("unknown --fn '" + fn + "'");
    }
    table.push_back(row);
  }
  if (has(o, "alpha")) doc["alpha"] = param(o, "alpha");
  for (const auto* k : {"a", "q", "nu"}) {
    if (has(o, k)) doc[k] = param(o, k);
  }
  doc["table"] = table;
  emit(o, doc);
  return 0;
}

// ---- verify-algebra ----

Representation build_rep(const Options& o, const std::string& name) {
  if (name == "little-q-jacobi") return rep_little_q_jacobi(exact(o, "q"), exact(o, "a"), exact(o, "b"), exact(o, "r"));
  if (name == "minus1-jacobi") return rep_minus1_jacobi(exact(o, "alpha"), exact(o, "beta"));
  if (name == "qbessel3") return rep_qbessel3(exact(o, "q"), exact(o, "a"));
  if (name == "dunkl") return rep_dunkl(exact(o, "alpha"));
  if (name == "qlaguerre" || name == "q-laguerre") return rep_qlaguerre(exact(o, "q"), exact(o, "a"));
  if (name == "qbessel2") return rep_qbessel2(exact(o, "q"), exact(o, "a"));
  throw UsageError("unknown --rep '" + name + "'");
}

int run_verify_algebra(const Options& o, const std::string& name, int degree) {
  if (degree < 1) throw UsageError("--degree must be positive");
  if (name == "daha") {
    const Rational k = exact(o, "k");
    const auto c = check_daha(k, degree);
    emit(o, {{"representation", "daha"},
             {"params", {{"k", rational_string(k)}}},
             {"max_degree", degree},
             {"sZs=-Z", c.s_z_s_is_minus_z},
             {"sDs=-D", c.s_d_s_is_minus_d},
             {"[D,Z]=1+2ks", c.commutator},
             {"passed", c.all()}});
    return c.all() ? 0 : 1;
  }
  const Representation rep = build_rep(o, name);
  Json rels = Json::array();
  bool ok = true;
  for (const auto& rel : rep.relations) {
    const auto r = check_relation(rep, rel.id, degree);
    ok = ok && r.holds();
    Json j = to_json(r);
    j["passed"] = r.holds();
    rels.push_back(j);
  }
  Json literal = Json::array();
  for (const auto& rel : rep.paper_literal) literal.push_back(to_json(check_relation(rep, rel.id, degree)));
  Json doc{{"representation", rep.name}, {"params", to_json(rep.params)}, {"max_degree", degree},
           {"relations", rels}};
  if (!literal.empty()) doc["paper_literal"] = literal;
  if (rep.casimir) {
    Json c{{"formula", rep.casimir->formula}, {"paper_value", rational_string(rep.casimir->paper_value)}};
    bool match = false;
    try {
      const Rational v = casimir_value(rep, degree);
      c["value"] = rational_string(v);
      match = v == rep.casimir->paper_value;
    } catch (const NotCentralError& e) {
      c["value"] = nullptr;
      c["error"] = e.what();
    }
    c["exact_match"] = match;
    c["central"] = casimir_is_central(rep, degree);
    doc["casimir"] = c;
    ok = ok && match;
  }
  doc["passed"] = ok;
  emit(o, doc);
  return ok ? 0 : 1;
}

// ---- verify-eigen ----

int run_verify_eigen(const Options& o, const std::string& family, int max_n, int order) {
  Json checks = Json::array();
  bool ok = true;
  auto add = [&](Json j, bool pass) {
    j["passed"] = pass;
    ok = ok && pass;
    checks.push_back(j);
  };
  auto residual_json = [](const std::optional<int>& d) { return d ? Json(*d) : Json(nullptr); };
  if (family == "little-q-jacobi" || family == "q-laguerre" || family == "minus1-jacobi") {
    if (max_n < 0) throw UsageError("--max-n must be non-negative");
    for (int n = 0; n <= max_n; ++n) {
      if (family == "little-q-jacobi") {
        const Rational q = exact(o, "q"), a = exact(o, "a"), b = exact(o, "b");
        add({{"n", n}, {"eigenvalue", rational_string(little_q_jacobi_eigenvalue(n, q, a, b))}},
            little_q_jacobi_eigencheck(n, q, a, b));
      } else if (family == "q-laguerre") {
        const Rational q = exact(o, "q"), a = exact(o, "a");
        add({{"n", n}, {"eigenvalue", rational_string(q_laguerre_eigenvalue(n, q, a))}},
            q_laguerre_eigencheck(n, q, a));
      } else {
        const Rational al = exact(o, "alpha"), be = exact(o, "beta");
        add({{"n", n}, {"eigenvalue", rational_string(minus1_jacobi_eigenvalue(n, al, be))}},
            minus1_jacobi_eigencheck(n, al, be));
      }
    }
  } else if (family == "qbessel3" || family == "qbessel2") {
    const Rational q = exact(o, "q"), a = exact(o, "a"), l = exact(o, "lambda");
    const auto r = family == "qbessel3" ? q_bessel3_eigencheck(q, a, l, order) : q_bessel2_eigencheck(q, a, l, order);
    add({{"order", order}, {"first_nonzero_residual_degree", residual_json(r)}}, !r);
  } else if (family == "dunkl-kernel" || family == "minus1-bessel") {
    const Rational al = exact(o, "alpha"), l = exact(o, "lambda");
    const auto r = family == "dunkl-kernel" ? dunkl_kernel_exact_eigencheck(al, l, order / 2)
                                            : minus1_bessel_exact_eigencheck(al, l, order / 2);
    add({{"order", order}, {"first_nonzero_residual_degree", residual_json(r)}}, !r);
  } else {
    throw UsageError("unknown --family '" + family + "'");
  }
  Json params = Json::object();
  for (const auto& [k, v] : o.params) {
    if (!v.empty()) params[k] = v;
  }
  emit(o, {{"family", family}, {"params", params}, {"checks", checks}, {"passed", ok}});
  return ok ? 0 : 1;
}

// ---- verify-limits ----

std::vector<LimitCase> build_cases(const Options& o, const std::string& id) {
  if (id == "all") return registered_limit_cases();
  if (id == "bessoula" || id == "bessoula-cas") {
    return {bessoula_case(has(o, "alpha") ? exact(o, "alpha") : Rational(id == "bessoula" ? 1 : -1, id == "bessoula" ? 4 : 2))};
  }
  if (id == "little-q-jacobi-to-qbessel3") return {prop_a1_case(exact(o, "q"), exact(o, "a"), exact(o, "b"))};
  if (id == "little-q-jacobi-to-minus1-jacobi") return {little_q_jacobi_to_minus1_case(exact(o, "alpha"), exact(o, "beta"))};
  if (id == "jacobi-to-bessel") return {jacobi_to_bessel_case(real(o, "alpha"), real(o, "beta"))};
  if (id == "little-q-jacobi-to-q-laguerre") return {lag2_case(exact(o, "q"), exact(o, "a"))};
  if (id == "q-laguerre-to-qbessel2") return {q_laguerre_to_qbessel2_case(exact(o, "q"), exact(o, "a"))};
  if (id == "q-laguerre-to-laguerre") return {q_laguerre_to_laguerre_case(exact(o, "alpha"))};
  if (id == "qbessel3-to-bessel") return {qbessel3_classical_case(exact(o, "alpha"))};
  if (id == "jackson2-to-bessel") return {jackson2_classical_case(real(o, "nu"))};
  throw UsageError("unknown --case '" + id + "'");
}

int run_verify_limits(const Options& o, const std::string& id) {
  bool ok = true;
  Json reports = Json::array();
  if (id == "qshifted") {
    const int n_max = has(o, "n") ? integer(o, "n") : 8;
    for (int n = 0; n <= n_max; ++n) {
      const auto r = qshifted_limit_check(real(o, "alpha"), n, {}, o.tolerance.value_or(1e-5));
      ok = ok && r.passed;
      reports.push_back(to_json(r));
    }
  } else if (id == "diagram") {
    const auto r = diagram_check(exact(o, "alpha"), exact(o, "b"));
    ok = r.passed;
    reports.push_back(to_json(r));
  } else {
    for (auto c : build_cases(o, id)) {
      if (o.tolerance) c.tolerance = *o.tolerance;
      const auto r = run_limit(c);
      ok = ok && r.passed;
      reports.push_back(to_json(r));
    }
  }
  emit(o, {{"case", id}, {"reports", reports}, {"passed", ok}});
  return ok ? 0 : 1;
}

// ---- transform ----

SampledFunction test_function(const std::string& name) {
  if (name == "gauss") return [](double x) { return Complex(std::exp(-x * x / 2)); };
  if (name == "gauss2") return [](double x) { return Complex(std::exp(-x * x)); };
  if (name == "odd-gauss") return [](double x) { return Complex(x * std::exp(-x * x / 2)); };
  if (name == "shifted-gauss") return [](double x) { return Complex((1 + x) * std::exp(-x * x / 2)); };
  throw UsageError("unknown --f '" + name + "' (gauss, gauss2, odd-gauss, shifted-gauss)");
}

int run_transform(const Options& o, const std::string& kind, const std::string& fname, const std::string& norm,
                  const std::vector<std::string>& lambdas_raw, const std::string& grid,
                  const std::vector<std::string>& roundtrip_raw) {
  TransformSpec s;
  try {
    s.kind = parse_transform_kind(kind);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  s.alpha = real(o, "alpha");
  if (o.tolerance) s.tolerance = *o.tolerance;
  if (norm == "printed") {
    s.normalization = Normalization::printed;
  } else if (norm != "standard") {
    throw UsageError("--normalization must be standard or printed");
  }
  s.validate();
  const auto f = test_function(fname);
  Json doc{{"metadata", transform_metadata(s)}, {"function", fname}};
  if (!lambdas_raw.empty() || !grid.empty()) {
    std::vector<double> ls;
    for (const auto& v : sample_points(lambdas_raw, grid)) ls.push_back(parse_real(v));
    Json table = Json::array();
    for (const auto& [l, v] : forward_table(s, f, ls)) table.push_back({{"lambda", l}, {"re", v.real()}, {"im", v.imag()}});
    doc["table"] = table;
  }
  int code = 0;
  if (!roundtrip_raw.empty()) {
    std::vector<double> xs;
    for (const auto& v : roundtrip_raw) xs.push_back(parse_real(v));
    const double r = roundtrip_residual(s, f, xs);
    const double tol = 1e-7;
    doc["roundtrip"] = {{"points", xs}, {"residual", r}, {"tolerance", tol}, {"passed", r < tol}};
    code = r < tol ? 0 : 1;
  }
  if (!doc.contains("table") && !doc.contains("roundtrip")) throw UsageError("give --lambda/--grid or --roundtrip");
  emit(o, doc);
  return code;
}

int run_report(const Options& o) {
  const Json doc = report();
  emit(o, doc);
  return doc["summary"]["all_passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Bessel families: evaluation, exact algebra checks, limits and transforms"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--output", o.output, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--tolerance", o.tolerance, "tolerance override");
  app.add_option("--truncation", o.truncation, "series term cap override");
  app.add_option("--seed", o.seed, "seed (the battery is deterministic; recorded only)");
  app.add_option("--precision", o.precision, "double or high (default from QBESSEL_PRECISION)");

  auto add_params = [&](CLI::App* sub, const std::vector<std::string>& names) {
    for (const auto& n : names) sub->add_option("--" + n, o.params[n], "parameter " + n);
  };

  std::string fn, grid, rep, family, case_id, kind, fname = "gauss", norm = "standard";
  std::vector<std::string> xs, lambdas, roundtrip;
  int degree = 16, max_n = 12, order = 28;

  auto* eval = app.add_subcommand("eval", "evaluate a function or polynomial");
  eval->add_option("--fn", fn,
                   "bessel, minus1-bessel, dunkl-kernel, cas, qbessel3, qbessel2, jackson2, jackson3, "
                   "little-q-jacobi, q-laguerre, minus1-jacobi")
      ->required();
  eval->add_option("--x", xs, "sample point (repeatable)");
  eval->add_option("--grid", grid, "start:stop:count");
  add_params(eval, kParamNames);

  auto* alg = app.add_subcommand("verify-algebra", "exact relation and Casimir checks");
  alg->add_option("--rep", rep, "little-q-jacobi, minus1-jacobi, qbessel3, dunkl, qlaguerre, qbessel2, daha")
      ->required();
  alg->add_option("--degree", degree, "highest test monomial");
  add_params(alg, kParamNames);

  auto* eig = app.add_subcommand("verify-eigen", "exact eigenvalue checks");
  eig->add_option("--family", family,
                  "little-q-jacobi, q-laguerre, minus1-jacobi, qbessel3, qbessel2, dunkl-kernel, minus1-bessel")
      ->required();
  eig->add_option("--max-n", max_n, "largest degree for polynomial families");
  eig->add_option("--order", order, "series order for termwise checks");
  add_params(eig, kParamNames);

  auto* lim = app.add_subcommand("verify-limits", "run limit cases");
  lim->add_option("--case", case_id, "case id, 'all', 'qshifted' or 'diagram'")->required();
  add_params(lim, kParamNames);

  auto* tr = app.add_subcommand("transform", "tabulate a transform or check a round trip");
  tr->add_option("--kind", kind, "hankel, dunkl or minus1")->required();
  tr->add_option("--f", fname, "test function");
  tr->add_option("--normalization", norm, "standard or printed");
  tr->add_option("--lambda", lambdas, "frequency (repeatable)");
  tr->add_option("--grid", grid, "start:stop:count");
  tr->add_option("--roundtrip", roundtrip, "points for inverse(forward(f)) - f (repeatable)");
  add_params(tr, {"alpha"});

  auto* rpt = app.add_subcommand("report", "full verification battery as one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return run_eval(o, fn, xs, grid);
    if (*alg) return run_verify_algebra(o, rep, degree);
    if (*eig) return run_verify_eigen(o, family, max_n, order);
    if (*lim) return run_verify_limits(o, case_id);
    if (*tr) return run_transform(o, kind, fname, norm, lambdas, grid, roundtrip);
    if (*rpt) return run_report(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
