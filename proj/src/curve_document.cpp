#include "joinpi/curve_document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "joinpi/expr_parser.hpp"

namespace joinpi {

namespace {

[[noreturn]] void bad(const std::string& what) { throw JoinpiError(ErrorCode::invalid_input, what); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad(where + ": expected an integer or a rational string");
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(int_from_json(v, where));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v, where));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

PatternSpec pattern_from_json(const Json& j) {
  if (!j.is_object()) bad("pattern: expected an object");
  PatternSpec p;
  for (const char* key : {"nu", "lambda", "sign_a", "sign_b", "f_values", "g_values"})
    if (!j.contains(key)) bad(std::string("pattern: missing field '") + key + "'");
  p.nu = ints_from_json(j["nu"], "pattern.nu");
  p.lambda = ints_from_json(j["lambda"], "pattern.lambda");
  p.sign_a = int_from_json(j["sign_a"], "pattern.sign_a");
  p.sign_b = int_from_json(j["sign_b"], "pattern.sign_b");
  p.f_values = rationals_from_json(j["f_values"], "pattern.f_values");
  p.g_values = rationals_from_json(j["g_values"], "pattern.g_values");
  return p;
}

Json pattern_to_json(const PatternSpec& p) {
  Json j;
  j["nu"] = p.nu;
  j["lambda"] = p.lambda;
  j["sign_a"] = p.sign_a;
  j["sign_b"] = p.sign_b;
  j["f_values"] = rationals_to_json(p.f_values);
  j["g_values"] = rationals_to_json(p.g_values);
  return j;
}

Expectations expectations_from_json(const Json& j) {
  if (!j.is_object()) bad("expect: expected an object");
  Expectations e;
  auto str = [&](const char* k, std::optional<std::string>& dst) {
    if (!j.contains(k)) return;
    if (!j[k].is_string()) bad(std::string("expect.") + k + ": expected a string");
    dst = j[k].get<std::string>();
  };
  auto num = [&](const char* k, std::optional<int>& dst) {
    if (j.contains(k)) dst = int_from_json(j[k], std::string("expect.") + k);
  };
  str("genericity", e.genericity);
  str("affine", e.affine);
  str("projective", e.projective);
  num("orbits", e.orbits);
  num("node_count", e.node_count);
  num("cusp_count", e.cusp_count);
  num("special_vertices", e.special_vertices);
  for (const auto& [k, v] : j.items()) {
    static const std::vector<std::string> known = {"genericity", "affine",     "projective",      "orbits",
                                                   "node_count", "cusp_count", "special_vertices"};
    if (std::find(known.begin(), known.end(), k) == known.end()) bad("expect: unknown field '" + k + "'");
  }
  return e;
}

Json expectations_to_json(const Expectations& e) {
  Json j = Json::object();
  if (e.genericity) j["genericity"] = *e.genericity;
  if (e.affine) j["affine"] = *e.affine;
  if (e.projective) j["projective"] = *e.projective;
  if (e.orbits) j["orbits"] = *e.orbits;
  if (e.node_count) j["node_count"] = *e.node_count;
  if (e.cusp_count) j["cusp_count"] = *e.cusp_count;
  if (e.special_vertices) j["special_vertices"] = *e.special_vertices;
  return j;
}

}  // namespace

bool Expectations::empty() const {
  return !genericity && !affine && !projective && !orbits && !node_count && !cusp_count && !special_vertices;
}

FactoredPoly factored_from_json(const Json& j, char variable) {
  const std::string name(1, variable == 'y' ? 'f' : 'g');
  if (j.is_string()) return parse_factored_poly(j.get<std::string>(), variable);
  if (!j.is_object()) bad(name + ": expected an expression string or an object");
  if (j.contains("expr")) {
    if (!j["expr"].is_string()) bad(name + ".expr: expected a string");
    return parse_factored_poly(j["expr"].get<std::string>(), variable);
  }
  if (!j.contains("factors") || !j["factors"].is_array()) bad(name + ": needs \"expr\" or a \"factors\" list");
  Rational scale = j.contains("scale") ? rational_from_json(j["scale"], name + ".scale") : Rational(1);
  std::vector<RootFactor> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("root")) bad(name + ".factors: each entry needs a \"root\"");
    RootFactor rf;
    rf.root = rational_from_json(f["root"], name + ".factors.root");
    rf.multiplicity = f.contains("mult") ? int_from_json(f["mult"], name + ".factors.mult") : 1;
    factors.push_back(rf);
  }
  return FactoredPoly(scale, std::move(factors));
}

Json factored_to_json(const FactoredPoly& p, char variable) {
  Json j;
  j["expr"] = p.to_string(variable);
  return j;
}

CurveDocument parse_curve_document(const Json& j, std::optional<InputMode> mode_override) {
  if (!j.is_object()) bad("curve document must be a JSON object");
  CurveDocument d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name: expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (j.contains("expect")) d.expect = expectations_from_json(j["expect"]);
  InputMode mode = InputMode::exact;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) bad("mode: expected a string");
    mode = parse_input_mode(j["mode"].get<std::string>());
  } else if (j.contains("pattern")) {
    mode = InputMode::pattern;
  }
  if (mode_override) mode = *mode_override;

  std::vector<IndexPair> pairs;
  if (j.contains("coincidences")) {
    if (!j["coincidences"].is_array()) bad("coincidences: expected an array of [i, j] pairs");
    for (const auto& p : j["coincidences"]) {
      if (!p.is_array() || p.size() != 2) bad("coincidences: expected an array of [i, j] pairs");
      pairs.emplace_back(int_from_json(p[0], "coincidences"), int_from_json(p[1], "coincidences"));
    }
  }
  const bool has_fg = j.contains("f") && j.contains("g");
  switch (mode) {
    case InputMode::exact:
    case InputMode::declared: {
      if (!has_fg) bad(to_string(mode) + " mode needs both \"f\" and \"g\"");
      FactoredPoly f = factored_from_json(j["f"], 'y'), g = factored_from_json(j["g"], 'x');
      d.curve = mode == InputMode::exact ? JoinTypeCurve::exact(std::move(f), std::move(g))
                                         : JoinTypeCurve::declared(std::move(f), std::move(g), pairs);
      break;
    }
    case InputMode::pattern:
      if (j.contains("pattern")) {
        d.curve = JoinTypeCurve::pattern(pattern_from_json(j["pattern"]));
      } else if (has_fg) {
        JoinTypeCurve src = pairs.empty() ? JoinTypeCurve::exact(factored_from_json(j["f"], 'y'), factored_from_json(j["g"], 'x'))
                                          : JoinTypeCurve::declared(factored_from_json(j["f"], 'y'),
                                                                    factored_from_json(j["g"], 'x'), pairs);
        d.curve = JoinTypeCurve::pattern(derive_pattern(analyze_curve(src)));
      } else {
        bad("pattern mode needs a \"pattern\" block or f and g to derive one from");
      }
      break;
  }
  return d;
}

CurveDocument read_curve_document(const std::string& path, std::optional<InputMode> mode_override) {
  Json j;
  try {
    if (path == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) bad("cannot open '" + path + "'");
      j = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw JoinpiError(ErrorCode::syntax, std::string("malformed JSON: ") + e.what(), e.byte);
  }
  return parse_curve_document(j, mode_override);
}

Json curve_document_json(const CurveDocument& d) {
  Json j;
  if (d.name) j["name"] = *d.name;
  j["mode"] = to_string(d.curve.mode());
  if (d.curve.has_coefficients()) {
    j["f"] = factored_to_json(d.curve.f(), 'y');
    j["g"] = factored_to_json(d.curve.g(), 'x');
    if (d.curve.mode() == InputMode::declared) {
      Json pairs = Json::array();
      for (const auto& [i, k] : d.curve.declared_coincidences()) pairs.push_back({i, k});
      j["coincidences"] = pairs;
    }
  } else {
    j["pattern"] = pattern_to_json(d.curve.pattern_spec());
  }
  if (!d.expect.empty()) j["expect"] = expectations_to_json(d.expect);
  return j;
}

PatternSpec derive_pattern(const CurveAnalysis& a) {
  PatternSpec p;
  p.nu = a.exponents.nu;
  p.lambda = a.exponents.lambda;
  p.sign_a = a.sign_a;
  p.sign_b = a.sign_b;
  // Class positions relative to zero preserve both sign and order.
  for (int k : a.values.delta_class) p.f_values.emplace_back(k - a.values.zero_class);
  for (int k : a.values.gamma_class) p.g_values.emplace_back(k - a.values.zero_class);
  return p;
}

PatternSpec chebyshev_nodal_pattern(int n) {
  if (n < 1) bad("gallery: n must be at least 1");
  const int d = 2 * n + 1;
  PatternSpec p;
  p.nu.assign(static_cast<std::size_t>(d), 1);
  p.lambda.assign(static_cast<std::size_t>(d), 1);
  p.sign_a = 1;
  p.sign_b = 1;
  for (int j = 1; j < d; ++j) p.f_values.emplace_back(j % 2 ? 1 : -1);
  // g matches f at every critical value except the lowest one, pushed below -1.
  for (int i = 1; i < d; ++i) p.g_values.emplace_back(i == d - 1 ? -2 : (i % 2 ? 1 : -1));
  return p;
}

PatternSpec cusp_family_pattern(int n) {
  if (n < 1) bad("gallery: n must be at least 1");
  PatternSpec p;
  p.nu.assign(static_cast<std::size_t>(2 * n), 3);
  p.lambda.assign(static_cast<std::size_t>(3 * n), 2);
  p.sign_a = 1;
  p.sign_b = -1;
  for (int j = 1; j < 2 * n; ++j) p.f_values.emplace_back(j % 2 ? -1 : 1);
  for (int i = 1; i < 3 * n; ++i) p.g_values.emplace_back(i == 3 * n - 1 ? -2 : -1);
  return p;
}

Json gallery_document(const std::string& family, int n) {
  CurveDocument d;
  if (family == "chebyshev-nodal") {
    d.curve = JoinTypeCurve::pattern(chebyshev_nodal_pattern(n));
  } else if (family == "cusp-family") {
    d.curve = JoinTypeCurve::pattern(cusp_family_pattern(n));
  } else {
    bad("unknown gallery family '" + family + "' (chebyshev-nodal | cusp-family)");
  }
  d.name = family + " n=" + std::to_string(n);
  Json j = curve_document_json(d);
  if (family == "chebyshev-nodal") {
    // The unperturbed f-side; the pattern records the perturbed value order.
    Json coeffs = Json::array();
    const DensePoly t = chebyshev(2 * n + 1);
    for (const auto& c : t.coefficients()) coeffs.push_back(to_string(c));
    j["f_chebyshev"] = {{"degree", 2 * n + 1}, {"coefficients", coeffs}};
  }
  return j;
}

}  // namespace joinpi
