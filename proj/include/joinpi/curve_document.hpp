#pragma once

// JSON curve documents: loading (any mode, f/g as expression strings or
// structured factor lists), canonical echo, and the gallery families.

#include <optional>
#include <string>

#include <json.hpp>

#include "joinpi/curve_model.hpp"

namespace joinpi {

using Json = nlohmann::ordered_json;

// Claims a document may make about its own analysis; checked by `verify`.
struct Expectations {
  std::optional<std::string> genericity;  // "generic", "semi_generic", "not_semi_generic"
  std::optional<std::string> affine;      // GroupClass::summary()
  std::optional<std::string> projective;
  std::optional<int> orbits;
  std::optional<int> node_count;
  std::optional<int> cusp_count;
  std::optional<int> special_vertices;

  bool empty() const;
};

struct CurveDocument {
  JoinTypeCurve curve;
  Expectations expect;
  std::optional<std::string> name;
};

FactoredPoly factored_from_json(const Json& j, char variable);
Json factored_to_json(const FactoredPoly& p, char variable);

// Throws JoinpiError on malformed documents. A mode override reinterprets
// the data: exact drops declared pairs, declared keeps them, pattern derives
// ranks from an exact analysis when no "pattern" block is present.
CurveDocument parse_curve_document(const Json& j, std::optional<InputMode> mode_override = {});
CurveDocument read_curve_document(const std::string& path, std::optional<InputMode> mode_override = {});

// Canonical form: parse(curve_document_json(d)) reproduces d.
Json curve_document_json(const CurveDocument& d);

// Pattern with the value order of an analysed exact / declared curve.
PatternSpec derive_pattern(const CurveAnalysis& a);

// Gallery families, as pattern-mode documents.
PatternSpec chebyshev_nodal_pattern(int n);  // d = 2n+1
PatternSpec cusp_family_pattern(int n);      // d = 6n
Json gallery_document(const std::string& family, int n);

}  // namespace joinpi
