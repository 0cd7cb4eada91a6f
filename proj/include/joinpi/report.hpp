#pragma once

// Full pipeline on one curve document, the verification suites, and the
// versioned JSON report ("schema": "joinpi/1") printed by the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "joinpi/bifurcation_graph.hpp"
#include "joinpi/curve_document.hpp"
#include "joinpi/group_presentations.hpp"
#include "joinpi/pi1_engine.hpp"
#include "joinpi/singularities.hpp"

namespace joinpi {

inline constexpr const char* kReportSchema = "joinpi/1";

struct Pipeline {
  CurveDocument doc;
  CurveAnalysis analysis;
  BifurcationGraph gamma;
  GenericityVerdict verdict;
  SingularityCensus census;
  PlueckerCheck pluecker;
  Pi1Result pi1;
};

Pipeline run_pipeline(const CurveDocument& doc);

enum class VerifyLevel { abelian, coset, monodromy, all };
std::string to_string(VerifyLevel l);
VerifyLevel parse_verify_level(const std::string& s);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::all;
  std::int64_t max_cosets = kDefaultMaxCosets;
  std::optional<double> epsilon;  // monodromy circle radius
};

struct Check {
  std::string suite;  // "claims", "abelian", "coset", "monodromy"
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = true;
  bool skipped = false;
};

struct Verification {
  std::vector<Check> checks;
  bool passed() const;
  std::vector<const Check*> failures() const;
};

// Claims in the document's "expect" block are always checked. A monodromy
// request on a pattern-mode curve throws JoinpiError(invalid_input) unless
// the level is `all`, where it is skipped.
Verification verify(const Pipeline& p, const VerifyOptions& opt);

struct ReportOptions {
  int precision_bits = 64;  // bracket width for displayed critical values
  bool presentations = true;
};

Json build_report(const Pipeline& p, const ReportOptions& opt, const Verification* v = nullptr);
Json verification_json(const Verification& v);

}  // namespace joinpi
