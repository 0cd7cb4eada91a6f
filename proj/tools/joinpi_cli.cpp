// joinpi: analyze join-type curves f(y) = g(x) from JSON curve documents.
//
//   joinpi analyze curve.json            JSON report on stdout
//   joinpi graph curve.json --dot g.dot  satellite graph in DOT
//   joinpi verify curve.json --level all verification suites
//   joinpi gallery cusp-family 2         pattern document for a family
//
// Exit codes: 0 ok, 1 input error, 2 not applicable,
// 3 verification failure.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "joinpi/report.hpp"

namespace {

using namespace joinpi;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotApplicable = 2;
constexpr int kVerifyFailed = 3;

struct Common {
  std::string path = "-";
  std::string mode;
  int precision = 64;
  std::int64_t max_cosets = kDefaultMaxCosets;
  double epsilon = 0.0;
  std::string dot;
  bool json = false;
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("path", c.path, "curve document ('-' for stdin)");
  cmd->add_option("--mode", c.mode, "override the document mode")->check(CLI::IsMember({"exact", "declared", "pattern"}));
  cmd->add_option("--precision", c.precision, "bits of refinement for displayed critical values")
      ->check(CLI::Range(1, 4096));
  cmd->add_option("--max-cosets", c.max_cosets, "coset enumeration limit")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", c.epsilon, "monodromy circle radius")->check(CLI::PositiveNumber);
  cmd->add_option("--dot", c.dot, "write the satellite graph to this DOT file");
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_flag("--quiet", c.quiet, "no stdout output, exit code only");
}

Pipeline load(const Common& c) {
  std::optional<InputMode> mode;
  if (!c.mode.empty()) mode = parse_input_mode(c.mode);
  return run_pipeline(read_curve_document(c.path, mode));
}

void write_dot(const Common& c, const Pipeline& p) {
  if (c.dot.empty()) return;
  std::ofstream out(c.dot);
  if (!out) throw JoinpiError(ErrorCode::invalid_input, "cannot write '" + c.dot + "'");
  out << export_dot(p.gamma);
}

void print_text(const Verification& v) {
  for (const auto& k : v.checks) {
    const char* tag = k.skipped ? "SKIP" : (k.passed ? "PASS" : "FAIL");
    std::cout << tag << "  " << k.suite << ": " << k.name;
    if (k.skipped)
      std::cout << " (" << k.actual << ")";
    else if (!k.passed)
      std::cout << "\n      expected: " << k.expected << "\n      actual:   " << k.actual;
    else
      std::cout << " = " << k.actual;
    std::cout << '\n';
  }
  std::cout << (v.passed() ? "all checks passed" : "verification FAILED") << '\n';
}

int cmd_analyze(const Common& c) {
  Pipeline p = load(c);
  write_dot(c, p);
  ReportOptions ro;
  ro.precision_bits = c.precision;
  if (!c.quiet) std::cout << build_report(p, ro).dump(2) << '\n';
  if (!p.pi1.applicable) {
    std::cerr << "joinpi: " << p.pi1.explanation << '\n';
    return kNotApplicable;
  }
  return kOk;
}

int cmd_graph(const Common& c) {
  Pipeline p = load(c);
  if (c.dot.empty()) {
    if (!c.quiet) std::cout << export_dot(p.gamma);
  } else {
    write_dot(c, p);
  }
  return p.pi1.applicable ? kOk : kNotApplicable;
}

int cmd_verify(const Common& c, const std::string& level) {
  Pipeline p = load(c);
  write_dot(c, p);
  VerifyOptions vo;
  vo.level = parse_verify_level(level);
  vo.max_cosets = c.max_cosets;
  if (c.epsilon > 0) vo.epsilon = c.epsilon;
  Verification v = verify(p, vo);
  if (!c.quiet) {
    if (c.json) {
      ReportOptions ro;
      ro.precision_bits = c.precision;
      std::cout << build_report(p, ro, &v).dump(2) << '\n';
    } else {
      print_text(v);
    }
  }
  return v.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of join-type curve complements"};
  app.require_subcommand(1);
  Common common;
  std::string level = "all";
  std::string family;
  int n = 1;

  auto* analyze = app.add_subcommand("analyze", "full JSON report");
  add_common(analyze, common);
  auto* graph = app.add_subcommand("graph", "satellite graph as DOT");
  add_common(graph, common);
  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_common(ver, common);
  ver->add_option("--level", level, "abelian | coset | monodromy | all")
      ->check(CLI::IsMember({"abelian", "coset", "monodromy", "all"}));
  auto* gallery = app.add_subcommand("gallery", "emit a curve document for a known family");
  gallery->add_option("family", family, "chebyshev-nodal | cusp-family")
      ->required()
      ->check(CLI::IsMember({"chebyshev-nodal", "cusp-family"}));
  gallery->add_option("n", n, "family parameter")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(common);
    if (*graph) return cmd_graph(common);
    if (*ver) return cmd_verify(common, level);
    if (*gallery) {
      std::cout << gallery_document(family, n).dump(2) << '\n';
      return kOk;
    }
  } catch (const JoinpiError& e) {
    std::cerr << "joinpi: " << error_code_name(e.code()) << ": " << e.what();
    if (e.offset() && std::string(e.what()).find("byte") == std::string::npos) std::cerr << " (at byte " << *e.offset() << ")";
    std::cerr << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "joinpi: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
