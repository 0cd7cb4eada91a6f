#include "joinpi/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "joinpi/monodromy.hpp"

namespace joinpi {

Pipeline run_pipeline(const CurveDocument& doc) {
  Pipeline p;
  p.doc = doc;
  p.analysis = analyze_curve(doc.curve);
  p.gamma = build_gamma(p.analysis);
  p.verdict = genericity_verdict(p.analysis);
  p.census = singularity_census(p.analysis);
  p.pluecker = pluecker_check(p.census);
  p.pi1 = compute_pi1(p.analysis, p.verdict);
  return p;
}

std::string to_string(VerifyLevel l) {
  switch (l) {
    case VerifyLevel::abelian: return "abelian";
    case VerifyLevel::coset: return "coset";
    case VerifyLevel::monodromy: return "monodromy";
    case VerifyLevel::all: return "all";
  }
  return "?";
}

VerifyLevel parse_verify_level(const std::string& s) {
  for (auto l : {VerifyLevel::abelian, VerifyLevel::coset, VerifyLevel::monodromy, VerifyLevel::all})
    if (to_string(l) == s) return l;
  throw JoinpiError(ErrorCode::invalid_input, "unknown verification level '" + s + "'");
}

bool Verification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<const Check*> Verification::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

namespace {

void add(Verification& v, std::string suite, std::string name, std::string expected, std::string actual) {
  bool ok = expected == actual;
  v.checks.push_back({std::move(suite), std::move(name), std::move(expected), std::move(actual), ok, false});
}

void skip(Verification& v, std::string suite, std::string name, std::string why) {
  v.checks.push_back({std::move(suite), std::move(name), "", std::move(why), true, true});
}

void check_claims(const Pipeline& p, Verification& v) {
  const auto& e = p.doc.expect;
  if (e.genericity) add(v, "claims", "genericity", *e.genericity, to_string(p.verdict.kind));
  if (e.affine) add(v, "claims", "affine group", *e.affine, p.pi1.affine.group.summary());
  if (e.projective) add(v, "claims", "projective group", *e.projective, p.pi1.projective.group.summary());
  if (e.orbits) add(v, "claims", "components", std::to_string(*e.orbits), std::to_string(p.pi1.component_count));
  if (e.node_count) add(v, "claims", "node count", std::to_string(*e.node_count), std::to_string(p.census.node_count));
  if (e.cusp_count) add(v, "claims", "cusp count", std::to_string(*e.cusp_count), std::to_string(p.census.cusp_count));
  if (e.special_vertices)
    add(v, "claims", "special vertices", std::to_string(*e.special_vertices),
        std::to_string(special_vertex_count(p.gamma)));
}

template <class G>
void abelian_checks(Verification& v, const std::string& name, const G& grp, std::optional<int> r) {
  InvariantFactors snf = abelianize(grp.presentation);
  add(v, "abelian", name + " H1 closed form", abelianization_closed_form(grp.p, grp.q, r).to_string(), snf.to_string());
  add(v, "abelian", name + " H1 classification", grp.group.abelianization.to_string(), snf.to_string());
}

template <class G>
void coset_check(Verification& v, const std::string& name, const G& grp, std::int64_t max_cosets) {
  auto order = grp.group.predicted_order();
  if (!order) {
    if (grp.group.tag != GroupTag::General) {
      skip(v, "coset", name + " order", "infinite group");
      return;
    }
    CosetResult res = coset_enumerate(grp.presentation, max_cosets);
    skip(v, "coset", name + " order",
         res.closed ? "closed with order " + std::to_string(res.order) : "no prediction; enumeration overflowed");
    return;
  }
  CosetResult res = coset_enumerate(grp.presentation, max_cosets);
  add(v, "coset", name + " order", std::to_string(*order),
      res.closed ? std::to_string(res.order) : "overflow at " + std::to_string(max_cosets) + " cosets");
}

std::string perm_list(const std::vector<Permutation>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + cycle_notation(p);
  return s;
}

// Cluster shape expected at one special fibre from the local models.
std::vector<LocalCluster> expected_clusters(const SpecialPoint& sp, const CurveAnalysis& a) {
  std::vector<LocalCluster> out;
  const auto& cls = a.values.classes;
  auto index_after = [&](const std::string& prefix) { return std::stoi(sp.origin.substr(prefix.size())); };
  if (sp.origin.rfind("alpha_", 0) == 0) {
    int i = index_after("alpha_");
    double lam = a.exponents.lambda[static_cast<std::size_t>(i - 1)];
    for (int nu : a.exponents.nu)
      if (nu >= 2) out.push_back({nu, lam / nu});
  } else if (sp.origin.rfind("gamma_", 0) == 0) {
    int i = index_after("gamma_");
    const auto& c = cls[static_cast<std::size_t>(a.values.gamma_class[static_cast<std::size_t>(i - 1)])];
    for (std::size_t k = 0; k < c.deltas.size(); ++k) out.push_back({2, 1.0});
  } else {
    int j = index_after("g=f(delta_");
    const auto& c = cls[static_cast<std::size_t>(a.values.delta_class[static_cast<std::size_t>(j - 1)])];
    for (std::size_t k = 0; k < c.deltas.size(); ++k) out.push_back({2, 0.5});
  }
  std::sort(out.begin(), out.end(), [](const LocalCluster& x, const LocalCluster& y) {
    return x.size != y.size ? x.size > y.size : x.exponent < y.exponent;
  });
  return out;
}

std::string clusters_string(const std::vector<LocalCluster>& cs) {
  std::ostringstream s;
  s.precision(3);
  for (const auto& c : cs) s << "[" << c.size << " ~ r^" << c.exponent << "]";
  return cs.empty() ? "none" : s.str();
}

bool clusters_match(const std::vector<LocalCluster>& want, const std::vector<LocalCluster>& got) {
  if (want.size() != got.size()) return false;
  for (std::size_t k = 0; k < want.size(); ++k)
    if (want[k].size != got[k].size || std::abs(want[k].exponent - got[k].exponent) > 0.1) return false;
  return true;
}

void monodromy_checks(const Pipeline& p, const VerifyOptions& opt, Verification& v) {
  const auto& a = p.analysis;
  LoopOptions lo;
  lo.epsilon = opt.epsilon;
  try {
    NumericCurve nc = NumericCurve::from(a.curve);
    MonodromyResult r = compute_monodromy(nc, special_x_values(a), lo);
    add(v, "monodromy", "orbit count", std::to_string(p.pi1.component_count), std::to_string(r.orbits));
    add(v, "monodromy", "loop product = big circle", cycle_notation(r.big_circle), cycle_notation(r.product));
    LoopOptions moved = lo;
    moved.radius_scale = 0.8;
    moved.waypoint_jitter = 0.25;
    MonodromyResult r2 = compute_monodromy(nc, special_x_values(a), moved);
    add(v, "monodromy", "perturbation invariance", perm_list(r.loops), perm_list(r2.loops));
    std::vector<Complex> xs;
    for (const auto& s : r.layout.specials) xs.push_back(s.x);
    std::string want_all, got_all;
    bool ok = true;
    for (const auto& s : r.layout.specials) {
      auto want = expected_clusters(s, a);
      auto got = local_multiplicity(nc, s.x, r.layout.epsilon, xs);
      if (!clusters_match(want, got)) {
        ok = false;
        want_all += s.origin + ":" + clusters_string(want) + " ";
        got_all += s.origin + ":" + clusters_string(got) + " ";
      }
    }
    if (ok)
      add(v, "monodromy", "local models", "match", "match");
    else
      v.checks.push_back({"monodromy", "local models", want_all, got_all, false, false});
  } catch (const JoinpiError& e) {
    v.checks.push_back({"monodromy", "tracking", "completed", error_code_name(e.code()) + ": " + e.what(), false, false});
  }
}

}  // namespace

Verification verify(const Pipeline& p, const VerifyOptions& opt) {
  Verification v;
  check_claims(p, v);
  const bool all = opt.level == VerifyLevel::all;
  const auto& pi = p.pi1;
  if (all || opt.level == VerifyLevel::abelian) {
    abelian_checks(v, "affine", pi.affine, std::nullopt);
    abelian_checks(v, "projective", pi.projective, pi.projective.r);
    if (pi.projective_swapped) {
      abelian_checks(v, "projective (swapped)", *pi.projective_swapped, pi.projective_swapped->r);
      add(v, "abelian", "swapped projective forms agree", "true", pi.cross_check_ok ? "true" : "false");
    }
    add(v, "abelian", "affine H1 rank = components", std::to_string(pi.component_count),
        std::to_string(pi.affine.group.abelianization.free_rank));
  }
  if (all || opt.level == VerifyLevel::coset) {
    coset_check(v, "affine", pi.affine, opt.max_cosets);
    coset_check(v, "projective", pi.projective, opt.max_cosets);
  }
  if (all || opt.level == VerifyLevel::monodromy) {
    if (!p.doc.curve.has_coefficients()) {
      if (!all) throw JoinpiError(ErrorCode::invalid_input, "monodromy verification needs exact or declared mode");
      skip(v, "monodromy", "orbit count", "pattern mode has no coefficients");
    } else {
      monodromy_checks(p, opt, v);
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Report

namespace {

Json ints(const std::vector<int>& v) { return Json(v); }

Json value_json(const ValueClass& c, int bits) {
  Json j;
  j["sign"] = c.sign;
  j["approx"] = c.approx;
  if (c.value) {
    if (c.value->is_exact()) {
      j["exact"] = to_string(c.value->lo());
    } else {
      AlgebraicValue r = c.value->refined(pow2(-bits));
      j["bracket"] = {to_string(r.lo()), to_string(r.hi())};
    }
  }
  if (c.rank) j["rank"] = to_string(*c.rank);
  j["in_f"] = c.in_f;
  j["in_g"] = c.in_g;
  j["deltas"] = ints(c.deltas);
  j["gammas"] = ints(c.gammas);
  return j;
}

Json group_json(const GroupClass& g) {
  Json j;
  j["summary"] = g.summary();
  j["class"] = to_string(g.tag);
  j["abelian"] = g.abelian;
  j["abelianization"] = g.abelianization.to_string();
  if (auto o = g.predicted_order())
    j["order"] = *o;
  else
    j["order"] = nullptr;
  j["notes"] = g.notes;
  return j;
}

template <class G>
Json params_json(const G& grp, bool with_r, const ReportOptions& opt) {
  Json j;
  j["p"] = grp.p;
  j["q"] = grp.q;
  if constexpr (requires { grp.r; })
    if (with_r) j["r"] = grp.r;
  j["group"] = group_json(grp.group);
  if (opt.presentations) j["presentation"] = grp.presentation.to_string();
  return j;
}

Json singularity_json(const Singularity& s) {
  Json j;
  j["type"] = s.type_name();
  j["at"] = s.location_name();
  j["milnor"] = s.milnor();
  return j;
}

}  // namespace

Json verification_json(const Verification& v) {
  Json j;
  j["passed"] = v.passed();
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json k;
    k["suite"] = c.suite;
    k["name"] = c.name;
    k["status"] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
    if (!c.skipped) k["expected"] = c.expected;
    k["actual"] = c.actual;
    checks.push_back(k);
  }
  j["checks"] = checks;
  return j;
}

Json build_report(const Pipeline& p, const ReportOptions& opt, const Verification* v) {
  const auto& a = p.analysis;
  Json r;
  r["schema"] = kReportSchema;
  r["input"] = curve_document_json(p.doc);

  std::vector<std::string> warnings = a.warnings;
  for (const auto& w : a.coincidences.warnings)
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
  r["warnings"] = warnings;

  const auto& e = a.exponents;
  r["exponent_data"] = {{"nu", e.nu},   {"lambda", e.lambda}, {"nu0", e.nu0},
                        {"lambda0", e.lambda0}, {"d", e.d}, {"dprime", e.dprime}};

  Json coinc = Json::array();
  for (const auto& [i, j] : a.coincidences.pairs) coinc.push_back({i, j});
  r["coincidences"] = coinc;

  Json gv;
  gv["kind"] = to_string(p.verdict.kind);
  gv["wrt"] = to_string(p.verdict.wrt);
  gv["regular_satellites_g"] = p.verdict.regular_g;
  gv["regular_satellites_f"] = p.verdict.regular_f;
  r["genericity_verdict"] = gv;

  Json sigma;
  Json verts = Json::array();
  for (const auto& c : p.gamma.sigma.vertices) verts.push_back(value_json(c, opt.precision_bits));
  sigma["vertices"] = verts;
  sigma["zero_index"] = p.gamma.sigma.zero_index;
  sigma["degenerate"] = p.gamma.sigma.degenerate();
  r["sigma"] = sigma;

  Json sats = Json::array();
  for (const auto& s : p.gamma.satellites) {
    Json sj;
    sj["index"] = s.index;
    sj["lambda"] = s.lambda;
    sj["center_special"] = s.center_special;
    sj["branch_count"] = s.branches.size();
    Json bs = Json::array();
    for (const auto& b : s.branches) {
      Json bj;
      bj["label"] = b.label;
      bj["sign"] = b.sign;
      Json marks = Json::array();
      for (const auto& m : b.marks) {
        Json mj;
        mj["vertex"] = m.value;
        mj["special"] = m.special;
        if (m.shared_with)
          mj["shared_with"] = {m.shared_with->first, m.shared_with->second};
        else
          mj["shared_with"] = nullptr;
        marks.push_back(mj);
      }
      bj["marks"] = marks;
      bs.push_back(bj);
    }
    sj["branches"] = bs;
    sats.push_back(sj);
  }
  Json gamma;
  gamma["satellites"] = sats;
  gamma["special_vertex_count"] = special_vertex_count(p.gamma);
  gamma["covering_degree_ok"] = covering_degree_ok(p.gamma);
  gamma["gluing_ok"] = gluing_ok(p.gamma, a);
  r["gamma"] = gamma;

  const auto& c = p.census;
  Json cj;
  Json inner = Json::array(), outer = Json::array();
  for (const auto& s : c.inner) inner.push_back(singularity_json(s));
  for (const auto& s : c.outer) outer.push_back(singularity_json(s));
  cj["inner"] = inner;
  cj["outer"] = outer;
  cj["node_count"] = c.node_count;
  cj["cusp_count"] = c.cusp_count;
  cj["milnor_total"] = c.milnor_total;
  cj["degree"] = c.degree;
  cj["irreducible"] = c.irreducible;
  cj["pluecker"] = {{"bound", p.pluecker.bound},
                    {"nodal", p.pluecker.nodal},
                    {"maximal_nodal", p.pluecker.is_maximal_nodal}};
  r["singularities"] = cj;

  const auto& pi = p.pi1;
  Json pj;
  pj["applicable"] = pi.applicable;
  pj["conjectural"] = pi.conjectural;
  pj["basis"] = to_string(pi.basis);
  pj["explanation"] = pi.explanation;
  pj["component_count"] = pi.component_count;
  pj["affine"] = params_json(pi.affine, false, opt);
  pj["projective"] = params_json(pi.projective, true, opt);
  if (pi.projective_swapped) {
    pj["projective_swapped"] = params_json(*pi.projective_swapped, true, opt);
    pj["cross_check_ok"] = pi.cross_check_ok;
  }
  r["pi1"] = pj;

  if (v) r["verification"] = verification_json(*v);
  return r;
}

}  // namespace joinpi
