#include "joinpi/bifurcation_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace joinpi {

const Branch* Satellite::branch(int label) const {
  for (const auto& b : branches)
    if (b.label == label) return &b;
  return nullptr;
}

BambooGraph build_sigma(const CurveAnalysis& a) {
  BambooGraph s;
  s.vertices = a.values.classes;
  s.zero_index = a.values.zero_class;
  return s;
}

namespace {

// Label of the branch at angular slot q: B_{i,0} is positive, so the right
// real segment is B_{i,0} when g > 0 there and B_{i,1} otherwise.
int label_at(int q, int s0, int lambda) { return (q + (s0 < 0 ? 1 : 0)) % (2 * lambda); }

}  // namespace

BifurcationGraph build_gamma(const CurveAnalysis& a) {
  BifurcationGraph out;
  out.sigma = build_sigma(a);
  const auto& verts = out.sigma.vertices;
  const int z = out.sigma.zero_index;
  const int m = static_cast<int>(a.exponents.lambda.size());
  out.degenerate = out.sigma.degenerate();

  std::vector<int> positive, negative;  // outward order
  for (int k = z + 1; k < static_cast<int>(verts.size()); ++k) positive.push_back(k);
  for (int k = z - 1; k >= 0; --k) negative.push_back(k);

  for (int i = 1; i <= m; ++i) {
    Satellite sat;
    sat.index = i;
    sat.lambda = a.exponents.lambda[static_cast<std::size_t>(i - 1)];
    sat.center_special = verts[static_cast<std::size_t>(z)].in_f;
    const int s0 = interval_sign(a.sign_b, a.exponents.lambda, static_cast<std::size_t>(i));
    for (int q = 0; q < 2 * sat.lambda; ++q) {
      int sgn = (q % 2 == 0) ? s0 : -s0;
      const auto& along = sgn > 0 ? positive : negative;
      if (along.empty()) continue;
      Branch b;
      b.position = q;
      b.sign = sgn;
      b.label = label_at(q, s0, sat.lambda);
      for (int v : along) b.marks.push_back(VertexMark{v, verts[static_cast<std::size_t>(v)].in_f, std::nullopt});
      sat.branches.push_back(std::move(b));
    }
    std::sort(sat.branches.begin(), sat.branches.end(),
              [](const Branch& x, const Branch& y) { return x.label < y.label; });
    out.satellites.push_back(std::move(sat));
  }

  // gamma_i sits on the right real segment of satellite i (slot 0) and the
  // left real segment of satellite i+1 (slot lambda_{i+1}).
  for (int i = 1; i < m && !out.degenerate; ++i) {
    int value = a.values.gamma_class[static_cast<std::size_t>(i - 1)];
    auto& left = out.satellites[static_cast<std::size_t>(i - 1)];
    auto& right = out.satellites[static_cast<std::size_t>(i)];
    auto find_slot = [](Satellite& s, int q) -> Branch* {
      for (auto& b : s.branches)
        if (b.position == q) return &b;
      return nullptr;
    };
    Branch* bl = find_slot(left, 0);
    Branch* br = find_slot(right, right.lambda);
    if (!bl || !br) continue;
    auto mark_of = [value](Branch& b) -> VertexMark* {
      for (auto& mk : b.marks)
        if (mk.value == value) return &mk;
      return nullptr;
    };
    VertexMark* ml = mark_of(*bl);
    VertexMark* mr = mark_of(*br);
    if (!ml || !mr) continue;
    ml->shared_with = std::make_pair(right.index, br->label);
    mr->shared_with = std::make_pair(left.index, bl->label);
  }
  return out;
}

int special_vertex_count(const BifurcationGraph& g) {
  int count = 0;
  for (const auto& s : g.satellites) {
    if (s.center_special) ++count;
    for (const auto& b : s.branches)
      for (const auto& mk : b.marks) {
        if (!mk.special) continue;
        // A shared mark is owned by the lower-index satellite.
        if (mk.shared_with && mk.shared_with->first < s.index) continue;
        ++count;
      }
  }
  return count;
}

bool covering_degree_ok(const BifurcationGraph& g) {
  const auto& verts = g.sigma.vertices;
  for (const auto& s : g.satellites) {
    std::map<int, int> seen;
    for (const auto& b : s.branches)
      for (const auto& mk : b.marks) {
        if (verts[static_cast<std::size_t>(mk.value)].sign != b.sign) return false;
        ++seen[mk.value];
      }
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (static_cast<int>(v) == g.sigma.zero_index) continue;
      if (seen[static_cast<int>(v)] != s.lambda) return false;
    }
    if (!g.degenerate) {
      bool both = verts.front().sign < 0 && verts.back().sign > 0;
      std::size_t expected = static_cast<std::size_t>(both ? 2 * s.lambda : s.lambda);
      if (s.branches.size() != expected) return false;
    } else if (!s.branches.empty()) {
      return false;
    }
  }
  return true;
}

bool gluing_ok(const BifurcationGraph& g, const CurveAnalysis& a) {
  if (g.degenerate) return true;
  const std::size_t m = g.satellites.size();
  for (std::size_t i = 0; i < m; ++i) {
    int with_prev = 0, with_next = 0, other = 0;
    for (const auto& b : g.satellites[i].branches)
      for (const auto& mk : b.marks) {
        if (!mk.shared_with) continue;
        int j = mk.shared_with->first;
        if (j == static_cast<int>(i)) {
          ++with_prev;
          if (mk.value != a.values.gamma_class[i - 1]) return false;
        } else if (j == static_cast<int>(i) + 2) {
          ++with_next;
          if (mk.value != a.values.gamma_class[i]) return false;
        } else {
          ++other;
        }
      }
    if (other != 0) return false;
    if (with_prev != (i > 0 ? 1 : 0)) return false;
    if (with_next != (i + 1 < m ? 1 : 0)) return false;
  }
  return true;
}

std::vector<int> regular_satellites(const CurveAnalysis& a) {
  const int m = static_cast<int>(a.exponents.lambda.size());
  auto regular_value = [&](int i) {  // g(gamma_i) is a regular value for f
    return a.values.classes[static_cast<std::size_t>(a.values.gamma_class[static_cast<std::size_t>(i - 1)])]
        .deltas.empty();
  };
  std::vector<int> out;
  for (int i = 1; i <= m; ++i) {
    bool ok = true;
    if (i > 1 && !regular_value(i - 1)) ok = false;
    if (i < m && !regular_value(i)) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

CurveAnalysis transposed(const CurveAnalysis& a) {
  CurveAnalysis t = a;
  t.curve = a.curve.transposed();
  std::swap(t.exponents.nu, t.exponents.lambda);
  std::swap(t.exponents.nu0, t.exponents.lambda0);
  std::swap(t.exponents.d, t.exponents.dprime);
  std::swap(t.sign_a, t.sign_b);
  if (t.locus) {
    std::swap(t.locus->gammas, t.locus->deltas);
    std::swap(t.locus->g_reduced_derivative, t.locus->f_reduced_derivative);
    std::swap(t.locus->g_critical_values, t.locus->f_critical_values);
  }
  for (auto& [i, j] : t.coincidences.pairs) std::swap(i, j);
  std::vector<std::size_t> order(t.coincidences.pairs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return t.coincidences.pairs[x] < t.coincidences.pairs[y]; });
  CoincidenceSet sorted;
  sorted.warnings = t.coincidences.warnings;
  for (std::size_t k : order) {
    sorted.pairs.push_back(t.coincidences.pairs[k]);
    if (k < t.coincidences.shared_values.size()) sorted.shared_values.push_back(t.coincidences.shared_values[k]);
  }
  t.coincidences = std::move(sorted);
  std::swap(t.values.delta_class, t.values.gamma_class);
  for (auto& vc : t.values.classes) {
    std::swap(vc.in_f, vc.in_g);
    std::swap(vc.deltas, vc.gammas);
  }
  return t;
}

std::string to_string(GenericityKind k) {
  switch (k) {
    case GenericityKind::generic: return "generic";
    case GenericityKind::semi_generic: return "semi_generic";
    case GenericityKind::not_semi_generic: return "not_semi_generic";
  }
  return "generic";
}

std::string to_string(Side s) {
  switch (s) {
    case Side::none: return "none";
    case Side::g: return "g";
    case Side::f: return "f";
    case Side::both: return "both";
  }
  return "none";
}

GenericityVerdict genericity_verdict(const CurveAnalysis& a) {
  GenericityVerdict v;
  v.regular_g = regular_satellites(a);
  v.regular_f = regular_satellites(transposed(a));
  bool wg = !v.regular_g.empty(), wf = !v.regular_f.empty();
  v.wrt = wg && wf ? Side::both : wg ? Side::g : wf ? Side::f : Side::none;
  if (a.coincidences.pairs.empty())
    v.kind = GenericityKind::generic;
  else if (wg || wf)
    v.kind = GenericityKind::semi_generic;
  else
    v.kind = GenericityKind::not_semi_generic;
  return v;
}

std::string export_dot(const BifurcationGraph& g) {
  std::ostringstream os;
  os << "digraph Gamma {\n";
  os << "  graph [layout=neato, overlap=false];\n";
  os << "  node [shape=circle, width=0.15, label=\"\"];\n";
  auto node_name = [](int i, int q, std::size_t k) {
    return "s" + std::to_string(i) + "b" + std::to_string(q) + "v" + std::to_string(k + 1);
  };
  const auto& verts = g.sigma.vertices;
  for (const auto& s : g.satellites) {
    os << "  s" << s.index << " [shape=star, style=filled, fillcolor=black, xlabel=\"alpha_" << s.index << "\"";
    if (s.center_special) os << ", peripheries=2, color=gray";
    os << "];\n";
  }
  for (const auto& s : g.satellites) {
    for (const auto& b : s.branches) {
      std::string prev = "s" + std::to_string(s.index);
      for (std::size_t k = 0; k < b.marks.size(); ++k) {
        const auto& mk = b.marks[k];
        std::string name = node_name(s.index, b.label, k);
        bool owned_elsewhere = mk.shared_with && mk.shared_with->first < s.index;
        if (owned_elsewhere) {
          // Reuse the node emitted by the lower satellite.
          const Satellite& other = g.satellites[static_cast<std::size_t>(mk.shared_with->first - 1)];
          const Branch* ob = other.branch(mk.shared_with->second);
          std::size_t ok = 0;
          for (; ob && ok < ob->marks.size(); ++ok)
            if (ob->marks[ok].value == mk.value) break;
          name = node_name(other.index, mk.shared_with->second, ok);
        } else {
          const auto& vc = verts[static_cast<std::size_t>(mk.value)];
          os << "  " << name << " [style=" << (b.sign > 0 ? "filled, fillcolor=black" : "solid, fillcolor=white")
             << ", tooltip=\"v" << mk.value << "\"";
          if (mk.special) os << ", peripheries=2, color=gray";
          if (mk.shared_with) os << ", xlabel=\"gamma\"";
          os << "];  // value ~ " << vc.approx << "\n";
        }
        os << "  " << prev << " -> " << name << " [arrowhead=none, style=" << (b.sign > 0 ? "solid" : "dashed");
        if (k == 0) os << ", label=\"B" << s.index << "," << b.label << "\"";
        os << "];\n";
        prev = name;
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace joinpi
