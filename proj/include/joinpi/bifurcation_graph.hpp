#pragma once

// The bamboo graph Sigma (critical values on the real axis) and its pull-back
// Gamma = g^-1(Sigma), decomposed into star-shaped satellites around the
// roots alpha_i of g. The model is purely combinatorial: each branch is an
// ordered list of marks referring to Sigma vertices.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "joinpi/curve_model.hpp"

namespace joinpi {

struct BambooGraph {
  std::vector<ValueClass> vertices;  // strictly increasing, 0 included
  int zero_index = 0;

  std::size_t size() const { return vertices.size(); }
  const ValueClass& v_minus() const { return vertices.front(); }
  const ValueClass& v_plus() const { return vertices.back(); }
  bool degenerate() const { return vertices.size() == 1; }
};

struct VertexMark {
  int value = 0;           // index into BambooGraph::vertices
  bool special = false;    // value lies in V_crit(f)
  // (satellite, branch label) of the other copy of a shared gamma_i vertex.
  std::optional<std::pair<int, int>> shared_with;
};

struct Branch {
  int label = 0;     // q in B_{i,q}; even labels are positive
  int position = 0;  // angular slot, angle = position * pi / lambda_i
  int sign = 1;
  std::vector<VertexMark> marks;  // outward from the center
};

struct Satellite {
  int index = 1;  // i, centre alpha_i
  int lambda = 1;
  bool center_special = false;
  std::vector<Branch> branches;  // sorted by label

  const Branch* branch(int label) const;
};

struct BifurcationGraph {
  BambooGraph sigma;
  std::vector<Satellite> satellites;
  bool degenerate = false;  // Sigma = {0}: satellites have no branches
};

BambooGraph build_sigma(const CurveAnalysis& a);
BifurcationGraph build_gamma(const CurveAnalysis& a);

// Special vertices of Gamma (special lines of the pencil): centres when
// 0 is a critical value of f, plus marks with value in V_crit(f). Shared
// marks count once.
int special_vertex_count(const BifurcationGraph& g);

// Each non-zero Sigma value appears lambda_i times on branches of its sign.
bool covering_degree_ok(const BifurcationGraph& g);
// Satellite i shares exactly one vertex with i+1, at value g(gamma_i).
bool gluing_ok(const BifurcationGraph& g, const CurveAnalysis& a);

// Satellites whose adjacent critical values g(gamma_{i-1}), g(gamma_i) are
// regular values for f (one-sided at i = 1 and i = m).
std::vector<int> regular_satellites(const CurveAnalysis& a);

// Same data with the roles of f and g exchanged, without recomputation.
CurveAnalysis transposed(const CurveAnalysis& a);

enum class GenericityKind { generic, semi_generic, not_semi_generic };
enum class Side { none, g, f, both };

std::string to_string(GenericityKind k);
std::string to_string(Side s);

struct GenericityVerdict {
  GenericityKind kind = GenericityKind::generic;
  Side wrt = Side::both;
  std::vector<int> regular_g;  // regular satellites of Gamma (wrt g)
  std::vector<int> regular_f;  // regular satellites of the transposed curve

  bool semi_generic_wrt_g() const { return !regular_g.empty(); }
  bool semi_generic_wrt_f() const { return !regular_f.empty(); }
};

GenericityVerdict genericity_verdict(const CurveAnalysis& a);

// Graphviz text. Centres are star nodes named s{i}; marks are s{i}b{q}v{k}.
std::string export_dot(const BifurcationGraph& g);

}  // namespace joinpi
