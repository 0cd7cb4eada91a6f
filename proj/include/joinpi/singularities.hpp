#pragma once

// Singular points of a join-type curve. Inner ones sit at (alpha_i, beta_j)
// and have Brieskorn-Pham type B_{nu_j, lambda_i}; outer ones sit at
// (gamma_i, delta_j) for each critical-value coincidence and are nodes.

#include <string>
#include <vector>

#include "joinpi/curve_model.hpp"

namespace joinpi {

enum class SingularityKind { inner, outer };

struct Singularity {
  SingularityKind kind = SingularityKind::inner;
  int i = 0;  // alpha_i or gamma_i
  int j = 0;  // beta_j or delta_j
  int p = 2;  // B_{p,q}: y^p - x^q
  int q = 2;

  bool is_node() const { return p == 2 && q == 2; }
  bool is_cusp() const { return (p == 3 && q == 2) || (p == 2 && q == 3); }
  // Extension: Milnor number (p-1)(q-1).
  int milnor() const { return (p - 1) * (q - 1); }
  std::string type_name() const;     // "B_{3,2}"
  std::string location_name() const; // "(alpha_2,beta_1)"
};

struct SingularityCensus {
  std::vector<Singularity> inner;  // i-major
  std::vector<Singularity> outer;  // sorted by (i, j)
  int node_count = 0;
  int cusp_count = 0;
  int milnor_total = 0;
  int degree = 0;  // degree of the projective closure, max(d, d')
  bool irreducible = true;
};

std::vector<Singularity> inner_singularities(const ExponentData& e);
std::vector<Singularity> outer_singularities(const CoincidenceSet& c);
SingularityCensus singularity_census(const CurveAnalysis& a);

struct PlueckerCheck {
  int node_count = 0;
  int bound = 0;  // (d-1)(d-2)/2
  bool nodal = false;
  bool irreducible = false;
  bool is_maximal_nodal = false;
};

PlueckerCheck pluecker_check(const SingularityCensus& census);

// Local behaviour of a point on a special line x = const of the pencil.
enum class LocalModel {
  tangency,           // (y-delta_j)^2 = c(x-gamma_{j,k})
  node,               // (y-delta_j)^2 = c(x-gamma_i)^2
  vertical_flex,      // (y-beta_j)^nu_j = c(x-alpha_i), lambda_i = 1
  inner,              // (y-beta_j)^nu_j = c(x-alpha_i)^lambda_i
  transverse,         // the line meets the curve transversally there
};

std::string to_string(LocalModel m);

struct LocalModelInfo {
  LocalModel model = LocalModel::transverse;
  int multiplicity = 1;  // intersection multiplicity with the pencil line
  std::string normal_form;
};

// A point of a special fibre, described symbolically.
struct PencilPoint {
  enum class Where { root_pair, critical_pair, regular_preimage } where = Where::root_pair;
  int i = 0;
  int j = 0;
};

LocalModelInfo local_model(const PencilPoint& pt, const CurveAnalysis& a);

}  // namespace joinpi
