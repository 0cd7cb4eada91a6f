#pragma once

// Fundamental groups of the affine and projective complements of a
// join-type curve: G(nu0;lambda0) and G(nu0;lambda0;d/nu0) (or the swapped
// form when d < d'), valid when the curve is semi-generic wrt g or f.

#include <optional>
#include <string>
#include <vector>

#include "joinpi/bifurcation_graph.hpp"
#include "joinpi/group_presentations.hpp"

namespace joinpi {

struct AffineGroup {
  int p = 1;
  int q = 1;
  Presentation presentation;
  GroupClass group;
};

struct ProjectiveGroup {
  int p = 1;
  int q = 1;
  int r = 1;
  Presentation presentation;
  GroupClass group;
};

struct Pi1Result {
  bool applicable = false;
  Side basis = Side::none;  // g, f or none
  // Outside the hypotheses the candidate groups are still filled in, but
  // flagged as unproven.
  bool conjectural = false;
  std::string explanation;
  AffineGroup affine;
  ProjectiveGroup projective;
  // When d == d' the other form is computed too and compared.
  std::optional<ProjectiveGroup> projective_swapped;
  bool cross_check_ok = true;
  int component_count = 1;
};

AffineGroup affine_group(const ExponentData& e);
ProjectiveGroup projective_group(const ExponentData& e);
int component_count(const ExponentData& e);

Pi1Result compute_pi1(const CurveAnalysis& a, const GenericityVerdict& v);

}  // namespace joinpi
