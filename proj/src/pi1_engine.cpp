#include "joinpi/pi1_engine.hpp"

#include <numeric>

namespace joinpi {

AffineGroup affine_group(const ExponentData& e) {
  AffineGroup g;
  g.p = e.nu0;
  g.q = e.lambda0;
  g.presentation = present_Gpq(g.p, g.q);
  g.group = classify_Gpq(g.p, g.q);
  return g;
}

namespace {

ProjectiveGroup make_projective(int p, int q, int r) {
  ProjectiveGroup g;
  g.p = p;
  g.q = q;
  g.r = r;
  g.presentation = present_Gpqr(p, q, r);
  g.group = classify_Gpqr(p, q, r);
  return g;
}

}  // namespace

ProjectiveGroup projective_group(const ExponentData& e) {
  if (e.d >= e.dprime) return make_projective(e.nu0, e.lambda0, e.d / e.nu0);
  return make_projective(e.lambda0, e.nu0, e.dprime / e.lambda0);
}

int component_count(const ExponentData& e) { return std::gcd(e.nu0, e.lambda0); }

Pi1Result compute_pi1(const CurveAnalysis& a, const GenericityVerdict& v) {
  Pi1Result res;
  const auto& e = a.exponents;
  res.affine = affine_group(e);
  res.projective = projective_group(e);
  res.component_count = component_count(e);
  if (e.d == e.dprime) {
    res.projective_swapped = make_projective(e.lambda0, e.nu0, e.dprime / e.lambda0);
    const auto& x = res.projective.group;
    const auto& y = res.projective_swapped->group;
    res.cross_check_ok = x.abelianization == y.abelianization;
    if (x.predicted_order() && y.predicted_order() && *x.predicted_order() != *y.predicted_order())
      res.cross_check_ok = false;
  }
  if (v.semi_generic_wrt_g()) {
    res.applicable = true;
    res.basis = Side::g;
    res.explanation = "semi-generic with respect to g (regular satellite " + std::to_string(v.regular_g.front()) + ")";
  } else if (v.semi_generic_wrt_f()) {
    res.applicable = true;
    res.basis = Side::f;
    res.explanation = "semi-generic with respect to f (regular satellite " + std::to_string(v.regular_f.front()) +
                      " of the transposed curve)";
  } else {
    res.applicable = false;
    res.conjectural = true;
    res.explanation = "conjectural - hypotheses unmet: no regular satellite for g (all " +
                      std::to_string(e.lambda.size()) + " satellites non-regular) nor for f";
  }
  return res;
}

}  // namespace joinpi
