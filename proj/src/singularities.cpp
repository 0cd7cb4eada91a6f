#include "joinpi/singularities.hpp"

#include <algorithm>
#include <numeric>

namespace joinpi {

std::string Singularity::type_name() const {
  return "B_{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

std::string Singularity::location_name() const {
  if (kind == SingularityKind::inner)
    return "(alpha_" + std::to_string(i) + ",beta_" + std::to_string(j) + ")";
  return "(gamma_" + std::to_string(i) + ",delta_" + std::to_string(j) + ")";
}

std::vector<Singularity> inner_singularities(const ExponentData& e) {
  std::vector<Singularity> out;
  for (std::size_t i = 0; i < e.lambda.size(); ++i) {
    if (e.lambda[i] < 2) continue;
    for (std::size_t j = 0; j < e.nu.size(); ++j) {
      if (e.nu[j] < 2) continue;
      out.push_back(Singularity{SingularityKind::inner, static_cast<int>(i) + 1, static_cast<int>(j) + 1, e.nu[j],
                                e.lambda[i]});
    }
  }
  return out;
}

std::vector<Singularity> outer_singularities(const CoincidenceSet& c) {
  std::vector<Singularity> out;
  for (const auto& [i, j] : c.pairs) out.push_back(Singularity{SingularityKind::outer, i, j, 2, 2});
  std::sort(out.begin(), out.end(), [](const Singularity& a, const Singularity& b) {
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });
  return out;
}

SingularityCensus singularity_census(const CurveAnalysis& a) {
  SingularityCensus c;
  c.inner = inner_singularities(a.exponents);
  c.outer = outer_singularities(a.coincidences);
  for (const auto* list : {&c.inner, &c.outer})
    for (const auto& s : *list) {
      if (s.is_node()) ++c.node_count;
      if (s.is_cusp()) ++c.cusp_count;
      c.milnor_total += s.milnor();
    }
  c.degree = std::max(a.exponents.d, a.exponents.dprime);
  c.irreducible = std::gcd(a.exponents.nu0, a.exponents.lambda0) == 1;
  return c;
}

PlueckerCheck pluecker_check(const SingularityCensus& census) {
  PlueckerCheck p;
  p.node_count = census.node_count;
  p.bound = (census.degree - 1) * (census.degree - 2) / 2;
  p.nodal = std::all_of(census.inner.begin(), census.inner.end(), [](const Singularity& s) { return s.is_node(); }) &&
            std::all_of(census.outer.begin(), census.outer.end(), [](const Singularity& s) { return s.is_node(); });
  p.irreducible = census.irreducible;
  p.is_maximal_nodal = p.nodal && p.irreducible && p.node_count == p.bound;
  return p;
}

std::string to_string(LocalModel m) {
  switch (m) {
    case LocalModel::tangency: return "tangency";
    case LocalModel::node: return "node";
    case LocalModel::vertical_flex: return "vertical_flex";
    case LocalModel::inner: return "inner";
    case LocalModel::transverse: return "transverse";
  }
  return "transverse";
}

LocalModelInfo local_model(const PencilPoint& pt, const CurveAnalysis& a) {
  const auto& e = a.exponents;
  auto check = [](int k, std::size_t n, const char* what) {
    if (k < 1 || static_cast<std::size_t>(k) > n)
      throw JoinpiError(ErrorCode::invalid_input, std::string(what) + " index out of range");
  };
  LocalModelInfo info;
  switch (pt.where) {
    case PencilPoint::Where::root_pair: {
      check(pt.i, e.lambda.size(), "alpha");
      check(pt.j, e.nu.size(), "beta");
      int lam = e.lambda[static_cast<std::size_t>(pt.i - 1)];
      int nu = e.nu[static_cast<std::size_t>(pt.j - 1)];
      if (nu == 1) {
        info.model = LocalModel::transverse;
        info.multiplicity = 1;
        info.normal_form = "(y-beta)=c(x-alpha)^" + std::to_string(lam);
      } else if (lam == 1) {
        info.model = LocalModel::vertical_flex;
        info.multiplicity = nu;
        info.normal_form = "(y-beta)^" + std::to_string(nu) + "=c(x-alpha)";
      } else {
        info.model = LocalModel::inner;
        info.multiplicity = nu;
        info.normal_form = "(y-beta)^" + std::to_string(nu) + "=c(x-alpha)^" + std::to_string(lam);
      }
      break;
    }
    case PencilPoint::Where::critical_pair: {
      check(pt.i, e.lambda.size() - 1, "gamma");
      check(pt.j, e.nu.size() - 1, "delta");
      const auto& pairs = a.coincidences.pairs;
      if (std::find(pairs.begin(), pairs.end(), IndexPair{pt.i, pt.j}) == pairs.end())
        throw JoinpiError(ErrorCode::invalid_input, "(gamma_i, delta_j) is not on the curve: g(gamma_i) != f(delta_j)");
      info.model = LocalModel::node;
      info.multiplicity = 2;
      info.normal_form = "(y-delta)^2=c(x-gamma)^2";
      break;
    }
    case PencilPoint::Where::regular_preimage: {
      // (x0, delta_j) with g(x0) = f(delta_j) and g'(x0) != 0.
      check(pt.j, e.nu.size() - 1, "delta");
      info.model = LocalModel::tangency;
      info.multiplicity = 2;
      info.normal_form = "(y-delta)^2=c(x-x0)";
      break;
    }
  }
  return info;
}

}  // namespace joinpi
