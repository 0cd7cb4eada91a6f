#include <numeric>
#include <sstream>
#include <stdexcept>

#include "joinpi/group_presentations.hpp"

namespace joinpi {

std::string to_string(GroupTag t) {
  switch (t) {
    case GroupTag::Z: return "Z";
    case GroupTag::ZxZ: return "ZxZ";
    case GroupTag::CyclicFinite: return "CyclicFinite";
    case GroupTag::ZxZn: return "ZxZn";
    case GroupTag::FreeProduct: return "FreeProduct";
    case GroupTag::Braid3: return "Braid3";
    case GroupTag::General: return "General";
  }
  return "General";
}

std::optional<std::int64_t> GroupClass::predicted_order() const {
  switch (tag) {
    case GroupTag::CyclicFinite: return n;
    case GroupTag::FreeProduct:
      if (p == 1) return q;
      if (q == 1) return p;
      return std::nullopt;
    default: return std::nullopt;
  }
}

std::string GroupClass::summary() const {
  switch (tag) {
    case GroupTag::Z: return "Z";
    case GroupTag::ZxZ: return "ZxZ";
    case GroupTag::CyclicFinite: return n == 1 ? "1" : "Z_" + std::to_string(n);
    case GroupTag::ZxZn: return "ZxZ_" + std::to_string(n);
    case GroupTag::FreeProduct: return "Z_" + std::to_string(p) + "*Z_" + std::to_string(q);
    case GroupTag::Braid3: return "B_3";
    case GroupTag::General: break;
  }
  std::string s = "G(" + std::to_string(p) + ";" + std::to_string(q);
  if (r) s += ";" + std::to_string(*r);
  return s + ")";
}

GroupClass classify_Gpq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("G(p;q) needs p, q >= 1");
  GroupClass c;
  c.p = p;
  c.q = q;
  c.abelianization = abelianize(present_Gpq(p, q));
  if (p == 1 || q == 1) {
    c.tag = GroupTag::Z;
    c.abelian = true;
  } else if (p == 2 && q == 2) {
    c.tag = GroupTag::ZxZ;
    c.abelian = true;
  } else if ((p == 3 && q == 2) || (p == 2 && q == 3)) {
    c.tag = GroupTag::Braid3;
    c.notes.push_back("nonabelian; isomorphic to the braid group on 3 strings (annotation, not certified)");
  } else {
    c.tag = GroupTag::General;
    c.notes.push_back("nonabelian");
  }
  return c;
}

GroupClass classify_Gpqr(int p, int q, int r) {
  if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("G(p;q;r) needs p, q, r >= 1");
  GroupClass c;
  c.p = p;
  c.q = q;
  c.r = r;
  c.abelianization = abelianize(present_Gpqr(p, q, r));
  const int g = std::gcd(p, q);
  if (p == 1) {
    c.tag = GroupTag::CyclicFinite;
    c.n = r;
    c.abelian = true;
  } else if (g == 1 && r == q) {
    c.tag = GroupTag::FreeProduct;
    c.abelian = q == 1;
    if (q == 1) c.notes.push_back("Z_" + std::to_string(p) + "*Z_1 is cyclic of order " + std::to_string(p));
  } else if (g == 1 && std::gcd(q, r) == 1) {
    c.tag = GroupTag::CyclicFinite;
    c.n = static_cast<std::int64_t>(p) * r;
    c.abelian = true;
  } else if (p == 2 && g == 2 && std::gcd(q / 2, r) == 1) {
    c.tag = GroupTag::ZxZn;
    c.n = r;
    c.abelian = true;
  } else {
    c.tag = GroupTag::General;
    c.notes.push_back("nonabelian");
    if (p == 3 && q == 2 && r % 2 == 0)
      c.notes.push_back("central extension 0 -> Z_" + std::to_string(r / 2) +
                        " -> G(3;2;" + std::to_string(r) + ") -> Z_3*Z_2 -> 0, Z_" + std::to_string(r / 2) +
                        " generated by w^2 (annotation, not certified)");
  }
  return c;
}

bool verify_prop26(int p, int q, int k, std::int64_t max_cosets) {
  if (p < 1 || q < 1 || k < 0 || k >= q) throw std::invalid_argument("verify_prop26: need p, q >= 1 and 0 <= k < q");
  // w^-1 * a_k a_{k-1} ... a_{k-p+1}
  Word rel{-omega_letter()};
  for (int t = 0; t < p; ++t) rel.push_back(a_letter((((k - t) % q) + q) % q));
  rel = free_reduce(rel);
  Word lhs{omega_letter()};
  Word rhs(rel.begin() + 1, rel.end());

  for (int r = 1; r <= 3; ++r) {
    CosetResult res = coset_enumerate(present_Gpqr(p, q, r), max_cosets);
    if (!res.closed) continue;
    // Regular representation: equal elements send the base coset to the same coset.
    if (res.table.trace(0, lhs) != res.table.trace(0, rhs)) return false;
  }
  Presentation base = present_Gpq(p, q);
  Presentation extended = base;
  extended.relators.push_back(rel);
  return abelianize(base) == abelianize(extended);
}

}  // namespace joinpi
