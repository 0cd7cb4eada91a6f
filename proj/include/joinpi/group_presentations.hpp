#pragma once

// Finite presentations of the groups
//   G(p;q)   = < w, a_k | w = a_{p-1}...a_0, a_{k+q} = a_k, a_{k+p} = w a_k w^-1 >
//   G(p;q;r) = G(p;q) / << w^r >>
// truncated to the transversal a_0..a_{q-1}, plus their classification,
// abelianization and Todd-Coxeter coset enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "joinpi/rational.hpp"

namespace joinpi {

// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  // "< w, a0, a1 | w^-1*a0*a1*a0, ... >"
  std::string to_string() const;
  std::string word_to_string(const Word& w) const;
};

// Generator 0 is w, generator k+1 is a_k.
inline int omega_letter() { return 1; }
inline int a_letter(int k) { return k + 2; }

Presentation present_Gpq(int p, int q);
Presentation present_Gpqr(int p, int q, int r);
// Several periodicity relations at once: indices are reduced modulo
// lcm(periods) and each a_{k+q_i} = a_k is kept as a relator.
Presentation present_G_periods(int p, const std::vector<int>& periods);

struct PeriodNormalization {
  int p = 1;
  int q0 = 1;
};
PeriodNormalization normalize_periods(int p, const std::vector<int>& periods);

struct InvariantFactors {
  int free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each dividing the next

  std::string to_string() const;  // "Z^2 + Z_6", "0"
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

// Invariant factors of an integer matrix (rows = relations).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);
InvariantFactors abelianize(const Presentation& pres);

// Closed form used as an independent cross-check:
// H1(G(p;q;r)) = Z^{g-1} + Z_{rp/g}, H1(G(p;q)) = Z^g, g = gcd(p, q).
InvariantFactors abelianization_closed_form(int p, int q, std::optional<int> r);

struct CosetTable {
  int generator_count = 0;
  // rows[c][2x] = c.x, rows[c][2x+1] = c.x^-1; cosets 0-based, coset 0 = H.
  std::vector<std::vector<int>> rows;

  int act(int coset, int letter) const;
  int trace(int coset, const Word& w) const;
};

struct CosetResult {
  bool closed = false;  // false: overflow at max_cosets
  std::int64_t order = 0;
  std::int64_t cosets_defined = 0;
  CosetTable table;  // filled when closed
};

inline constexpr std::int64_t kDefaultMaxCosets = 1000000;

// HLT with lookahead over the trivial subgroup.
CosetResult coset_enumerate(const Presentation& pres, std::int64_t max_cosets = kDefaultMaxCosets);

enum class GroupTag { Z, ZxZ, CyclicFinite, ZxZn, FreeProduct, Braid3, General };

std::string to_string(GroupTag t);

struct GroupClass {
  GroupTag tag = GroupTag::General;
  int p = 1;
  int q = 1;
  std::optional<int> r;
  std::int64_t n = 0;  // order for CyclicFinite, r for ZxZn
  bool abelian = false;
  InvariantFactors abelianization;
  std::vector<std::string> notes;

  // Order predicted by the classification when it is finite.
  std::optional<std::int64_t> predicted_order() const;
  std::string summary() const;  // "Z", "Z_6", "ZxZ_3", "Z_5*Z_3", "G(3;2)"
};

GroupClass classify_Gpq(int p, int q);
GroupClass classify_Gpqr(int p, int q, int r);

// w = a_k a_{k-1} ... a_{k-p+1} in G(p;q), checked in the finite quotients
// G(p;q;r), r = 1,2,3 (those that close within max_cosets) and on the
// abelianization.
bool verify_prop26(int p, int q, int k, std::int64_t max_cosets = 20000);

}  // namespace joinpi
