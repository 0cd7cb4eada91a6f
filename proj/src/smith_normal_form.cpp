#include <algorithm>
#include <numeric>

#include "joinpi/group_presentations.hpp"

namespace joinpi {

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer qt = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= qt * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer qt = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= qt * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

InvariantFactors abelianize(const Presentation& pres) {
  const std::size_t n = pres.generator_count();
  std::vector<std::vector<Integer>> m;
  for (const auto& r : pres.relators) {
    std::vector<Integer> row(n, 0);
    for (int x : r) row[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](const Integer& v) { return v != 0; })) m.push_back(std::move(row));
  }
  InvariantFactors out;
  auto diag = smith_diagonal(std::move(m));
  out.free_rank = static_cast<int>(n - diag.size());
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

InvariantFactors abelianization_closed_form(int p, int q, std::optional<int> r) {
  int g = std::gcd(p, q);
  InvariantFactors out;
  if (!r) {
    out.free_rank = g;
    return out;
  }
  out.free_rank = g - 1;
  Integer t = Integer(*r) * p / g;
  if (t > 1) out.torsion.push_back(t);
  return out;
}

std::string InvariantFactors::to_string() const {
  std::string s;
  if (free_rank == 1) s = "Z";
  if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z_") + t.get_str();
  return s.empty() ? "0" : s;
}

}  // namespace joinpi
