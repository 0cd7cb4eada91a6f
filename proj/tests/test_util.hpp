#pragma once

#include <random>
#include <string>
#include <vector>

#include "joinpi/curve_document.hpp"
#include "joinpi/rational_poly.hpp"

namespace joinpi::testing {

inline std::string data_path(const std::string& name) { return std::string(JOINPI_TEST_DATA) + "/" + name; }

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

inline DensePoly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return DensePoly(c);
}

// Determinant by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Sylvester matrix with rows written highest degree first.
inline Rational sylvester_resultant(const DensePoly& p, const DensePoly& q) {
  const int m = p.degree(), n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(n - k);
  return determinant(s);
}

// Naive product of the factors, one linear term at a time.
inline std::vector<Rational> brute_expand(const FactoredPoly& p) {
  std::vector<Rational> c{p.scale()};
  for (const auto& f : p.factors())
    for (int k = 0; k < f.multiplicity; ++k) {
      std::vector<Rational> next(c.size() + 1, Rational(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= c[i] * f.root;
      }
      c = next;
    }
  return c;
}

// Random exact-mode factored polynomial with `roots` distinct small rational
// roots and total degree <= max_degree.
inline FactoredPoly random_factored(std::mt19937& rng, int roots, int max_degree) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 3), sc(1, 5), sgn(0, 1);
  std::vector<Rational> rs;
  while (static_cast<int>(rs.size()) < roots) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
  }
  std::vector<RootFactor> fs;
  int budget = max_degree - roots;
  std::uniform_int_distribution<int> extra(0, 2);
  for (const auto& r : rs) {
    int e = std::min(budget, extra(rng));
    budget -= e;
    fs.push_back({r, 1 + e});
  }
  Rational scale(sc(rng) * (sgn(rng) ? 1 : -1));
  return FactoredPoly(scale, fs);
}

}  // namespace joinpi::testing
