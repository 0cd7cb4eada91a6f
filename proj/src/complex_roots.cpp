#include "joinpi/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace joinpi {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& coeffs, Complex z) {
  Complex p = 0.0, dp = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in, int max_iterations) {
  std::vector<Complex> c = coeffs_in;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("polynomial_roots: zero polynomial");
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> z;
  if (n == 0) return z;
  // Roots at zero are split off exactly.
  int zeros = 0;
  while (zeros < n && c[static_cast<std::size_t>(zeros)] == 0.0) ++zeros;
  std::vector<Complex> p(c.begin() + zeros, c.end());
  const int m = n - zeros;
  for (auto& v : p) v /= c.back();

  // Initial guesses on a circle of radius close to the geometric mean of
  // the root moduli, with an irrational angular offset.
  double radius = std::pow(std::abs(p[0]), 1.0 / std::max(m, 1));
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
  for (int k = 0; k < m; ++k) z.push_back(std::polar(radius, 2.0 * M_PI * k / m + 0.4));

  std::vector<bool> done(static_cast<std::size_t>(m), false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all = true;
    for (int k = 0; k < m; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      auto [val, der] = horner_with_derivative(p, z[static_cast<std::size_t>(k)]);
      if (val == 0.0) {
        done[static_cast<std::size_t>(k)] = true;
        continue;
      }
      Complex ratio = val / der;
      Complex sum = 0.0;
      for (int j = 0; j < m; ++j)
        if (j != k) sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[static_cast<std::size_t>(k)] -= w;
      if (std::abs(w) <= 1e-15 * std::max(1.0, std::abs(z[static_cast<std::size_t>(k)])))
        done[static_cast<std::size_t>(k)] = true;
      else
        all = false;
    }
    if (all) break;
  }
  // Newton polish on the original coefficients.
  for (auto& r : z)
    for (int it = 0; it < 3; ++it) {
      auto [val, der] = horner_with_derivative(c, r);
      if (der == 0.0) break;
      Complex step = val / der;
      if (!(std::abs(step) < 1e-6 * std::max(1.0, std::abs(r)))) break;
      r -= step;
    }
  for (int k = 0; k < zeros; ++k) z.push_back(0.0);
  return z;
}

}  // namespace joinpi
