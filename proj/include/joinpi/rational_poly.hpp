#pragma once

// Exact univariate polynomial arithmetic over Q: dense and factored forms,
// gcd, resultants, Sturm sequences and real-root isolation.

#include <string>
#include <utility>
#include <vector>

#include "joinpi/rational.hpp"

namespace joinpi {

class DensePoly {
 public:
  DensePoly() = default;
  // Coefficients lowest degree first; trailing zeros are trimmed.
  explicit DensePoly(std::vector<Rational> coefficients);

  static DensePoly constant(const Rational& c);
  static DensePoly monomial(const Rational& c, int degree);
  // x - r
  static DensePoly linear_factor(const Rational& root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  DensePoly operator-() const;
  DensePoly& operator+=(const DensePoly& o);
  DensePoly& operator-=(const DensePoly& o);
  DensePoly& operator*=(const DensePoly& o);
  DensePoly& operator*=(const Rational& c);

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const DensePoly& b) { return a *= b; }
  friend DensePoly operator*(DensePoly a, const Rational& c) { return a *= c; }
  friend DensePoly operator*(const Rational& c, DensePoly a) { return a *= c; }
  friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

  DensePoly monic() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};

DivMod divmod(const DensePoly& a, const DensePoly& b);
// Exact division; throws if b does not divide a.
DensePoly exact_quotient(const DensePoly& a, const DensePoly& b);

DensePoly derivative(const DensePoly& p);
// Monic gcd; gcd(0, 0) is rejected.
DensePoly poly_gcd(const DensePoly& p, const DensePoly& q);
// Res(p, q) = lc(p)^deg(q) * prod q(roots of p), i.e. the determinant of the
// Sylvester matrix with coefficient rows written highest degree first.
Rational resultant(const DensePoly& p, const DensePoly& q);
// Monic square-free part p / gcd(p, p').
DensePoly square_free_part(const DensePoly& p);
// Yun decomposition: entry k-1 is the monic product of the irreducible factors
// of multiplicity exactly k. Trailing entries may be constant 1.
std::vector<DensePoly> square_free_decomposition(const DensePoly& p);

// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Range enclosure of p over [lo, hi] (interval Horner scheme).
Interval evaluate(const DensePoly& p, const Interval& x);

// Root of a polynomial. Either exact (lo == hi) or an open bracket (lo, hi)
// that contains exactly one distinct root, with the square-free part
// nonzero and of opposite signs at the endpoints.
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  double approx() const { return to_double(mid()); }
};

class SturmSequence {
 public:
  // p must be square-free and nonzero.
  explicit SturmSequence(const DensePoly& p);

  // Number of distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  int variations(const Rational& x) const;
  const DensePoly& poly() const { return chain_.front(); }

 private:
  std::vector<DensePoly> chain_;
};

// Power of two bounding the absolute value of every complex root.
Rational root_bound(const DensePoly& p);

// All real roots of p with multiplicities, sorted ascending in disjoint brackets.
std::vector<IsolatedRoot> isolate_real_roots(const DensePoly& p);
// Shrink the bracket of r (a root of p) to width <= width.
IsolatedRoot refine_root(const DensePoly& p, const IsolatedRoot& r, const Rational& width);
// Same, given the square-free part directly (avoids recomputing it).
IsolatedRoot refine_simple_root(const DensePoly& squarefree, const IsolatedRoot& r,
                                const Rational& width);
// Halve the bracket once.
IsolatedRoot bisect_once(const DensePoly& squarefree, const IsolatedRoot& r);

// A real polynomial given as scale * prod (x - root)^multiplicity with
// rational data. Roots strictly increasing.
struct RootFactor {
  Rational root;
  int multiplicity = 1;
  friend bool operator==(const RootFactor&, const RootFactor&) = default;
};

class FactoredPoly {
 public:
  FactoredPoly() = default;
  // Sorts the factors; throws JoinpiError on zero scale, duplicate roots,
  // non-positive multiplicities or an empty factor list.
  FactoredPoly(Rational scale, std::vector<RootFactor> factors);

  const Rational& scale() const { return scale_; }
  const std::vector<RootFactor>& factors() const { return factors_; }
  int degree() const;
  std::size_t root_count() const { return factors_.size(); }
  std::vector<int> multiplicities() const;

  Rational operator()(const Rational& x) const;
  std::string to_string(char var) const;

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

 private:
  Rational scale_{1};
  std::vector<RootFactor> factors_;
};

DensePoly expand(const FactoredPoly& p);

}  // namespace joinpi
