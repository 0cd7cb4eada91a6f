#pragma once

// Join-type curves f(y) = g(x) with real factored data, their exponent and
// critical-point structure, and exact detection of critical-value
// coincidences. Three input modes are supported:
//   exact    - rational roots and scales; coincidences are decided exactly.
//   declared - rational/decimal data plus user-asserted coincidences, which
//              are checked numerically at relative tolerance 1e-9.
//   pattern  - no coefficients; exponents, leading signs and an ordering of
//              the critical values (signed ranks) only.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "joinpi/rational_poly.hpp"

namespace joinpi {

enum class InputMode { exact, declared, pattern };

std::string to_string(InputMode mode);
InputMode parse_input_mode(const std::string& s);

struct ExponentData {
  std::vector<int> nu;
  std::vector<int> lambda;
  int nu0 = 0;
  int lambda0 = 0;
  int d = 0;
  int dprime = 0;
};

ExponentData exponent_data(const std::vector<int>& nu, const std::vector<int>& lambda);

// A real algebraic number: a square-free rational polynomial plus an
// isolating bracket. Exact rationals are stored with lo == hi.
class AlgebraicValue {
 public:
  AlgebraicValue() = default;
  // `defining` is made square-free; (lo, hi) must isolate one of its roots.
  AlgebraicValue(const DensePoly& defining, Rational lo, Rational hi);
  static AlgebraicValue rational(const Rational& v);

  const DensePoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }
  // Certified: the bracket never straddles zero.
  int sign() const { return sign_; }
  double approx() const;

  AlgebraicValue refined(const Rational& width) const;
  // Cuts the bracket in half.
  AlgebraicValue bisected() const;

 private:
  void normalize();
  DensePoly defining_ = DensePoly::constant(Rational(1));
  Rational lo_;
  Rational hi_;
  int sign_ = 0;
};

// -1, 0, +1. Equality is decided through the gcd of the defining polynomials.
int compare(const AlgebraicValue& a, const AlgebraicValue& b);

// Relative distance |a-b| / max(|a|,|b|) estimated from brackets refined to
// `bits` bits.
double relative_gap(const AlgebraicValue& a, const AlgebraicValue& b, int bits = 80);

// A critical point (strictly between consecutive roots) and its value.
struct CriticalPoint {
  IsolatedRoot location;
  AlgebraicValue value;
};

struct CriticalLocus {
  std::vector<CriticalPoint> gammas;  // m-1 points of g, gamma_i in (alpha_i, alpha_{i+1})
  std::vector<CriticalPoint> deltas;  // l-1 points of f, delta_j in (beta_j, beta_{j+1})
  DensePoly g_reduced_derivative;     // g' / prod (x - alpha_i)^(lambda_i - 1)
  DensePoly f_reduced_derivative;
  DensePoly g_critical_values;        // critical_value_poly(g)
  DensePoly f_critical_values;
};

// Square-free monic polynomial in t whose roots are the critical values of p:
// the square-free part of Res_y(p(y) - t, p'(y)).
DensePoly critical_value_poly(const FactoredPoly& p);
DensePoly critical_value_poly(const DensePoly& p);

// Critical points of p lying strictly between consecutive roots, with values.
// Brackets are refined to `width`.
std::vector<CriticalPoint> interior_critical_points(const FactoredPoly& p, const Rational& width);

// Integer Chebyshev polynomial T_d.
DensePoly chebyshev(int d);

// Sign of a product form scale*prod (z - r_k)^e_k on the k-th gap between
// consecutive roots (1-based): sign(scale) * (-1)^(sum of exponents to the right).
int interval_sign(int scale_sign, const std::vector<int>& exponents, std::size_t gap);

struct PatternSpec {
  std::vector<int> nu;
  std::vector<int> lambda;
  int sign_a = 1;
  int sign_b = 1;
  // Signed ranks of f(delta_1..delta_{l-1}) and g(gamma_1..gamma_{m-1}); the
  // total preorder on {0} and these values is the order of the ranks, and
  // equal ranks are declared equal values.
  std::vector<Rational> f_values;
  std::vector<Rational> g_values;
};

// Throws JoinpiError(sign_constraint) naming the offending index.
void validate_pattern(const PatternSpec& p);

using IndexPair = std::pair<int, int>;  // (i, j): g(gamma_i) = f(delta_j), 1-based

class JoinTypeCurve {
 public:
  static JoinTypeCurve exact(FactoredPoly f, FactoredPoly g);
  static JoinTypeCurve declared(FactoredPoly f, FactoredPoly g, std::vector<IndexPair> coincidences);
  static JoinTypeCurve pattern(PatternSpec spec);

  InputMode mode() const { return mode_; }
  bool has_coefficients() const { return mode_ != InputMode::pattern; }
  // Only in exact / declared mode.
  const FactoredPoly& f() const;
  const FactoredPoly& g() const;
  const PatternSpec& pattern_spec() const;
  const std::vector<IndexPair>& declared_coincidences() const { return declared_; }

  std::vector<int> nu() const;
  std::vector<int> lambda() const;
  int ell() const { return static_cast<int>(nu().size()); }
  int m() const { return static_cast<int>(lambda().size()); }
  int sign_a() const;
  int sign_b() const;

  // Exchange the roles of f and g (and of x and y).
  JoinTypeCurve transposed() const;

 private:
  InputMode mode_ = InputMode::exact;
  std::optional<FactoredPoly> f_;
  std::optional<FactoredPoly> g_;
  std::optional<PatternSpec> pattern_;
  std::vector<IndexPair> declared_;
};

// Pattern-mode constructor; validates the sign constraints first.
JoinTypeCurve curve_from_pattern(const PatternSpec& p);

ExponentData exponent_data(const JoinTypeCurve& c);
ExponentData exponent_data(const PatternSpec& p);

// Exact / declared mode only.
CriticalLocus critical_locus(const JoinTypeCurve& c, const Rational& width = pow2(-64));

struct CoincidenceSet {
  std::vector<IndexPair> pairs;                // sorted
  std::vector<AlgebraicValue> shared_values;   // one per pair; empty in pattern mode
  std::vector<std::string> warnings;
};

// Exact mode: gcd of the critical-value polynomials plus bracket matching.
// Declared mode: the asserted pairs, checked at relative tolerance 1e-9.
// Pattern mode: pairs with equal ranks.
CoincidenceSet detect_coincidences(const JoinTypeCurve& c, const Rational& width = pow2(-64));
CoincidenceSet detect_coincidences(const JoinTypeCurve& c, const CriticalLocus& locus);

inline constexpr double kDeclaredTolerance = 1e-9;

// One distinct element of V_crit = {0} U {g(gamma_i)} U {f(delta_j)}.
struct ValueClass {
  int sign = 0;
  double approx = 0.0;
  std::optional<AlgebraicValue> value;  // exact / declared
  std::optional<Rational> rank;         // pattern
  bool in_f = false;  // critical value of f (0 counts when some nu_j >= 2)
  bool in_g = false;
  std::vector<int> deltas;  // 1-based j with f(delta_j) in this class
  std::vector<int> gammas;  // 1-based i with g(gamma_i) in this class
};

struct ValueOrder {
  std::vector<ValueClass> classes;  // strictly increasing
  std::vector<int> delta_class;     // class index of f(delta_j), j = 1..l-1
  std::vector<int> gamma_class;     // class index of g(gamma_i), i = 1..m-1
  int zero_class = 0;
};

// Everything downstream modules need, computed once per curve.
struct CurveAnalysis {
  JoinTypeCurve curve;
  ExponentData exponents;
  std::optional<CriticalLocus> locus;
  CoincidenceSet coincidences;
  ValueOrder values;
  int sign_a = 1;
  int sign_b = 1;
  std::vector<std::string> warnings;
};

CurveAnalysis analyze_curve(const JoinTypeCurve& c, const Rational& width = pow2(-64));

}  // namespace joinpi
