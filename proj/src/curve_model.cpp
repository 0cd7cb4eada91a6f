#include "joinpi/curve_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace joinpi {

std::string to_string(InputMode mode) {
  switch (mode) {
    case InputMode::exact: return "exact";
    case InputMode::declared: return "declared";
    case InputMode::pattern: return "pattern";
  }
  return "exact";
}

InputMode parse_input_mode(const std::string& s) {
  if (s == "exact") return InputMode::exact;
  if (s == "declared") return InputMode::declared;
  if (s == "pattern") return InputMode::pattern;
  throw JoinpiError(ErrorCode::invalid_input, "unknown mode '" + s + "' (expected exact|declared|pattern)");
}

ExponentData exponent_data(const std::vector<int>& nu, const std::vector<int>& lambda) {
  if (nu.empty() || lambda.empty()) throw JoinpiError(ErrorCode::invalid_input, "f and g need at least one root each");
  ExponentData e;
  e.nu = nu;
  e.lambda = lambda;
  for (int v : nu) {
    if (v < 1) throw JoinpiError(ErrorCode::invalid_input, "exponents must be positive");
    e.nu0 = std::gcd(e.nu0, v);
    e.d += v;
  }
  for (int v : lambda) {
    if (v < 1) throw JoinpiError(ErrorCode::invalid_input, "exponents must be positive");
    e.lambda0 = std::gcd(e.lambda0, v);
    e.dprime += v;
  }
  return e;
}

// ---------------------------------------------------------------------------
// AlgebraicValue

namespace {

// Moves the endpoints of an open isolating bracket off the roots of s.
void tighten(const DensePoly& s, Rational& lo, Rational& hi) {
  if (lo == hi) return;
  SturmSequence sturm(s);
  while (s.sign_at(lo) == 0) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(lo, mid) == 1) {
      if (s.sign_at(mid) == 0) {
        lo = hi = mid;
        return;
      }
      hi = mid;
    } else {
      lo = mid;
    }
  }
  while (s.sign_at(hi) == 0) {
    Rational mid = (lo + hi) / 2;
    // Root strictly inside (lo, hi); hi itself is a different root.
    if (sturm.count(lo, mid) == 1) {
      if (s.sign_at(mid) == 0) {
        lo = hi = mid;
        return;
      }
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace

AlgebraicValue::AlgebraicValue(const DensePoly& defining, Rational lo, Rational hi)
    : defining_(square_free_part(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("AlgebraicValue: empty bracket");
  if (defining_.degree() < 1) throw std::invalid_argument("AlgebraicValue: constant defining polynomial");
  int inside = defining_.sign_at(lo_) == 0 ? 1 : 0;
  if (lo_ != hi_) inside += SturmSequence(defining_).count(lo_, hi_);
  if (inside != 1) throw std::invalid_argument("AlgebraicValue: bracket must hold exactly one root");
  normalize();
}

AlgebraicValue AlgebraicValue::rational(const Rational& v) {
  AlgebraicValue a;
  a.defining_ = DensePoly::linear_factor(v);
  a.lo_ = a.hi_ = v;
  a.sign_ = joinpi::sign(v);
  return a;
}

void AlgebraicValue::normalize() {
  if (lo_ != hi_) tighten(defining_, lo_, hi_);
  if (lo_ == hi_) {
    sign_ = joinpi::sign(lo_);
    return;
  }
  if (lo_ >= 0) {
    sign_ = 1;
    return;
  }
  if (hi_ <= 0) {
    sign_ = -1;
    return;
  }
  int s0 = defining_.sign_at(Rational(0));
  if (s0 == 0) {
    lo_ = hi_ = 0;
    sign_ = 0;
    return;
  }
  if (defining_.sign_at(lo_) != s0) {
    hi_ = 0;
    sign_ = -1;
  } else {
    lo_ = 0;
    sign_ = 1;
  }
}

double AlgebraicValue::approx() const {
  if (is_exact()) return lo_.get_d();
  Rational scale = std::max(Rational(1), Rational(abs(lo_)));
  return refined(scale * pow2(-60)).lo().get_d();
}

AlgebraicValue AlgebraicValue::bisected() const {
  if (is_exact()) return *this;
  AlgebraicValue out = *this;
  IsolatedRoot r{lo_, hi_, 1};
  r = bisect_once(defining_, r);
  out.lo_ = r.lo;
  out.hi_ = r.hi;
  return out;
}

AlgebraicValue AlgebraicValue::refined(const Rational& width) const {
  AlgebraicValue out = *this;
  IsolatedRoot r = refine_simple_root(defining_, IsolatedRoot{lo_, hi_, 1}, width);
  out.lo_ = r.lo;
  out.hi_ = r.hi;
  return out;
}

namespace {

bool disjoint(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_exact() && b.is_exact()) return a.lo() != b.lo();
  if (a.is_exact()) return a.lo() <= b.lo() || a.lo() >= b.hi();
  if (b.is_exact()) return b.lo() <= a.lo() || b.lo() >= a.hi();
  return a.hi() <= b.lo() || b.hi() <= a.lo();
}

bool provably_equal(const AlgebraicValue& a, const AlgebraicValue& b) {
  if (a.is_exact() && b.is_exact()) return a.lo() == b.lo();
  Rational lo = std::max(a.lo(), b.lo());
  Rational hi = std::min(a.hi(), b.hi());
  if (hi < lo) return false;
  DensePoly h = a.defining() == b.defining() ? a.defining() : poly_gcd(a.defining(), b.defining());
  if (h.degree() < 1) return false;
  if (h.sign_at(lo) == 0) return true;
  if (lo == hi) return false;
  return SturmSequence(h).count(lo, hi) > 0;
}

}  // namespace

int compare(const AlgebraicValue& a_in, const AlgebraicValue& b_in) {
  if (a_in.is_exact() && b_in.is_exact()) return cmp(a_in.lo(), b_in.lo()) < 0 ? -1 : (a_in.lo() == b_in.lo() ? 0 : 1);
  if (a_in.sign() != b_in.sign()) return a_in.sign() < b_in.sign() ? -1 : 1;
  if (provably_equal(a_in, b_in)) return 0;
  AlgebraicValue a = a_in, b = b_in;
  while (!disjoint(a, b)) {
    if (a.hi() - a.lo() >= b.hi() - b.lo())
      a = a.bisected();
    else
      b = b.bisected();
  }
  return a.lo() < b.lo() ? -1 : 1;
}

double relative_gap(const AlgebraicValue& a, const AlgebraicValue& b, int bits) {
  Rational w = pow2(-bits);
  Rational scale = std::max({Rational(1), Rational(abs(a.lo())), Rational(abs(b.lo()))});
  AlgebraicValue ar = a.refined(w * scale), br = b.refined(w * scale);
  Rational va = (ar.lo() + ar.hi()) / 2, vb = (br.lo() + br.hi()) / 2;
  Rational denom = std::max(Rational(abs(va)), Rational(abs(vb)));
  if (denom == 0) return 0.0;
  return Rational(abs(va - vb) / denom).get_d();
}

// ---------------------------------------------------------------------------
// Critical points and values

namespace {

// Newton interpolation through (k, values[k]), k = 0..n-1.
DensePoly interpolate_at_naturals(const std::vector<Rational>& values) {
  std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long>(level));
  DensePoly acc = DensePoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc *= DensePoly::linear_factor(Rational(static_cast<long>(k)));
    acc += DensePoly::constant(dd[k]);
  }
  return acc;
}

}  // namespace

DensePoly critical_value_poly(const FactoredPoly& p) { return critical_value_poly(expand(p)); }

DensePoly critical_value_poly(const DensePoly& P) {
  if (P.degree() < 2) return DensePoly::constant(Rational(1));
  DensePoly dP = derivative(P);
  // Res_y(P - t, P') has degree deg P' in t.
  std::vector<Rational> samples;
  for (int k = 0; k <= dP.degree(); ++k) samples.push_back(resultant(P - DensePoly::constant(Rational(k)), dP));
  DensePoly R = interpolate_at_naturals(samples);
  return square_free_part(R).monic();
}

std::vector<CriticalPoint> interior_critical_points(const FactoredPoly& p, const Rational& width) {
  std::vector<CriticalPoint> out;
  const auto& fac = p.factors();
  if (fac.size() < 2) return out;
  DensePoly P = expand(p);
  DensePoly divisor = DensePoly::constant(Rational(1));
  for (const auto& f : fac)
    for (int k = 1; k < f.multiplicity; ++k) divisor *= DensePoly::linear_factor(f.root);
  DensePoly q = exact_quotient(derivative(P), divisor);
  auto roots = isolate_real_roots(q);
  if (roots.size() != fac.size() - 1)
    throw std::logic_error("reduced derivative has an unexpected number of real roots");
  DensePoly qs = square_free_part(q);
  DensePoly values_poly = critical_value_poly(p);
  SturmSequence value_sturm(values_poly);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    IsolatedRoot r = roots[k];
    if (r.multiplicity != 1) throw std::logic_error("interior critical point is not simple");
    const Rational& left = fac[k].root;
    const Rational& right = fac[k + 1].root;
    while (!r.is_exact() && (r.lo < left || r.hi > right || r.width() > width)) r = bisect_once(qs, r);
    if (r.lo < left || r.hi > right) throw std::logic_error("critical point escaped its gap");
    CriticalPoint cp;
    cp.location = r;
    if (r.is_exact()) {
      cp.value = AlgebraicValue::rational(P(r.lo));
    } else {
      for (int iter = 0;; ++iter) {
        Interval img = evaluate(P, Interval{r.lo, r.hi});
        if (img.lo < img.hi && values_poly.sign_at(img.lo) != 0 && values_poly.sign_at(img.hi) != 0 &&
            value_sturm.count(img.lo, img.hi) == 1) {
          cp.value = AlgebraicValue(values_poly, img.lo, img.hi);
          break;
        }
        if (iter > 2000) throw std::logic_error("critical value bracket did not converge");
        r = bisect_once(qs, r);
        if (r.is_exact()) {
          cp.value = AlgebraicValue::rational(P(r.lo));
          break;
        }
      }
      cp.location = r;
      cp.value = cp.value.refined(width);
    }
    out.push_back(std::move(cp));
  }
  return out;
}

DensePoly chebyshev(int d) {
  if (d < 0) throw std::invalid_argument("chebyshev: negative degree");
  DensePoly prev = DensePoly::constant(Rational(1));
  if (d == 0) return prev;
  DensePoly cur = DensePoly::monomial(Rational(1), 1);
  DensePoly two_z = DensePoly::monomial(Rational(2), 1);
  for (int k = 1; k < d; ++k) {
    DensePoly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int interval_sign(int scale_sign, const std::vector<int>& exponents, std::size_t gap) {
  int right = 0;
  for (std::size_t k = gap; k < exponents.size(); ++k) right += exponents[k];
  return (right % 2 == 0) ? scale_sign : -scale_sign;
}

// ---------------------------------------------------------------------------
// Patterns and curves

void validate_pattern(const PatternSpec& p) {
  exponent_data(p.nu, p.lambda);
  if (p.sign_a != 1 && p.sign_a != -1) throw JoinpiError(ErrorCode::invalid_input, "sign_a must be +1 or -1");
  if (p.sign_b != 1 && p.sign_b != -1) throw JoinpiError(ErrorCode::invalid_input, "sign_b must be +1 or -1");
  if (p.f_values.size() + 1 != p.nu.size())
    throw JoinpiError(ErrorCode::invalid_input, "pattern needs exactly l-1 = " + std::to_string(p.nu.size() - 1) +
                                                    " f-critical values");
  if (p.g_values.size() + 1 != p.lambda.size())
    throw JoinpiError(ErrorCode::invalid_input, "pattern needs exactly m-1 = " + std::to_string(p.lambda.size() - 1) +
                                                    " g-critical values");
  for (std::size_t j = 0; j < p.f_values.size(); ++j) {
    int expected = interval_sign(p.sign_a, p.nu, j + 1);
    if (sign(p.f_values[j]) != expected)
      throw JoinpiError(ErrorCode::sign_constraint,
                        "f(delta_" + std::to_string(j + 1) + ") must have sign " + (expected > 0 ? "+" : "-") +
                            " (sign_a * (-1)^(sum of nu_k for k > " + std::to_string(j + 1) + "))");
  }
  for (std::size_t i = 0; i < p.g_values.size(); ++i) {
    int expected = interval_sign(p.sign_b, p.lambda, i + 1);
    if (sign(p.g_values[i]) != expected)
      throw JoinpiError(ErrorCode::sign_constraint,
                        "g(gamma_" + std::to_string(i + 1) + ") must have sign " + (expected > 0 ? "+" : "-") +
                            " (sign_b * (-1)^(sum of lambda_k for k > " + std::to_string(i + 1) + "))");
  }
}

JoinTypeCurve JoinTypeCurve::exact(FactoredPoly f, FactoredPoly g) {
  JoinTypeCurve c;
  c.mode_ = InputMode::exact;
  c.f_ = std::move(f);
  c.g_ = std::move(g);
  return c;
}

JoinTypeCurve JoinTypeCurve::declared(FactoredPoly f, FactoredPoly g, std::vector<IndexPair> coincidences) {
  JoinTypeCurve c;
  c.mode_ = InputMode::declared;
  int m = static_cast<int>(g.root_count()), l = static_cast<int>(f.root_count());
  for (const auto& [i, j] : coincidences) {
    if (i < 1 || i > m - 1 || j < 1 || j > l - 1)
      throw JoinpiError(ErrorCode::invalid_input, "declared coincidence (" + std::to_string(i) + "," +
                                                      std::to_string(j) + ") is out of range");
  }
  std::sort(coincidences.begin(), coincidences.end());
  coincidences.erase(std::unique(coincidences.begin(), coincidences.end()), coincidences.end());
  c.f_ = std::move(f);
  c.g_ = std::move(g);
  c.declared_ = std::move(coincidences);
  return c;
}

JoinTypeCurve JoinTypeCurve::pattern(PatternSpec spec) {
  validate_pattern(spec);
  JoinTypeCurve c;
  c.mode_ = InputMode::pattern;
  c.pattern_ = std::move(spec);
  return c;
}

JoinTypeCurve curve_from_pattern(const PatternSpec& p) { return JoinTypeCurve::pattern(p); }

const FactoredPoly& JoinTypeCurve::f() const {
  if (!f_) throw std::logic_error("pattern-mode curve has no coefficients");
  return *f_;
}

const FactoredPoly& JoinTypeCurve::g() const {
  if (!g_) throw std::logic_error("pattern-mode curve has no coefficients");
  return *g_;
}

const PatternSpec& JoinTypeCurve::pattern_spec() const {
  if (!pattern_) throw std::logic_error("curve is not in pattern mode");
  return *pattern_;
}

std::vector<int> JoinTypeCurve::nu() const { return pattern_ ? pattern_->nu : f_->multiplicities(); }
std::vector<int> JoinTypeCurve::lambda() const { return pattern_ ? pattern_->lambda : g_->multiplicities(); }
int JoinTypeCurve::sign_a() const { return pattern_ ? pattern_->sign_a : sign(f_->scale()); }
int JoinTypeCurve::sign_b() const { return pattern_ ? pattern_->sign_b : sign(g_->scale()); }

JoinTypeCurve JoinTypeCurve::transposed() const {
  JoinTypeCurve t = *this;
  std::swap(t.f_, t.g_);
  if (t.pattern_) {
    std::swap(t.pattern_->nu, t.pattern_->lambda);
    std::swap(t.pattern_->sign_a, t.pattern_->sign_b);
    std::swap(t.pattern_->f_values, t.pattern_->g_values);
  }
  for (auto& [i, j] : t.declared_) std::swap(i, j);
  std::sort(t.declared_.begin(), t.declared_.end());
  return t;
}

ExponentData exponent_data(const JoinTypeCurve& c) { return exponent_data(c.nu(), c.lambda()); }
ExponentData exponent_data(const PatternSpec& p) { return exponent_data(p.nu, p.lambda); }

CriticalLocus critical_locus(const JoinTypeCurve& c, const Rational& width) {
  CriticalLocus locus;
  locus.gammas = interior_critical_points(c.g(), width);
  locus.deltas = interior_critical_points(c.f(), width);
  auto reduced = [](const FactoredPoly& p) {
    DensePoly divisor = DensePoly::constant(Rational(1));
    for (const auto& f : p.factors())
      for (int k = 1; k < f.multiplicity; ++k) divisor *= DensePoly::linear_factor(f.root);
    return exact_quotient(derivative(expand(p)), divisor);
  };
  locus.g_reduced_derivative = reduced(c.g());
  locus.f_reduced_derivative = reduced(c.f());
  locus.g_critical_values = critical_value_poly(c.g());
  locus.f_critical_values = critical_value_poly(c.f());
  return locus;
}

// ---------------------------------------------------------------------------
// Coincidences

CoincidenceSet detect_coincidences(const JoinTypeCurve& c, const CriticalLocus& locus) {
  CoincidenceSet out;
  if (c.mode() == InputMode::pattern) throw std::logic_error("pattern curves have no critical locus");
  const auto& gammas = locus.gammas;
  const auto& deltas = locus.deltas;
  if (c.mode() == InputMode::exact) {
    DensePoly h = poly_gcd(locus.f_critical_values, locus.g_critical_values);
    if (h.degree() >= 1) {
      for (std::size_t i = 0; i < gammas.size(); ++i)
        for (std::size_t j = 0; j < deltas.size(); ++j)
          if (compare(gammas[i].value, deltas[j].value) == 0) {
            out.pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            out.shared_values.push_back(gammas[i].value);
          }
    }
    return out;
  }
  // Declared mode.
  const auto& declared = c.declared_coincidences();
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    for (std::size_t j = 0; j < deltas.size(); ++j) {
      IndexPair ij{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      bool is_declared = std::find(declared.begin(), declared.end(), ij) != declared.end();
      double gap = relative_gap(gammas[i].value, deltas[j].value);
      std::ostringstream tag;
      tag << "g(gamma_" << ij.first << ") vs f(delta_" << ij.second << ")";
      if (is_declared) {
        if (gap > kDeclaredTolerance) {
          std::ostringstream msg;
          msg << "declared coincidence " << tag.str() << " fails the numerical check: relative gap " << gap
              << " > " << kDeclaredTolerance;
          throw JoinpiError(ErrorCode::invalid_input, msg.str());
        }
        out.pairs.push_back(ij);
        out.shared_values.push_back(gammas[i].value);
      } else if (compare(gammas[i].value, deltas[j].value) == 0) {
        out.warnings.push_back("undeclared exact coincidence " + tag.str() + " added to the coincidence set");
        out.pairs.push_back(ij);
        out.shared_values.push_back(gammas[i].value);
      } else if (gap < kDeclaredTolerance) {
        std::ostringstream msg;
        msg << "undeclared near-coincidence " << tag.str() << " (relative gap " << gap << ")";
        out.warnings.push_back(msg.str());
      }
    }
  }
  return out;
}

CoincidenceSet detect_coincidences(const JoinTypeCurve& c, const Rational& width) {
  if (c.mode() == InputMode::pattern) {
    CoincidenceSet out;
    const auto& p = c.pattern_spec();
    for (std::size_t i = 0; i < p.g_values.size(); ++i)
      for (std::size_t j = 0; j < p.f_values.size(); ++j)
        if (p.g_values[i] == p.f_values[j]) out.pairs.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
  }
  return detect_coincidences(c, critical_locus(c, width));
}

// ---------------------------------------------------------------------------
// Ordered critical values

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

CurveAnalysis analyze_curve(const JoinTypeCurve& c, const Rational& width) {
  CurveAnalysis a{c, exponent_data(c), std::nullopt, {}, {}, c.sign_a(), c.sign_b(), {}};
  const int l = c.ell(), m = c.m();
  // Element 0 is zero, then f(delta_1..), then g(gamma_1..).
  const int n = 1 + (l - 1) + (m - 1);
  auto f_elem = [](int j) { return j; };               // j 1-based
  auto g_elem = [l](int i) { return l - 1 + i; };      // i 1-based
  std::vector<std::optional<AlgebraicValue>> values(static_cast<std::size_t>(n));
  std::vector<std::optional<Rational>> ranks(static_cast<std::size_t>(n));
  UnionFind uf(n);

  if (c.mode() == InputMode::pattern) {
    const auto& p = c.pattern_spec();
    ranks[0] = Rational(0);
    for (int j = 1; j < l; ++j) ranks[static_cast<std::size_t>(f_elem(j))] = p.f_values[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i < m; ++i) ranks[static_cast<std::size_t>(g_elem(i))] = p.g_values[static_cast<std::size_t>(i - 1)];
    a.coincidences = detect_coincidences(c, width);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (*ranks[static_cast<std::size_t>(x)] == *ranks[static_cast<std::size_t>(y)]) uf.unite(x, y);
  } else {
    a.locus = critical_locus(c, width);
    a.coincidences = detect_coincidences(c, *a.locus);
    values[0] = AlgebraicValue::rational(Rational(0));
    for (int j = 1; j < l; ++j) values[static_cast<std::size_t>(f_elem(j))] = a.locus->deltas[static_cast<std::size_t>(j - 1)].value;
    for (int i = 1; i < m; ++i) values[static_cast<std::size_t>(g_elem(i))] = a.locus->gammas[static_cast<std::size_t>(i - 1)].value;
    for (int x = 1; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (uf.find(x) != uf.find(y) && compare(*values[static_cast<std::size_t>(x)], *values[static_cast<std::size_t>(y)]) == 0)
          uf.unite(x, y);
    for (const auto& [i, j] : a.coincidences.pairs) uf.unite(g_elem(i), f_elem(j));
  }
  a.warnings = a.coincidences.warnings;

  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (uf.find(x) == x) reps.push_back(x);
  auto less = [&](int x, int y) {
    if (ranks[static_cast<std::size_t>(x)]) return *ranks[static_cast<std::size_t>(x)] < *ranks[static_cast<std::size_t>(y)];
    return compare(*values[static_cast<std::size_t>(x)], *values[static_cast<std::size_t>(y)]) < 0;
  };
  std::sort(reps.begin(), reps.end(), less);

  bool nu_ge2 = std::any_of(a.exponents.nu.begin(), a.exponents.nu.end(), [](int v) { return v >= 2; });
  bool lambda_ge2 = std::any_of(a.exponents.lambda.begin(), a.exponents.lambda.end(), [](int v) { return v >= 2; });
  std::vector<int> class_of_rep(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    int r = reps[k];
    class_of_rep[static_cast<std::size_t>(r)] = static_cast<int>(k);
    ValueClass vc;
    if (ranks[static_cast<std::size_t>(r)]) {
      vc.rank = ranks[static_cast<std::size_t>(r)];
      vc.sign = sign(*vc.rank);
      vc.approx = vc.rank->get_d();
    } else {
      vc.value = values[static_cast<std::size_t>(r)];
      vc.sign = vc.value->sign();
      vc.approx = vc.value->approx();
    }
    a.values.classes.push_back(std::move(vc));
  }
  a.values.zero_class = class_of_rep[static_cast<std::size_t>(uf.find(0))];
  a.values.classes[static_cast<std::size_t>(a.values.zero_class)].in_f = nu_ge2;
  a.values.classes[static_cast<std::size_t>(a.values.zero_class)].in_g = lambda_ge2;
  for (int j = 1; j < l; ++j) {
    int k = class_of_rep[static_cast<std::size_t>(uf.find(f_elem(j)))];
    a.values.delta_class.push_back(k);
    auto& vc = a.values.classes[static_cast<std::size_t>(k)];
    vc.in_f = true;
    vc.deltas.push_back(j);
  }
  for (int i = 1; i < m; ++i) {
    int k = class_of_rep[static_cast<std::size_t>(uf.find(g_elem(i)))];
    a.values.gamma_class.push_back(k);
    auto& vc = a.values.classes[static_cast<std::size_t>(k)];
    vc.in_g = true;
    vc.gammas.push_back(i);
  }
  return a;
}

}  // namespace joinpi
