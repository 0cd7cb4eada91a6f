#include "joinpi/rational_poly.hpp"

#include <algorithm>
#include <sstream>

namespace joinpi {

DensePoly::DensePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

DensePoly DensePoly::constant(const Rational& c) { return DensePoly({c}); }

DensePoly DensePoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return DensePoly(std::move(v));
}

DensePoly DensePoly::linear_factor(const Rational& root) { return DensePoly({-root, Rational(1)}); }

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational DensePoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePoly DensePoly::operator-() const {
  DensePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const DensePoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  DensePoly r = *this;
  Rational inv = 1 / leading();
  return r * inv;
}

std::string DensePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {DensePoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const auto& bc = b.coefficients();
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly exact_quotient(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

DensePoly derivative(const DensePoly& p) {
  if (p.degree() <= 0) return DensePoly();
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return DensePoly(std::move(out));
}

DensePoly poly_gcd(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  DensePoly a = p.monic();
  DensePoly b = q.monic();
  while (!b.is_zero()) {
    DensePoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational resultant(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  DensePoly a = p;
  DensePoly b = q;
  Rational acc(1);
  while (true) {
    int da = a.degree();
    int db = b.degree();
    if (db == 0) return acc * pow(b.leading(), static_cast<unsigned long>(da));
    if (da == 0) return acc * pow(a.leading(), static_cast<unsigned long>(db));
    DensePoly r = divmod(a, b).remainder;
    if (r.is_zero()) return Rational(0);
    int dr = r.degree();
    if ((da * db) % 2 == 1) acc = -acc;
    acc *= pow(b.leading(), static_cast<unsigned long>(da - dr));
    a = std::move(b);
    b = std::move(r);
  }
}

DensePoly square_free_part(const DensePoly& p) {
  if (p.degree() <= 0) return DensePoly::constant(Rational(1));
  DensePoly g = poly_gcd(p, derivative(p));
  return exact_quotient(p, g).monic();
}

std::vector<DensePoly> square_free_decomposition(const DensePoly& p) {
  std::vector<DensePoly> out;
  if (p.degree() <= 0) return out;
  DensePoly f = p.monic();
  DensePoly fp = derivative(f);
  DensePoly a0 = poly_gcd(f, fp);
  DensePoly b = exact_quotient(f, a0);
  DensePoly c = exact_quotient(fp, a0);
  DensePoly d = c - derivative(b);
  while (b.degree() > 0) {
    DensePoly a = d.is_zero() ? b : poly_gcd(b, d);
    out.push_back(a.monic());
    DensePoly b_next = exact_quotient(b, a);
    c = d.is_zero() ? DensePoly() : exact_quotient(d, a);
    d = c - derivative(b_next);
    b = std::move(b_next);
  }
  return out;
}

Interval evaluate(const DensePoly& p, const Interval& x) {
  if (p.is_zero()) return {Rational(0), Rational(0)};
  const auto& c = p.coefficients();
  Rational lo = c.back();
  Rational hi = c.back();
  for (int i = p.degree() - 1; i >= 0; --i) {
    Rational a = lo * x.lo, b = lo * x.hi, e = hi * x.lo, f = hi * x.hi;
    lo = std::min({a, b, e, f}) + c[static_cast<std::size_t>(i)];
    hi = std::max({a, b, e, f}) + c[static_cast<std::size_t>(i)];
  }
  return {lo, hi};
}

SturmSequence::SturmSequence(const DensePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(derivative(p));
  while (true) {
    const DensePoly& a = chain_[chain_.size() - 2];
    const DensePoly& b = chain_.back();
    if (b.degree() == 0) break;
    DensePoly r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    // Dividing by |lc| keeps sizes small without changing signs.
    r *= Rational(-1) / abs(r.leading());
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

Rational root_bound(const DensePoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  Rational bound = m + 1;
  Rational b(1);
  while (b < bound) b *= 2;
  return b;
}

IsolatedRoot bisect_once(const DensePoly& squarefree, const IsolatedRoot& r) {
  if (r.is_exact()) return r;
  IsolatedRoot out = r;
  Rational mid = r.mid();
  int sm = squarefree.sign_at(mid);
  if (sm == 0) {
    out.lo = out.hi = mid;
  } else if (sm == squarefree.sign_at(r.lo)) {
    out.lo = mid;
  } else {
    out.hi = mid;
  }
  return out;
}

IsolatedRoot refine_simple_root(const DensePoly& squarefree, const IsolatedRoot& r,
                                const Rational& width) {
  IsolatedRoot out = r;
  while (!out.is_exact() && out.width() > width) out = bisect_once(squarefree, out);
  return out;
}

IsolatedRoot refine_root(const DensePoly& p, const IsolatedRoot& r, const Rational& width) {
  return refine_simple_root(square_free_part(p), r, width);
}

namespace {

// Roots of a square-free polynomial, ascending, each tagged with `mult`.
void isolate_squarefree(const DensePoly& s, int mult, std::vector<IsolatedRoot>& out) {
  if (s.degree() <= 0) return;
  SturmSequence sturm(s);
  Rational bound = root_bound(s);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack;
  int total = sturm.count(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  std::vector<IsolatedRoot> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 1) {
      if (s.sign_at(cur.hi) == 0) {
        found.push_back({cur.hi, cur.hi, mult});
        continue;
      }
      Rational lo = cur.lo, hi = cur.hi;
      // lo may itself be a (different) root; pull it in until it is not.
      while (s.sign_at(lo) == 0) {
        Rational mid = (lo + hi) / 2;
        int c = sturm.count(lo, mid);
        if (c == 1) {
          if (s.sign_at(mid) == 0) {
            lo = hi = mid;
            break;
          }
          hi = mid;
        } else {
          lo = mid;
        }
      }
      found.push_back({lo, hi, mult});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int left = sturm.count(cur.lo, mid);
    int right = cur.count - left;
    // Push right first so the left half is processed first.
    if (right > 0) stack.push_back({mid, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, mid, left});
  }
  out.insert(out.end(), found.begin(), found.end());
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const DensePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  // Isolate against the whole square-free part so no bracket endpoint is a
  // root of another factor, then read the multiplicity off the factor that
  // vanishes in each bracket.
  std::vector<IsolatedRoot> roots;
  isolate_squarefree(square_free_part(p), 1, roots);
  auto parts = square_free_decomposition(p);
  for (auto& r : roots) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const DensePoly& part = parts[k];
      if (part.degree() <= 0) continue;
      bool here = r.is_exact() ? part.sign_at(r.lo) == 0 : part.sign_at(r.lo) * part.sign_at(r.hi) < 0;
      if (here) {
        r.multiplicity = static_cast<int>(k) + 1;
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return roots;
}

FactoredPoly::FactoredPoly(Rational scale, std::vector<RootFactor> factors)
    : scale_(std::move(scale)), factors_(std::move(factors)) {
  scale_.canonicalize();
  if (scale_ == 0) throw JoinpiError(ErrorCode::zero_scale, "scale must be nonzero");
  if (factors_.empty()) throw JoinpiError(ErrorCode::invalid_input, "polynomial needs at least one factor");
  for (auto& f : factors_) {
    f.root.canonicalize();
    if (f.multiplicity < 1)
      throw JoinpiError(ErrorCode::invalid_input, "multiplicities must be positive integers");
  }
  std::sort(factors_.begin(), factors_.end(),
            [](const RootFactor& a, const RootFactor& b) { return a.root < b.root; });
  for (std::size_t i = 1; i < factors_.size(); ++i)
    if (factors_[i].root == factors_[i - 1].root)
      throw JoinpiError(ErrorCode::duplicate_root, "two factors share the root " + factors_[i].root.get_str());
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.multiplicity;
  return d;
}

std::vector<int> FactoredPoly::multiplicities() const {
  std::vector<int> out;
  for (const auto& f : factors_) out.push_back(f.multiplicity);
  return out;
}

Rational FactoredPoly::operator()(const Rational& x) const {
  Rational acc = scale_;
  for (const auto& f : factors_) acc *= pow(Rational(x - f.root), static_cast<unsigned long>(f.multiplicity));
  return acc;
}

std::string FactoredPoly::to_string(char var) const {
  std::ostringstream os;
  if (scale_ != 1) os << scale_.get_str() << "*";
  bool first = true;
  for (const auto& f : factors_) {
    if (!first) os << "*";
    first = false;
    if (f.root == 0) {
      os << var;
    } else {
      os << "(" << var << (f.root < 0 ? "+" : "-") << Rational(abs(f.root)).get_str() << ")";
    }
    if (f.multiplicity > 1) os << "^" << f.multiplicity;
  }
  return os.str();
}

DensePoly expand(const FactoredPoly& p) {
  DensePoly acc = DensePoly::constant(p.scale());
  for (const auto& f : p.factors()) {
    DensePoly lin = DensePoly::linear_factor(f.root);
    for (int k = 0; k < f.multiplicity; ++k) acc *= lin;
  }
  return acc;
}

}  // namespace joinpi
