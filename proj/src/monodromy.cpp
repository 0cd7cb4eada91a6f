#include "joinpi/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace joinpi {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::vector<Complex> to_complex(const DensePoly& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coefficients()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

double min_separation(const std::vector<Complex>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, std::abs(pts[i] - pts[j]));
  return best;
}

// Distance from pts[k] to its nearest neighbour in pts.
std::vector<double> neighbour_distances(const std::vector<Complex>& pts) {
  std::vector<double> out(pts.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j) out[i] = std::min(out[i], std::abs(pts[i] - pts[j]));
  return out;
}

}  // namespace

NumericCurve NumericCurve::from(const JoinTypeCurve& c) {
  NumericCurve n;
  n.f = to_complex(expand(c.f()));
  n.g = to_complex(expand(c.g()));
  n.d = static_cast<int>(n.f.size()) - 1;
  return n;
}

NumericCurve NumericCurve::from_coefficients(std::vector<double> f, std::vector<double> g) {
  NumericCurve n;
  for (double v : f) n.f.emplace_back(v, 0.0);
  for (double v : g) n.g.emplace_back(v, 0.0);
  n.d = static_cast<int>(n.f.size()) - 1;
  return n;
}

FiberState fiber_roots(const NumericCurve& c, Complex x0) {
  std::vector<Complex> coeffs = c.f;
  coeffs[0] -= horner(c.g, x0);
  FiberState s;
  s.x = x0;
  s.roots = polynomial_roots(coeffs);
  for (auto& y : s.roots)
    for (int it = 0; it < 4; ++it) {
      auto [v, dv] = horner_with_derivative(coeffs, y);
      if (dv == 0.0) break;
      y -= v / dv;
    }
  std::sort(s.roots.begin(), s.roots.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  double scale = 1.0;
  for (auto y : s.roots) scale = std::max(scale, std::abs(y));
  if (s.roots.size() > 1 && min_separation(s.roots) < 1e-9 * scale) {
    std::ostringstream msg;
    msg << "fiber at x = " << x0 << " has nearly coincident roots";
    throw JoinpiError(ErrorCode::ill_conditioned, msg.str());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& p1, const Permutation& p2) {
  Permutation out(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) out[i] = p2[static_cast<std::size_t>(p1[i])];
  return out;
}

int orbit_count(const std::vector<Permutation>& perms, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& p : perms)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(p[static_cast<std::size_t>(i)]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

std::string cycle_notation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path tracking

namespace {

// Rounding bound for f(y) - target evaluated by Horner.
double evaluation_noise(const std::vector<Complex>& f, Complex y, Complex target) {
  double acc = 0.0, ay = std::abs(y);
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * ay + std::abs(*it);
  return 4.0 * static_cast<double>(f.size()) * std::numeric_limits<double>::epsilon() * (acc + std::abs(target));
}

// One predictor-corrector step from x0 to x1. Returns false when the step
// must be shortened.
bool try_step(const NumericCurve& c, Complex x0, Complex x1, const std::vector<Complex>& in,
              const std::vector<double>& sep, std::vector<Complex>& out) {
  const Complex h = x1 - x0;
  const auto [g0, gp] = horner_with_derivative(c.g, x0);
  (void)g0;
  const Complex target = horner(c.g, x1);
  out.resize(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    auto [fv, fd] = horner_with_derivative(c.f, in[k]);
    (void)fv;
    if (fd == 0.0) return false;
    Complex pred = in[k] + h * gp / fd;
    Complex y = pred;
    bool converged = false;
    for (int it = 0; it < 12; ++it) {
      auto [v, dv] = horner_with_derivative(c.f, y);
      if (dv == 0.0) return false;
      // Residual already at rounding level: Newton cannot improve y further.
      if (std::abs(v - target) <= evaluation_noise(c.f, y, target)) {
        converged = true;
        break;
      }
      Complex step = (v - target) / dv;
      y -= step;
      if (std::abs(step) <= 1e-11 * (1.0 + std::abs(y))) {
        converged = true;
        break;
      }
    }
    if (!converged || !std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
    if (std::abs(y - pred) > 0.1 * sep[k]) return false;
    if (std::abs(y - in[k]) > 0.3 * sep[k]) return false;
    out[k] = y;
  }
  // The corrected roots must still be distinct and in the same order.
  std::vector<double> new_sep = neighbour_distances(out);
  for (std::size_t k = 0; k < out.size(); ++k)
    if (new_sep[k] < 4.0 * std::abs(out[k] - in[k]) && new_sep[k] < 0.5 * sep[k]) return false;
  return true;
}

void dump(std::ostream* csv, Complex x, const std::vector<Complex>& roots) {
  if (!csv) return;
  *csv << x.real() << ',' << x.imag();
  for (auto y : roots) *csv << ',' << y.real() << ',' << y.imag();
  *csv << '\n';
}

Permutation match(const std::vector<Complex>& start, const std::vector<Complex>& end) {
  const std::size_t n = start.size();
  std::vector<double> sep = neighbour_distances(start);
  Permutation perm(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      double dd = std::abs(end[k] - start[j]);
      if (dd < bd) {
        bd = dd;
        best = j;
      }
    }
    if (n > 1 && bd > 0.25 * sep[best])
      throw JoinpiError(ErrorCode::tracking_breakdown, "tracked root did not return to the base fiber");
    if (used[best]) throw JoinpiError(ErrorCode::tracking_breakdown, "root matching at the base is not injective");
    used[best] = true;
    perm[k] = static_cast<int>(best);
  }
  return perm;
}

}  // namespace

std::vector<Complex> track_path(const NumericCurve& c, const std::vector<Complex>& path,
                                const std::vector<Complex>& start, const TrackOptions& opt) {
  std::vector<Complex> roots = start, next;
  if (roots.size() < 2) {
    // A single sheet needs no separation control.
    for (std::size_t i = 1; i < path.size(); ++i) {
      Complex target = horner(c.g, path[i]);
      for (auto& y : roots)
        for (int it = 0; it < 50; ++it) {
          auto [v, dv] = horner_with_derivative(c.f, y);
          y -= (v - target) / dv;
        }
    }
    return roots;
  }
  long steps = 0;
  double h = 0.0;
  dump(opt.csv, path.empty() ? Complex{} : path.front(), roots);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Complex a = path[i], b = path[i + 1];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    if (h <= 0.0) h = len;
    double t = 0.0;
    while (t < len) {
      double dt = std::min(h, len - t);
      Complex x0 = a + (b - a) * (t / len);
      Complex x1 = (t + dt >= len) ? b : a + (b - a) * ((t + dt) / len);
      std::vector<double> sep = neighbour_distances(roots);
      if (try_step(c, x0, x1, roots, sep, next)) {
        roots.swap(next);
        t += dt;
        h = dt * 1.5;
        dump(opt.csv, x1, roots);
      } else {
        h = dt / 2;
        if (h < opt.min_step * std::max(1.0, len)) {
          std::ostringstream msg;
          msg << "step underflow while tracking near x = " << x0 << "; shrink epsilon or raise precision";
          throw JoinpiError(ErrorCode::tracking_breakdown, msg.str());
        }
      }
      if (++steps > opt.max_steps) throw JoinpiError(ErrorCode::tracking_breakdown, "too many tracking steps");
    }
  }
  return roots;
}

Permutation track_loop(const NumericCurve& c, const LoopSpec& loop, const FiberState& base, const TrackOptions& opt) {
  return match(base.roots, track_path(c, loop.waypoints, base.roots, opt));
}

Permutation track_loop(const NumericCurve& c, const LoopSpec& loop, const TrackOptions& opt) {
  return track_loop(c, loop, fiber_roots(c, loop.base), opt);
}

// ---------------------------------------------------------------------------
// Special fibres

std::vector<SpecialPoint> special_x_values(const CurveAnalysis& a) {
  if (!a.curve.has_coefficients() || !a.locus)
    throw JoinpiError(ErrorCode::invalid_input, "monodromy needs numeric coefficients (exact or declared mode)");
  const NumericCurve nc = NumericCurve::from(a.curve);
  const auto& g = a.curve.g();
  std::vector<SpecialPoint> out;
  for (std::size_t k = 0; k < a.values.classes.size(); ++k) {
    const auto& vc = a.values.classes[k];
    if (!vc.in_f) continue;
    if (static_cast<int>(k) == a.values.zero_class) {
      for (std::size_t i = 0; i < g.factors().size(); ++i)
        out.push_back({Complex(g.factors()[i].root.get_d(), 0.0), "alpha_" + std::to_string(i + 1)});
      continue;
    }
    std::vector<Complex> coeffs = nc.g;
    coeffs[0] -= vc.approx;
    std::vector<Complex> roots = polynomial_roots(coeffs);
    std::string origin = "g=f(delta_" + std::to_string(vc.deltas.front()) + ")";
    // Shared critical values: g - v has a double root at gamma_i; replace the
    // numerically split pair by the exact location.
    for (int i : vc.gammas) {
      double gx = a.locus->gammas[static_cast<std::size_t>(i - 1)].location.approx();
      for (int rep = 0; rep < 2 && !roots.empty(); ++rep) {
        auto it = std::min_element(roots.begin(), roots.end(), [gx](Complex u, Complex v) {
          return std::abs(u - gx) < std::abs(v - gx);
        });
        roots.erase(it);
      }
      out.push_back({Complex(gx, 0.0), "gamma_" + std::to_string(i)});
    }
    for (auto r : roots) {
      if (std::abs(r.imag()) < 1e-9 * (1.0 + std::abs(r.real()))) r = Complex(r.real(), 0.0);
      out.push_back({r, origin});
    }
  }
  std::vector<SpecialPoint> merged;
  for (const auto& s : out) {
    bool dup = std::any_of(merged.begin(), merged.end(), [&](const SpecialPoint& t) {
      return std::abs(s.x - t.x) < 1e-9 * (1.0 + std::abs(s.x));
    });
    if (!dup) merged.push_back(s);
  }
  return merged;
}

// ---------------------------------------------------------------------------
// Loop geometry

namespace {

double angle_key(Complex v, double theta0) {
  double k = std::fmod(std::arg(v) - theta0 + 2.0 * kTwoPi, kTwoPi);
  return k >= kTwoPi ? k - kTwoPi : k;
}

// Product order: angle measured counter-clockwise from theta0, nearer first on ties.
bool comes_before(Complex t, Complex s, Complex base, double theta0) {
  double kt = angle_key(t - base, theta0), ks = angle_key(s - base, theta0);
  if (std::abs(kt - ks) > 1e-12) return kt < ks;
  return std::abs(t - base) < std::abs(s - base);
}

double nearest_special(Complex x, const std::vector<SpecialPoint>& sp) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : sp) best = std::min(best, std::abs(x - s.x));
  return best;
}

class PathBuilder {
 public:
  PathBuilder(const std::vector<SpecialPoint>& sp, double spacing_floor) : sp_(sp), floor_(spacing_floor) {}

  void start(Complex p) { pts_ = {p}; }

  void line_to(Complex q) {
    Complex p = pts_.back();
    double len = std::abs(q - p);
    double t = 0.0;
    while (len - t > 1e-15 * (1.0 + len)) {
      Complex x = p + (q - p) * (t / len);
      double step = std::max(floor_, nearest_special(x, sp_) / 8.0);
      t = std::min(len, t + step);
      pts_.push_back(t >= len ? q : p + (q - p) * (t / len));
    }
  }

  // Arc around `center` from the current point, sweeping `sweep` radians.
  void arc(Complex center, double sweep) {
    Complex p = pts_.back();
    double r = std::abs(p - center);
    double phi = std::arg(p - center);
    double max_dphi = std::min(0.125, 0.05 * std::max(1.0, 1.0 / std::max(r, 1e-300)));
    max_dphi = std::min(max_dphi, 0.125);
    int n = std::max(8, static_cast<int>(std::ceil(std::abs(sweep) / max_dphi)));
    for (int k = 1; k <= n; ++k) pts_.push_back(center + std::polar(r, phi + sweep * k / n));
  }

  std::vector<Complex>& points() { return pts_; }

 private:
  const std::vector<SpecialPoint>& sp_;
  double floor_;
  std::vector<Complex> pts_;
};

// Straight run from `from` to `to`, detouring around every special within
// radius r of the segment; keep_right(t) picks the side of each detour.
template <class KeepRight>
void segment_with_detours(PathBuilder& pb, Complex from, Complex to, double r, const std::vector<SpecialPoint>& sp,
                          std::size_t skip, KeepRight keep_right) {
  const double len = std::abs(to - from);
  const Complex u = (to - from) / len;
  struct Detour {
    double tau, w;
    Complex t;
    bool right;
  };
  std::vector<Detour> ds;
  for (std::size_t k = 0; k < sp.size(); ++k) {
    if (k == skip) continue;
    Complex rel = (sp[k].x - from) * std::conj(u);
    double tau = rel.real(), hh = rel.imag();
    if (std::abs(hh) >= r || tau <= 0.0 || tau >= len) continue;
    double w = std::sqrt(r * r - hh * hh);
    ds.push_back({tau, w, sp[k].x, keep_right(sp[k].x)});
  }
  std::sort(ds.begin(), ds.end(), [](const Detour& a, const Detour& b) { return a.tau < b.tau; });
  for (const auto& d : ds) {
    Complex entry = from + u * (d.tau - d.w);
    Complex exit = from + u * (d.tau + d.w);
    pb.line_to(entry);
    double phi_in = std::arg(entry - d.t), phi_out = std::arg(exit - d.t);
    double sweep = phi_out - phi_in;
    if (d.right) {  // clockwise around t keeps it on the right
      while (sweep > 0) sweep -= kTwoPi;
      while (sweep <= -kTwoPi) sweep += kTwoPi;
    } else {
      while (sweep < 0) sweep += kTwoPi;
      while (sweep >= kTwoPi) sweep -= kTwoPi;
    }
    pb.arc(d.t, sweep);
    pb.points().back() = exit;
  }
  pb.line_to(to);
}

void jitter(std::vector<Complex>& pts, double amount) {
  if (amount == 0.0) return;
  for (std::size_t k = 1; k + 1 < pts.size(); ++k)
    pts[k] += std::polar(amount * (0.5 + 0.5 * std::abs(std::sin(1.7 * static_cast<double>(k)))),
                         2.399963229728653 * static_cast<double>(k));
}

std::vector<Complex> close_lasso(const std::vector<Complex>& outward, const std::vector<Complex>& circle) {
  std::vector<Complex> all = outward;
  all.insert(all.end(), circle.begin() + 1, circle.end());
  all.insert(all.end(), outward.rbegin() + 1, outward.rend());
  return all;
}

}  // namespace

MonodromyLayout monodromy_layout(const std::vector<SpecialPoint>& specials, std::optional<double> epsilon) {
  if (specials.empty()) throw JoinpiError(ErrorCode::invalid_input, "no special fibres");
  MonodromyLayout L;
  std::vector<double> re;
  for (const auto& s : specials) re.push_back(s.x.real());
  std::sort(re.begin(), re.end());
  re.erase(std::unique(re.begin(), re.end()), re.end());
  std::vector<double> candidates;
  for (std::size_t k = 0; k + 1 < re.size(); ++k) candidates.push_back(0.5 * (re[k] + re[k + 1]));
  candidates.push_back(re.front() - 0.5);
  candidates.push_back(re.back() + 0.5);
  double best = -1.0;
  for (double c : candidates) {
    double dist = nearest_special(Complex(c, 0.0), specials);
    if (dist > best + 1e-12) {
      best = dist;
      L.base = Complex(c, 0.0);
    }
  }
  std::vector<Complex> xs;
  for (const auto& s : specials) xs.push_back(s.x);
  double sep = specials.size() > 1 ? min_separation(xs) : 1.0;
  L.epsilon = epsilon ? *epsilon : std::min(0.5 * sep, 1e-2);
  L.epsilon = std::min(L.epsilon, 0.5 * best);

  // Ray for the big circle: bisector of the widest angular gap seen from the base.
  std::vector<double> angles;
  for (const auto& s : specials) angles.push_back(std::arg(s.x - L.base));
  std::sort(angles.begin(), angles.end());
  double gap = -1.0;
  for (std::size_t k = 0; k < angles.size(); ++k) {
    double a0 = angles[k];
    double a1 = k + 1 < angles.size() ? angles[k + 1] : angles.front() + kTwoPi;
    if (a1 - a0 > gap + 1e-12) {
      gap = a1 - a0;
      L.theta0 = 0.5 * (a0 + a1);
    }
  }
  L.specials = specials;
  std::stable_sort(L.specials.begin(), L.specials.end(), [&](const SpecialPoint& a, const SpecialPoint& b) {
    return comes_before(a.x, b.x, L.base, L.theta0);
  });
  return L;
}

LoopSpec loop_around(const MonodromyLayout& L, std::size_t index, const LoopOptions& opt) {
  const double r = L.epsilon * opt.radius_scale;
  const Complex s = L.specials[index].x;
  const Complex u = (s - L.base) / std::abs(s - L.base);
  const Complex approach = s - u * r;
  PathBuilder out(L.specials, r / 8.0);
  out.start(L.base);
  segment_with_detours(out, L.base, approach, r, L.specials, index,
                       [&](Complex t) { return comes_before(t, s, L.base, L.theta0); });
  PathBuilder circle(L.specials, r / 8.0);
  circle.start(approach);
  circle.arc(s, kTwoPi);
  circle.points().back() = approach;
  LoopSpec spec;
  spec.base = L.base;
  spec.epsilon = L.epsilon;
  spec.waypoints = close_lasso(out.points(), circle.points());
  jitter(spec.waypoints, opt.waypoint_jitter * L.epsilon);
  return spec;
}

LoopSpec big_circle(const MonodromyLayout& L, const LoopOptions& opt) {
  const double r = L.epsilon * opt.radius_scale;
  double reach = 0.0;
  for (const auto& s : L.specials) reach = std::max(reach, std::abs(s.x - L.base));
  const double R = 1.25 * reach + 1.0;
  const Complex v = std::polar(1.0, L.theta0);
  PathBuilder out(L.specials, r / 8.0);
  out.start(L.base);
  // Specials just after the ray (small angle key) stay on the left.
  segment_with_detours(out, L.base, L.base + R * v, r, L.specials, L.specials.size(),
                       [&](Complex t) { return angle_key(t - L.base, L.theta0) >= M_PI; });
  PathBuilder circle(L.specials, r / 8.0);
  circle.start(L.base + R * v);
  circle.arc(L.base, kTwoPi);
  circle.points().back() = L.base + R * v;
  LoopSpec spec;
  spec.base = L.base;
  spec.epsilon = L.epsilon;
  spec.waypoints = close_lasso(out.points(), circle.points());
  jitter(spec.waypoints, opt.waypoint_jitter * L.epsilon);
  return spec;
}

MonodromyResult compute_monodromy(const NumericCurve& c, const std::vector<SpecialPoint>& specials,
                                  const LoopOptions& opt) {
  MonodromyResult res;
  res.layout = monodromy_layout(specials, opt.epsilon);
  res.base_fiber = fiber_roots(c, res.layout.base);
  res.product = identity_permutation(c.d);
  for (std::size_t k = 0; k < res.layout.specials.size(); ++k) {
    Permutation p = track_loop(c, loop_around(res.layout, k, opt), res.base_fiber);
    res.product = compose(res.product, p);
    res.loops.push_back(std::move(p));
  }
  res.big_circle = track_loop(c, big_circle(res.layout, opt), res.base_fiber);
  res.orbits = orbit_count(res.loops, c.d);
  res.relation_at_infinity = res.product == res.big_circle;
  return res;
}

MonodromyResult compute_monodromy(const CurveAnalysis& a, const LoopOptions& opt) {
  return compute_monodromy(NumericCurve::from(a.curve), special_x_values(a), opt);
}

int monodromy_orbits(const CurveAnalysis& a) { return compute_monodromy(a).orbits; }

// ---------------------------------------------------------------------------
// Local multiplicities

std::vector<LocalCluster> local_multiplicity(const NumericCurve& c, Complex s, double R,
                                             const std::vector<Complex>& avoid) {
  Complex dir = 1.0;
  double best = -1.0;
  for (int k = 0; k < 16; ++k) {
    Complex u = std::polar(1.0, kTwoPi * k / 16);
    double dist = std::numeric_limits<double>::infinity();
    for (auto a : avoid)
      if (std::abs(a - s) > 1e-12) dist = std::min(dist, std::abs(s + R * u - a));
    if (dist > best + 1e-12) {
      best = dist;
      dir = u;
    }
  }
  constexpr int kHalvings = 8;
  std::vector<std::vector<Complex>> snaps;
  FiberState f0 = fiber_roots(c, s + R * dir);
  snaps.push_back(f0.roots);
  for (int k = 1; k <= kHalvings; ++k) {
    Complex a = s + R * std::ldexp(1.0, -(k - 1)) * dir, b = s + R * std::ldexp(1.0, -k) * dir;
    snaps.push_back(track_path(c, {a, b}, snaps.back()));
  }
  const std::size_t n = f0.roots.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto dist = [&](int level, std::size_t i, std::size_t j) {
    return std::abs(snaps[static_cast<std::size_t>(level)][i] - snaps[static_cast<std::size_t>(level)][j]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dist(kHalvings, i, j) / dist(0, i, j) < 0.6) {
        int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
  std::vector<LocalCluster> out;
  for (std::size_t root = 0; root < n; ++root) {
    if (find(static_cast<int>(root)) != static_cast<int>(root)) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(root)) members.push_back(i);
    if (members.size() < 2) continue;
    // Slope of log(distance) against log(radius) over the last 3 halvings.
    double sum = 0.0;
    int pairs = 0;
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        sum += std::log2(dist(kHalvings - 3, members[x], members[y]) / dist(kHalvings, members[x], members[y])) / 3.0;
        ++pairs;
      }
    out.push_back({static_cast<int>(members.size()), sum / pairs});
  }
  std::sort(out.begin(), out.end(), [](const LocalCluster& a, const LocalCluster& b) {
    return a.size != b.size ? a.size > b.size : a.exponent < b.exponent;
  });
  return out;
}

}  // namespace joinpi
