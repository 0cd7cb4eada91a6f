#pragma once

// Floating-point monodromy of the projection (x, y) -> x restricted to the
// curve f(y) = g(x): the d roots in y are tracked along loops around the
// special x-values and the resulting sheet permutations are compared with
// the symbolic pipeline (orbit count, relation at infinity, local models).

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "joinpi/complex_roots.hpp"
#include "joinpi/curve_model.hpp"

namespace joinpi {

struct NumericCurve {
  std::vector<Complex> f;  // coefficients in y, lowest first
  std::vector<Complex> g;  // coefficients in x
  int d = 0;

  static NumericCurve from(const JoinTypeCurve& c);
  static NumericCurve from_coefficients(std::vector<double> f, std::vector<double> g);
};

struct FiberState {
  Complex x;
  std::vector<Complex> roots;  // ordered by (real, imag) at the base
};

// Roots of f(y) - g(x0), Newton-polished and sorted. Throws
// JoinpiError(ill_conditioned) when two roots nearly coincide.
FiberState fiber_roots(const NumericCurve& c, Complex x0);

// perm[k] = j: sheet k at the base ends on sheet j.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
// First p1, then p2: result[i] = p2[p1[i]].
Permutation compose(const Permutation& p1, const Permutation& p2);
int orbit_count(const std::vector<Permutation>& perms, int n);
std::string cycle_notation(const Permutation& p);  // 1-based, "(1 2)(3)"

struct LoopSpec {
  Complex base;
  std::vector<Complex> waypoints;  // closed polyline, first == last == base
  double epsilon = 0.0;
};

struct TrackOptions {
  double min_step = 1e-13;   // relative to segment length
  long max_steps = 2000000;
  std::ostream* csv = nullptr;  // optional dump: x, then the roots
};

// Tracks the base fiber along an open polyline; returns the end roots.
std::vector<Complex> track_path(const NumericCurve& c, const std::vector<Complex>& path,
                                const std::vector<Complex>& start, const TrackOptions& opt = {});
Permutation track_loop(const NumericCurve& c, const LoopSpec& loop, const TrackOptions& opt = {});
Permutation track_loop(const NumericCurve& c, const LoopSpec& loop, const FiberState& base,
                       const TrackOptions& opt = {});

struct SpecialPoint {
  Complex x;
  std::string origin;  // "alpha_2", "g=f(delta_1)", "gamma_1"
};

// Discriminant of the projection: x with g(x) in V_crit(f).
std::vector<SpecialPoint> special_x_values(const CurveAnalysis& a);

struct LoopOptions {
  double radius_scale = 1.0;     // detour / small circle radius as a multiple of epsilon
  double waypoint_jitter = 0.0;  // displacement of interior waypoints, as a multiple of epsilon
  std::optional<double> epsilon; // default: half the minimum special separation, capped at 1e-2
};

struct MonodromyLayout {
  Complex base;
  double epsilon = 0.0;
  double theta0 = 0.0;  // direction of the ray used by the big circle
  std::vector<SpecialPoint> specials;  // in product order
};

MonodromyLayout monodromy_layout(const std::vector<SpecialPoint>& specials, std::optional<double> epsilon = {});
LoopSpec loop_around(const MonodromyLayout& layout, std::size_t index, const LoopOptions& opt = {});
LoopSpec big_circle(const MonodromyLayout& layout, const LoopOptions& opt = {});

struct MonodromyResult {
  MonodromyLayout layout;
  FiberState base_fiber;
  std::vector<Permutation> loops;  // in product order
  Permutation product;
  Permutation big_circle;
  int orbits = 0;
  bool relation_at_infinity = false;  // product == big_circle
};

MonodromyResult compute_monodromy(const NumericCurve& c, const std::vector<SpecialPoint>& specials,
                                  const LoopOptions& opt = {});
MonodromyResult compute_monodromy(const CurveAnalysis& a, const LoopOptions& opt = {});
int monodromy_orbits(const CurveAnalysis& a);

struct LocalCluster {
  int size = 1;
  double exponent = 0.0;  // root distances shrink like r^exponent
};

// Roots colliding as x -> s, from radial tracking between approach_radius
// and approach_radius / 256. Singletons are omitted.
std::vector<LocalCluster> local_multiplicity(const NumericCurve& c, Complex s, double approach_radius,
                                             const std::vector<Complex>& avoid = {});

}  // namespace joinpi
