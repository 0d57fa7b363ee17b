#ifndef MONOKIT_DEBRUNNER_HPP
#define MONOKIT_DEBRUNNER_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monokit/duality.hpp"
#include "monokit/fm.hpp"
#include "monokit/monotonicity.hpp"
#include "monokit/projection.hpp"
#include "monokit/region.hpp"

namespace monokit {

namespace df_detail {

// Dyadic refinement over a box: 9 nodes per axis to start, doubled per level
// until the total node budget is spent. visit() returns true to stop.
template <class Visit>
void refine_grid(const std::vector<double>& lo, const std::vector<double>& hi, Visit visit,
                 size_t max_points = (size_t(1) << 20)) {
  int d = static_cast<int>(lo.size());
  for (size_t per_axis = 9;; per_axis = 2 * per_axis - 1) {
    size_t total = 1;
    for (int a = 0; a < d; ++a) {
      total *= per_axis;
      if (total > max_points) return;
    }
    std::vector<size_t> idx(d, 0);
    while (true) {
      std::vector<double> p(d);
      for (int a = 0; a < d; ++a)
        p[a] = lo[a] + (hi[a] - lo[a]) * static_cast<double>(idx[a]) /
                           static_cast<double>(per_axis - 1);
      if (visit(p)) return;
      int k = d - 1;
      while (k >= 0 && idx[k] + 1 == per_axis) idx[k--] = 0;
      if (k < 0) break;
      ++idx[k];
    }
  }
}

}  // namespace df_detail

// Debrunner-Flor extension with constant phi = x0: a covector x0* in C with
// <x0* - y*, x0 - y> >= 0 for every (y, y*) in M. The constraints are linear
// in x0*; dimensions <= 3 go through exact Fourier-Motzkin with the
// barycenter as coordinatewise preference, larger (floating) instances
// project the barycenter onto the constraint intersection.
template <class S>
Covector<S> extend_constant(const OperatorGraph<S>& m, const ConvexRegion<S>& c,
                            const Point<S>& x0, const Tolerance& tol = {}) {
  c.validate();
  if (x0.dim() != c.dim) throw InvalidInput("x0 dimension does not match C");
  if (!m.empty()) {
    m.validate();
    if (m.dim != c.dim) throw InvalidInput("graph dimension does not match C");
    Certificate<S> mono = check_monotone(m, tol);
    if (!mono.verdict) throw InvalidInput("M is not a monotone set");
    for (const auto& p : m.pairs)
      if (!c.contains(p.xstar.c, tol))
        throw InvalidInput("M has a covector outside C; the extension lemma requires M in E x C");
  }
  auto verify = [&](const Covector<S>& u) {
    S worst{};
    bool bad = false;
    for (const auto& p : m.pairs) {
      S gap = monotone_gap(GraphPair<S>{x0, u}, p);
      if (!nonneg(gap, tol) && (!bad || gap < worst)) {
        bad = true;
        worst = gap;
      }
    }
    if (bad)
      throw InvalidInput("extension infeasible; max violation " +
                         std::to_string(scalar_traits<S>::to_double(worst)));
    return u;
  };

  bool polyhedral = c.kind != RegionKind::Ball;
  if (polyhedral && c.dim <= 3) {
    LinearSystem<S> sys = c.as_system();
    for (const auto& p : m.pairs) {
      std::vector<S> d = sub(x0.c, p.x.c);
      sys.add_ge(d, pairing(p.xstar, Point<S>{d}));
    }
    auto u = fm_sample_near(sys, c.reference_point(), tol);
    if (!u) throw InvalidInput("extension infeasible despite valid inputs");
    return verify(Covector<S>{*u});
  }
  if constexpr (scalar_traits<S>::is_exact) {
    throw InvalidInput("exact extension supports polyhedral C in dimension <= 3");
  } else {
    std::vector<std::function<std::vector<double>(std::vector<double>)>> projectors;
    for (const auto& p : m.pairs) {
      std::vector<double> d = sub(x0.c, p.x.c);
      double rhs = pairing(p.xstar, Point<double>{d});
      // <u, d> >= rhs  as the halfspace <-d, u> <= -rhs
      HalfspaceRow row;
      row.a.resize(d.size());
      for (size_t i = 0; i < d.size(); ++i) row.a[i] = -d[i];
      row.b = -rhs;
      projectors.push_back([row](std::vector<double> v) { return project_halfspace(row, v); });
    }
    ConvexRegion<double> cc = c;
    projectors.push_back(
        [cc](std::vector<double> v) { return project(cc, Point<double>{v}).point.c; });
    auto u = dykstra_projectors(projectors, c.reference_point(), 1e-12, 100000);
    return verify(Covector<double>{u});
  }
}

using PhiOracle = std::function<Point<double>(const Covector<double>&)>;

struct ExtendGeneralResult {
  Covector<double> xstar;
  double achieved_min = 0;  // min over M of <x* - y*, phi(x*) - y>
};

// General-phi extension realized as maximization of the worst violation over
// a refining grid on C; succeeds once the minimum clears -tol.
inline ExtendGeneralResult extend_general(const OperatorGraph<double>& m,
                                          const ConvexRegion<double>& c, const PhiOracle& phi,
                                          double tol = 1e-9) {
  c.validate();
  if (!m.empty()) {
    m.validate();
    if (!check_monotone(m).verdict) throw InvalidInput("M is not a monotone set");
  }
  if (c.dim > 3) throw InvalidInput("general extension supports dimensions <= 3");
  auto [lo, hi] = c.bounding_box();
  std::optional<ExtendGeneralResult> best;
  bool done = false;
  df_detail::refine_grid(lo, hi, [&](const std::vector<double>& p) {
    if (!c.contains(p, Tolerance{})) return false;
    Covector<double> u{p};
    double worst = 0;
    bool first = true;
    for (const auto& pair : m.pairs) {
      double v = dot(sub(u.c, pair.xstar.c), sub(phi(u).c, pair.x.c));
      if (first || v < worst) worst = v;
      first = false;
    }
    if (first) worst = 0;  // empty M: every covector works
    if (!best || worst > best->achieved_min) best = ExtendGeneralResult{u, worst};
    if (best->achieved_min >= -tol) {
      done = true;
      return true;
    }
    return false;
  });
  if (!best) throw InvalidInput("no grid point of the bounding box lies in C");
  if (!done) {
    std::string msg = "extension tolerance not reached at maximal refinement; best candidate (";
    for (size_t i = 0; i < best->xstar.c.size(); ++i)
      msg += (i ? ", " : "") + std::to_string(best->xstar.c[i]);
    throw SearchExhausted(msg + ")", -best->achieved_min);
  }
  return *best;
}

using SetMapOracle = std::function<ConvexRegion<double>(const Point<double>&)>;

struct KakutaniResult {
  Point<double> point;
  double distance = 0;
};

// Kakutani-type fixed point u in R(u), located by refining grid search over
// K; existence is guaranteed under the lemma's hypotheses.
inline KakutaniResult kakutani_witness(const SetMapOracle& r, const ConvexRegion<double>& k,
                                       double tol) {
  k.validate();
  if (k.dim > 3) throw InvalidInput("fixed-point search supports dimensions <= 3");
  if (!(tol > 0)) throw InvalidInput("tolerance must be positive");
  auto [lo, hi] = k.bounding_box();
  std::optional<KakutaniResult> best;
  bool done = false;
  df_detail::refine_grid(lo, hi, [&](const std::vector<double>& p) {
    if (!k.contains(p, Tolerance{})) return false;
    Point<double> u{p};
    ConvexRegion<double> image = r(u);
    try {
      image.validate();
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("set-map hypotheses violated: ") + e.what());
    }
    double dist = euclid_norm(sub(u.c, project(image, u).point.c));
    if (!best || dist < best->distance) best = KakutaniResult{u, dist};
    if (dist <= tol) {
      done = true;
      return true;
    }
    return false;
  });
  if (!best) throw InvalidInput("no grid point of the bounding box lies in K");
  if (!done) {
    std::string msg = "no fixed point located at maximal refinement; best candidate (";
    for (size_t i = 0; i < best->point.c.size(); ++i)
      msg += (i ? ", " : "") + std::to_string(best->point.c[i]);
    throw SearchExhausted(msg + ")", best->distance);
  }
  return *best;
}

struct BrowderResult {
  GraphPair<double> witness;
  double achieved_min = 0;
};

// Browder witness: x in rB with x* in -J(x) monotonically related to G(T),
// found by maximizing the worst violation over a refining grid of rB.
inline BrowderResult browder_witness(const OperatorGraph<double>& t, double r, const Norm& n,
                                     double tol = 1e-9) {
  t.validate();
  if (!(r > 0)) throw InvalidInput("radius must be positive");
  if (t.dim > 3) throw InvalidInput("witness search supports dimensions <= 3");
  if (n.kind == NormKind::Sup)
    throw InvalidInput("witness search needs a smooth norm with single-valued duality map");
  for (const auto& p : t.pairs)
    if (norm_eval(n, p.x) > r + 1e-9)
      throw InvalidInput("all points of T must lie in the radius-r ball");
  std::vector<double> lo(t.dim, -r), hi(t.dim, r);
  std::optional<BrowderResult> best;
  bool done = false;
  df_detail::refine_grid(lo, hi, [&](const std::vector<double>& p) {
    Point<double> x{p};
    if (norm_eval(n, x) > r) return false;
    Covector<double> xstar = duality_map(n, x).selection;
    for (double& v : xstar.c) v = -v;
    double worst = 0;
    bool first = true;
    for (const auto& pair : t.pairs) {
      double v = monotone_gap(GraphPair<double>{x, xstar}, pair);
      if (first || v < worst) worst = v;
      first = false;
    }
    if (first) worst = 0;
    if (!best || worst > best->achieved_min)
      best = BrowderResult{GraphPair<double>{x, xstar}, worst};
    if (best->achieved_min >= -tol) {
      done = true;
      return true;
    }
    return false;
  });
  if (!best) throw InvalidInput("empty search ball");
  if (!done) {
    std::string msg = "witness tolerance not reached at maximal refinement; best candidate (";
    for (size_t i = 0; i < best->witness.x.c.size(); ++i)
      msg += (i ? ", " : "") + std::to_string(best->witness.x.c[i]);
    throw SearchExhausted(msg + ")", -best->achieved_min);
  }
  return *best;
}

}  // namespace monokit

#endif
