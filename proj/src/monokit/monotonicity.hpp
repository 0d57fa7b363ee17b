#ifndef MONOKIT_MONOTONICITY_HPP
#define MONOKIT_MONOTONICITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monokit/linalg.hpp"
#include "monokit/norm.hpp"
#include "monokit/region.hpp"
#include "monokit/rng.hpp"
#include "monokit/scalar.hpp"
#include "monokit/step1d.hpp"

namespace monokit {

// Verdict true iff <x* - y*, x - y> >= 0 for every pair of graph nodes
// (down to -abs in the floating backend). The witness is the
// lexicographically first violating index pair.
template <class S>
Certificate<S> check_monotone(const OperatorGraph<S>& g, const Tolerance& tol = {}) {
  g.validate();
  if (g.empty()) throw InvalidInput("check_monotone requires a nonempty graph");
  for (size_t i = 0; i < g.pairs.size(); ++i)
    for (size_t j = i + 1; j < g.pairs.size(); ++j) {
      S gap = monotone_gap(g.pairs[i], g.pairs[j]);
      if (!nonneg(gap, tol))
        return Certificate<S>{false, {g.pairs[i], g.pairs[j]}, gap, ""};
    }
  return Certificate<S>{true, {}, S{}, ""};
}

// Is (p.x, p.xstar) monotonically related to every pair of g? On failure the
// witness is the pair attaining the minimal product.
template <class S>
Certificate<S> monotonically_related(const GraphPair<S>& p, const OperatorGraph<S>& g,
                                     const Tolerance& tol = {}) {
  g.validate();
  if (!g.empty() && p.x.dim() != g.dim) throw InvalidInput("pair/graph dimension mismatch");
  std::optional<size_t> argmin;
  S best{};
  for (size_t i = 0; i < g.pairs.size(); ++i) {
    S gap = monotone_gap(p, g.pairs[i]);
    if (!argmin || gap < best) {
      argmin = i;
      best = gap;
    }
  }
  if (!argmin || nonneg(best, tol)) return Certificate<S>{true, {}, argmin ? best : S{}, ""};
  return Certificate<S>{false, {g.pairs[*argmin]}, best, ""};
}

template <class S>
OperatorGraph<S> invert(const OperatorGraph<S>& g) {
  OperatorGraph<S> out;
  out.dim = g.dim;
  out.pairs.reserve(g.pairs.size());
  for (const auto& p : g.pairs)
    out.pairs.push_back(GraphPair<S>{Point<S>{p.xstar.c}, Covector<S>{p.x.c}});
  return out;
}

// Pointwise sum on the intersection of domains: points are matched exactly
// in the rational backend and per-coordinate within tolerance in the
// floating one. Every covector combination at a shared point is emitted.
template <class S>
OperatorGraph<S> sum_graphs(const OperatorGraph<S>& s, const OperatorGraph<S>& t,
                            const Tolerance& tol = {}) {
  s.validate();
  t.validate();
  if (s.dim != t.dim) throw InvalidInput("sum of graphs of different dimension");
  OperatorGraph<S> out;
  out.dim = s.dim;
  for (const auto& ps : s.pairs)
    for (const auto& pt : t.pairs) {
      bool same = true;
      for (int i = 0; i < s.dim; ++i)
        if (!scalar_close(ps.x.c[i], pt.x.c[i], tol)) {
          same = false;
          break;
        }
      if (same)
        out.pairs.push_back(
            GraphPair<S>{ps.x, Covector<S>{add(ps.xstar.c, pt.xstar.c)}});
    }
  return out;
}

template <class S>
struct CycleReport {
  bool verdict = true;
  std::vector<size_t> cycle;  // node indices i1..im, closing with x0 = x_im
  S sum{};
};

// Head-weight cyclic sum sum_k <x_k*, x_k - x_{k-1}> along node indices
// (closing with x_0 = the last node).
template <class S>
S cycle_sum(const OperatorGraph<S>& g, const std::vector<size_t>& cyc) {
  S acc{};
  for (size_t k = 0; k < cyc.size(); ++k) {
    const auto& cur = g.pairs[cyc[k]];
    const auto& prev = g.pairs[cyc[(k + cyc.size() - 1) % cyc.size()]];
    acc += pairing(cur.xstar, Point<S>{sub(cur.x.c, prev.x.c)});
  }
  return acc;
}

inline constexpr int kCycleLengthCap = 6;
inline constexpr size_t kCycleGraphCap = 12;

// Exhaustive n-cyclic monotonicity check. Node sequences of every length
// 2..n with repetition are enumerated in lexicographic order; the first
// violating cycle is reported.
template <class S>
CycleReport<S> check_n_cyclic(const OperatorGraph<S>& g, int n, const Tolerance& tol = {}) {
  g.validate();
  if (g.empty()) throw InvalidInput("cyclic check requires a nonempty graph");
  if (n < 2) throw InvalidInput("n-cyclic monotonicity needs n >= 2");
  if (n > kCycleLengthCap)
    throw InvalidInput("cycle length exceeds the exhaustive cap; use check_cyclic");
  if (g.size() > kCycleGraphCap)
    throw InvalidInput("graph too large for exhaustive enumeration; use check_cyclic");
  size_t nodes = g.size();
  std::vector<size_t> cyc;
  for (int m = 2; m <= n; ++m) {
    cyc.assign(m, 0);
    while (true) {
      S s = cycle_sum(g, cyc);
      if (!nonneg(s, tol)) return CycleReport<S>{false, cyc, s};
      int k = m - 1;
      while (k >= 0 && cyc[k] + 1 == nodes) cyc[k--] = 0;
      if (k < 0) break;
      ++cyc[k];
    }
  }
  return CycleReport<S>{true, {}, S{}};
}

// Cyclic monotonicity of all orders via negative-cycle detection. The
// complete node digraph carries tail weights v(i->j) = <x_i*, x_j - x_i>;
// the graph is cyclically monotone iff no directed cycle has positive total
// v-weight, i.e. iff w = -v admits no negative cycle. A violating w-cycle,
// reversed, is a head-weight cycle with negative sum.
template <class S>
CycleReport<S> check_cyclic(const OperatorGraph<S>& g, const Tolerance& tol = {}) {
  g.validate();
  if (g.empty()) throw InvalidInput("cyclic check requires a nonempty graph");
  size_t n = g.size();
  auto weight = [&](size_t i, size_t j) {
    return pairing(g.pairs[i].xstar, Point<S>{sub(g.pairs[i].x.c, g.pairs[j].x.c)});
  };
  S slack = scalar_traits<S>::is_exact ? S{} : S(tol.abs);
  std::vector<S> dist(n, S{});
  std::vector<size_t> pred(n, n);
  size_t touched = n;
  for (size_t round = 0; round < n; ++round) {
    touched = n;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        S cand = dist[i] + weight(i, j);
        if (cand + slack < dist[j]) {
          dist[j] = cand;
          pred[j] = i;
          touched = j;
        }
      }
    if (touched == n) return CycleReport<S>{true, {}, S{}};
  }
  // A relaxation in round n proves a negative cycle reachable from `touched`
  // along predecessor links. The backward predecessor walk lists each node
  // before the tail of its incoming w-edge, which is exactly the reversed
  // w-cycle, i.e. the head-weight cycle the report promises.
  size_t v = touched;
  for (size_t step = 0; step < n; ++step) v = pred[v];
  std::vector<size_t> cyc;
  size_t u = v;
  do {
    cyc.push_back(u);
    u = pred[u];
  } while (u != v);
  S s = cycle_sum(g, cyc);
  return CycleReport<S>{false, cyc, s};
}

template <class S>
struct CoercivityProfile {
  std::vector<S> radii;
  std::vector<S> c_values;
  std::vector<bool> attained;  // false where no sample has ||x|| >= r
  std::vector<S> thresholds;
  bool coercive_on_sample = false;
};

// Empirical c(r) = inf{ <x*, x>/||x|| : ||x|| >= r } over the sampled graph.
// The sample is flagged coercive iff every supplied threshold is exceeded by
// some c value.
template <class S>
CoercivityProfile<S> coercivity_profile(const OperatorGraph<S>& g, const Norm& n,
                                        const std::vector<S>& radii,
                                        std::vector<S> thresholds = {}) {
  g.validate();
  if (radii.empty()) throw InvalidInput("coercivity profile needs at least one radius");
  for (size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > S(0))) throw InvalidInput("radii must be positive");
    if (i > 0 && !(radii[i - 1] < radii[i])) throw InvalidInput("radii must be increasing");
  }
  if (thresholds.empty())
    for (long long t : {1, 2, 4, 8, 16}) thresholds.push_back(scalar_traits<S>::from_int(t));
  CoercivityProfile<S> prof;
  prof.radii = radii;
  prof.thresholds = thresholds;
  std::vector<S> norms(g.size());
  std::vector<S> ratios(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    norms[i] = norm_eval(n, g.pairs[i].x);
    ratios[i] = norms[i] > S(0) ? S(pairing(g.pairs[i].xstar, g.pairs[i].x) / norms[i]) : S{};
  }
  for (const S& r : radii) {
    bool seen = false;
    S c{};
    for (size_t i = 0; i < g.size(); ++i) {
      if (norms[i] < r) continue;
      if (!seen || ratios[i] < c) c = ratios[i];
      seen = true;
    }
    prof.c_values.push_back(seen ? c : S{});
    prof.attained.push_back(seen);
  }
  if (!prof.attained.front())
    throw InvalidInput("no sampled pair reaches the first radius");
  prof.coercive_on_sample = true;
  for (const S& m : thresholds) {
    bool exceeded = false;
    for (size_t i = 0; i < prof.c_values.size(); ++i)
      if (!prof.attained[i] || prof.c_values[i] >= m) {
        exceeded = true;
        break;
      }
    if (!exceeded) prof.coercive_on_sample = false;
  }
  return prof;
}

template <class S>
struct HullRangeBound {
  Point<S> x;
  Covector<S> xstar;
  S bound{};
};

// Convex combination x = sum t_i x_i with the bound
//   B = sum_{i<j} t_i t_j <x_j* - x_i*, x_j - x_i>,
// which dominates <y* - x*, x - y> over the whole graph.
template <class S>
HullRangeBound<S> convex_hull_range_bound(const OperatorGraph<S>& g, const std::vector<S>& t,
                                          const std::vector<size_t>& idx,
                                          const Tolerance& tol = {}) {
  g.validate();
  if (t.size() != idx.size() || t.empty()) throw InvalidInput("weights must match index list");
  S total{};
  for (const S& w : t) {
    if (w < S(0)) throw InvalidInput("weights must be nonnegative");
    total += w;
  }
  if (!scalar_close(total, S(1), tol)) throw InvalidInput("weights must sum to 1");
  for (size_t i : idx)
    if (i >= g.size()) throw InvalidInput("node index out of range");
  std::vector<S> x(g.dim, S{}), xs(g.dim, S{});
  for (size_t k = 0; k < idx.size(); ++k) {
    x = add(x, scale(t[k], g.pairs[idx[k]].x.c));
    xs = add(xs, scale(t[k], g.pairs[idx[k]].xstar.c));
  }
  S bound{};
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      bound += t[i] * t[j] * monotone_gap(g.pairs[idx[j]], g.pairs[idx[i]]);
  return HullRangeBound<S>{Point<S>{x}, Covector<S>{xs}, bound};
}

// Point-to-set operator given as a callable; used by probes that consume an
// operator oracle rather than a finite graph.
template <class S>
using OperatorOracle = std::function<std::vector<Covector<S>>(const Point<S>&)>;

// Raw local-boundedness probe: for each radius, the max dual norm of the
// oracle over axis extremes plus seeded points of the ball. Values are
// reported as sampled, with no monotonicity enforced.
inline std::vector<double> local_bound_probe(const OperatorOracle<double>& op,
                                             const Point<double>& x,
                                             const std::vector<double>& radii, int samples,
                                             const Norm& n = Norm::euclidean(),
                                             uint64_t seed = 0) {
  if (radii.empty()) throw InvalidInput("local bound probe needs radii");
  for (size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0)) throw InvalidInput("radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw InvalidInput("radii must be decreasing");
  }
  int d = x.dim();
  std::vector<double> out;
  for (double r : radii) {
    std::vector<Point<double>> pts;
    for (int i = 0; i < d; ++i)
      for (int sgn : {1, -1}) {
        Point<double> p = x;
        std::vector<double> dir(d, 0.0);
        dir[i] = static_cast<double>(sgn);
        double unit = norm_eval(n, Point<double>{dir});
        p.c[i] += sgn * r / unit;
        pts.push_back(std::move(p));
      }
    Rng rng(seed);
    int fill = std::max(0, samples - static_cast<int>(pts.size()));
    for (int k = 0; k < fill; ++k) {
      Point<double> p = x;
      std::vector<double> dir(d);
      for (int i = 0; i < d; ++i) dir[i] = rng.uniform(-1.0, 1.0);
      double nn = norm_eval(n, Point<double>{dir});
      if (nn == 0) continue;
      double u = std::pow(rng.uniform(0.0, 1.0), 1.0 / d);
      for (int i = 0; i < d; ++i) p.c[i] += r * u * dir[i] / nn;
      pts.push_back(std::move(p));
    }
    double worst = 0;
    for (const auto& p : pts)
      for (const auto& cov : op(p)) worst = std::max(worst, dual_norm_eval(n, cov));
    out.push_back(worst);
  }
  return out;
}

// Monotone relatedness restricted to the part of the graph whose covectors
// lie in a convex covector window: the working form of local maximality.
template <class S>
Certificate<S> window_related(const GraphPair<S>& p, const OperatorGraph<S>& g,
                              const ConvexRegion<S>& window, const Tolerance& tol = {}) {
  g.validate();
  window.validate();
  if (window.dim != p.xstar.dim()) throw InvalidInput("window/covector dimension mismatch");
  if (!window.contains(p.xstar.c, tol))
    throw InvalidInput("the candidate covector lies outside the window");
  OperatorGraph<S> sub;
  sub.dim = g.dim;
  for (const auto& q : g.pairs)
    if (window.contains(q.xstar.c, tol)) sub.pairs.push_back(q);
  if (sub.empty()) return Certificate<S>{true, {}, S{}, "window subgraph empty"};
  return monotonically_related(p, sub, tol);
}

template <class S>
struct SeparationWitness {
  Point<S> b;
  Covector<S> bstar;
  S r{};
};

// Separation witness: from a strictly violating pair, the
// convex combination (b, b*) separates with margin
// r = -lambda(1-lambda) <z* - y*, z - y> > 0.
template <class S>
SeparationWitness<S> separation_witness(const Point<S>& z, const Covector<S>& zstar,
                                        const Point<S>& y, const Covector<S>& ystar,
                                        const S& lambda) {
  if (!(lambda > S(0) && lambda < S(1))) throw InvalidInput("lambda must lie in (0,1)");
  S gap = pairing(Covector<S>{sub(ystar.c, zstar.c)}, Point<S>{sub(y.c, z.c)});
  if (!(gap < S(0)))
    throw InvalidInput("precondition failed: <y* - z*, y - z> is nonnegative");
  S one_minus = S(1) - lambda;
  SeparationWitness<S> w;
  w.b = Point<S>{add(scale(lambda, z.c), scale(one_minus, y.c))};
  w.bstar = Covector<S>{add(scale(lambda, zstar.c), scale(one_minus, ystar.c))};
  w.r = -lambda * one_minus * gap;
  return w;
}

// Both sides of the convex-combination pairing identity, computed
// independently; they agree exactly in the rational backend.
template <class S>
std::pair<S, S> quadratic_identity(const Point<S>& u, const Point<S>& v, const Point<S>& x,
                                   const Covector<S>& ustar, const Covector<S>& vstar,
                                   const Covector<S>& xstar, const S& lambda) {
  if (lambda < S(0) || lambda > S(1)) throw InvalidInput("lambda must lie in [0,1]");
  S one_minus = S(1) - lambda;
  Covector<S> mix_star{sub(add(scale(lambda, ustar.c), scale(one_minus, vstar.c)), xstar.c)};
  Point<S> mix{sub(add(scale(lambda, u.c), scale(one_minus, v.c)), x.c)};
  S lhs = pairing(mix_star, mix);
  S rhs = lambda * monotone_gap(GraphPair<S>{u, ustar}, GraphPair<S>{x, xstar}) +
          one_minus * monotone_gap(GraphPair<S>{v, vstar}, GraphPair<S>{x, xstar}) -
          lambda * one_minus * monotone_gap(GraphPair<S>{u, ustar}, GraphPair<S>{v, vstar});
  return {lhs, rhs};
}

}  // namespace monokit

#endif
