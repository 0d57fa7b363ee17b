#ifndef MONOKIT_CONVEXOPS_HPP
#define MONOKIT_CONVEXOPS_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "monokit/convexfn.hpp"
#include "monokit/monotonicity.hpp"
#include "monokit/projection.hpp"

namespace monokit {

// Samples a closed-form function onto a grid so the discrete-subgradient
// machinery applies uniformly.
template <class S>
ConvexFunction<S> materialize_grid(const ConvexFunction<S>& f, const GridShape<S>& shape) {
  shape.validate();
  if (shape.dim() != f.dim) throw InvalidInput("probe grid dimension mismatch");
  std::vector<Ext<S>> vals(shape.node_count());
  for (size_t flat = 0; flat < vals.size(); ++flat)
    vals[flat] = cf_detail::eval_or_inf(f, shape.node(shape.unflatten(flat)));
  return ConvexFunction<S>::grid_fn(shape, std::move(vals));
}

template <class S>
GridShape<S> default_probe_shape(const Point<S>& center, const S& halfwidth, int steps_1d = 512) {
  GridShape<S> g;
  int d = center.dim();
  int steps = d == 1 ? steps_1d : (d == 2 ? 64 : 16);
  for (int a = 0; a < d; ++a) {
    g.lo.push_back(center.c[a] - halfwidth);
    g.hi.push_back(center.c[a] + halfwidth);
    g.steps.push_back(steps);
  }
  return g;
}

namespace cf_detail {

template <class S>
struct SlopeInterval {
  std::optional<S> lo, hi;
};

// One-sided chord slopes at a 1-d grid node; by convexity the adjacent
// chords are the binding constraints of the discrete subdifferential.
template <class S>
SlopeInterval<S> slope_interval_1d(const ConvexFunction<S>& g, size_t node) {
  SlopeInterval<S> iv;
  const auto& vals = g.values;
  S h = g.grid.step_size(0);
  if (node > 0 && vals[node - 1].is_finite() && vals[node].is_finite())
    iv.lo = (vals[node].v - vals[node - 1].v) / h;
  if (node + 1 < vals.size() && vals[node + 1].is_finite() && vals[node].is_finite())
    iv.hi = (vals[node + 1].v - vals[node].v) / h;
  return iv;
}

template <class S>
std::optional<S> min_norm_in(const SlopeInterval<S>& iv) {
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) return std::nullopt;
  S v{};
  if (iv.lo && *iv.lo > v) v = *iv.lo;
  if (iv.hi && *iv.hi < v) v = *iv.hi;
  return v;
}

template <class S>
std::optional<S> midpoint_of(const SlopeInterval<S>& iv) {
  if (iv.lo && iv.hi) {
    if (*iv.lo > *iv.hi) return std::nullopt;
    return (*iv.lo + *iv.hi) / S(2);
  }
  if (iv.lo) return *iv.lo;
  if (iv.hi) return *iv.hi;
  return std::nullopt;
}

// Minimal-norm covector of the discrete subdifferential at a grid node:
// Dykstra projection of the origin onto the halfspaces
// <u, y - z> <= f(y) - f(z).
inline std::optional<Covector<double>> min_norm_subgradient(const ConvexFunction<double>& g,
                                                            size_t node) {
  Point<double> z = g.grid.node(g.grid.unflatten(node));
  if (!g.values[node].is_finite()) return std::nullopt;
  double fz = g.values[node].v;
  if (g.dim == 1) {
    auto iv = slope_interval_1d(g, node);
    auto v = min_norm_in(iv);
    if (!v) return std::nullopt;
    return Covector<double>{{*v}};
  }
  std::vector<HalfspaceRow> rows;
  for (size_t flat = 0; flat < g.values.size(); ++flat) {
    if (flat == node || !g.values[flat].is_finite()) continue;
    Point<double> y = g.grid.node(g.grid.unflatten(flat));
    rows.push_back(HalfspaceRow{sub(y.c, z.c), g.values[flat].v - fz});
  }
  try {
    auto u = dykstra_halfspaces(rows, std::vector<double>(g.dim, 0.0), 1e-12, 20000);
    return Covector<double>{u};
  } catch (const SearchExhausted&) {
    return std::nullopt;
  }
}

template <class S>
std::optional<Covector<S>> representative_subgradient(const ConvexFunction<S>& f,
                                                      const ConvexFunction<S>& g, size_t node) {
  Point<S> z = g.grid.node(g.grid.unflatten(node));
  if (auto grad = smooth_gradient(f, z)) return grad;
  if (f.kind == FnKind::NormScaled) {
    bool at_zero = true;
    for (const S& v : z.c)
      if (v != S(0)) at_zero = false;
    if (at_zero) return Covector<S>{std::vector<S>(f.dim, S{})};
  }
  if (g.dim == 1) {
    auto mid = midpoint_of(slope_interval_1d(g, node));
    if (!mid) return std::nullopt;
    return Covector<S>{{*mid}};
  }
  if constexpr (!scalar_traits<S>::is_exact)
    return min_norm_subgradient(g, node);
  else
    return std::nullopt;
}

}  // namespace cf_detail

// ---------------------------------------------------------------------------
// Sum rule

template <class S>
struct SumRuleReport {
  bool in_sum_subdiff = false;
  bool decomposable = false;
  std::optional<std::pair<Covector<S>, Covector<S>>> parts;
  std::string note;
};

namespace cf_detail {

// Upper envelope of the affine forms u -> <u, y - x> - (f(y) - f(x)) over
// the probe set; its maximum is the probe-route subgradient violation.
template <class S>
struct ViolationEnvelope {
  std::vector<std::pair<std::vector<S>, S>> terms;  // (y - x, delta f)
  S lipschitz{};                                    // max l1 norm of y - x

  S eval(const std::vector<S>& u) const {
    bool found = false;
    S best{};
    for (const auto& [d, delta] : terms) {
      S v = dot(u, d) - delta;
      if (!found || v > best) {
        best = v;
        found = true;
      }
    }
    return found ? best : S{};
  }
};

template <class S>
std::vector<std::vector<S>> hull_2d(std::vector<std::vector<S>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const std::vector<S>& o, const std::vector<S>& a, const std::vector<S>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::vector<S>> hull;
  for (int pass = 0; pass < 2; ++pass) {
    size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= S(0))
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

template <class S>
ViolationEnvelope<S> build_envelope(const ConvexFunction<S>& f, const Point<S>& x) {
  Ext<S> fx = eval_or_inf(f, x);
  if (!fx.is_finite()) throw InvalidInput("envelope at a point outside dom(f)");
  ViolationEnvelope<S> env;
  bool all_zero_delta = true;
  std::vector<std::vector<S>> dirs;
  for (const auto& y : probes_of(f)) {
    Ext<S> fy = eval_or_inf(f, y);
    if (!fy.is_finite()) continue;
    std::vector<S> d = sub(y.c, x.c);
    S delta = fy.v - fx.v;
    if (delta != S(0)) all_zero_delta = false;
    env.terms.emplace_back(d, delta);
    dirs.push_back(std::move(d));
  }
  if (env.terms.empty()) throw InvalidInput("no finite probes for the envelope");
  // Indicator-style probe clouds in the plane reduce to their convex hull.
  if (all_zero_delta && f.dim == 2 && env.terms.size() > 8) {
    env.terms.clear();
    for (auto& p : hull_2d(dirs)) env.terms.emplace_back(std::move(p), S{});
  }
  for (const auto& [d, delta] : env.terms) {
    S l1{};
    for (const S& v : d) l1 += abs_val(v);
    env.lipschitz = std::max(env.lipschitz, l1);
  }
  return env;
}

}  // namespace cf_detail

template <class S>
struct SplitSearchOptions {
  S box_halfwidth = scalar_traits<S>::from_int(8);
  S resolution = scalar_traits<S>::from_ratio(1, 1000);
};

// Tests x* in d(f+g)(x) and searches for a split x* = u* + v* with
// u* in df(x), v* in dg(x). The split search is a branch-and-bound over the
// covector box: a cell is pruned when the Lipschitz lower bound of the
// combined probe violation exceeds the slack, so an exhausted search is a
// certificate that no split exists at the stated box and resolution.
template <class S>
SumRuleReport<S> sum_rule_check(const ConvexFunction<S>& f, const ConvexFunction<S>& g,
                                const Point<S>& x, const Covector<S>& xstar,
                                const Tolerance& tol = {},
                                const SplitSearchOptions<S>& opts = {}) {
  if (f.dim != g.dim || x.dim() != f.dim || xstar.dim() != f.dim)
    throw InvalidInput("sum rule dimension mismatch");
  Ext<S> fx = cf_detail::eval_or_inf(f, x);
  Ext<S> gx = cf_detail::eval_or_inf(g, x);
  if (!fx.is_finite() || !gx.is_finite())
    throw InvalidInput("x must lie in dom(f) and dom(g)");

  SumRuleReport<S> rep;
  ConvexFunction<S> fg = ConvexFunction<S>::sum({f, g});
  rep.in_sum_subdiff = subgradient_test(fg, x, xstar, tol).verdict;

  auto accept = [&](const Covector<S>& u) {
    Covector<S> v{sub(xstar.c, u.c)};
    return subgradient_test(f, x, u, tol).verdict && subgradient_test(g, x, v, tol).verdict;
  };

  // A differentiable summand pins its part of the split, deciding the
  // question outright: df(x) is then the singleton {grad f(x)}.
  if (auto grad_f = cf_detail::smooth_gradient(f, x)) {
    if (accept(*grad_f)) {
      rep.decomposable = true;
      rep.parts = {*grad_f, Covector<S>{sub(xstar.c, grad_f->c)}};
      rep.note = "split: gradient of f";
    } else {
      rep.decomposable = false;
      rep.note = "f differentiable at x; the unique candidate split fails";
    }
    return rep;
  }
  if (auto grad_g = cf_detail::smooth_gradient(g, x)) {
    Covector<S> u{sub(xstar.c, grad_g->c)};
    if (accept(u)) {
      rep.decomposable = true;
      rep.parts = {u, *grad_g};
      rep.note = "split: gradient of g";
    } else {
      rep.decomposable = false;
      rep.note = "g differentiable at x; the unique candidate split fails";
    }
    return rep;
  }

  auto env_f = cf_detail::build_envelope(f, x);
  auto env_g = cf_detail::build_envelope(g, x);
  S slack = scalar_traits<S>::is_exact ? S{} : S(tol.abs);
  S lip = env_f.lipschitz + env_g.lipschitz;
  int d = f.dim;

  struct Cell {
    std::vector<S> center;
    S half;
  };
  std::deque<Cell> stack;
  stack.push_back(Cell{std::vector<S>(d, S{}), opts.box_halfwidth});
  auto total = [&](const std::vector<S>& u) {
    return std::max(env_f.eval(u), env_g.eval(sub(xstar.c, u)));
  };
  while (!stack.empty()) {
    Cell cell = stack.back();
    stack.pop_back();
    S t = total(cell.center);
    if (nonpos(S(t - slack), tol)) {
      Covector<S> u{cell.center};
      if (accept(u)) {
        rep.decomposable = true;
        rep.parts = {u, Covector<S>{sub(xstar.c, u.c)}};
        rep.note = "split found by box search";
        return rep;
      }
    }
    if (t - lip * cell.half > slack) continue;  // no point of the cell can pass
    if (cell.half <= opts.resolution / S(2)) continue;
    S h = cell.half / S(2);
    for (size_t mask = 0; mask < (size_t(1) << d); ++mask) {
      Cell child{cell.center, h};
      for (int a = 0; a < d; ++a) child.center[a] += ((mask >> a) & 1) ? h : S(-h);
      stack.push_back(std::move(child));
    }
  }
  rep.decomposable = false;
  rep.note = "no split in the covector box of halfwidth " +
             std::to_string(scalar_traits<S>::to_double(opts.box_halfwidth)) +
             " at resolution " + std::to_string(scalar_traits<S>::to_double(opts.resolution));
  return rep;
}

// ---------------------------------------------------------------------------
// Approximate-subgradient searches (floating backend)

struct BrResult {
  Point<double> x;
  Covector<double> xstar;
  std::string note;
};

// Finds a certified subgradient pair with ||x - x0|| < beta and ||x*|| < alpha
// given f(x0) < inf f + alpha*beta over the probe grid. An Ekeland descent on
// f + lambda ||. - current|| guarantees a qualifying endpoint; among all
// qualifying nodes of the beta-ball the one of least f is returned.
inline BrResult br_search(const ConvexFunction<double>& f, const Point<double>& x0, double alpha,
                          double beta, const Tolerance& tol = {},
                          std::optional<GridShape<double>> probe = std::nullopt) {
  if (!(alpha > 0) || !(beta > 0)) throw InvalidInput("alpha and beta must be positive");
  ConvexFunction<double> g =
      f.kind == FnKind::Grid ? f : materialize_grid(f, probe ? *probe : default_probe_shape(x0, 2 * beta));
  size_t n = g.values.size();
  Ext<double> fx0 = cf_detail::eval_or_inf(g, x0);
  if (!fx0.is_finite()) throw InvalidInput("x0 lies outside the sampled domain");
  double fmin = 0;
  bool seen = false;
  for (size_t i = 0; i < n; ++i) {
    if (!g.values[i].is_finite()) continue;
    if (!seen || g.values[i].v < fmin) fmin = g.values[i].v;
    seen = true;
  }
  if (!seen) throw InvalidInput("empty sampled domain");
  double gap = fx0.v - fmin;
  if (!(gap < alpha * beta))
    throw InvalidInput("precondition failed: f(x0) is not within alpha*beta of the sampled infimum");
  double eps = gap <= 0 ? alpha * beta / 2 : (gap + alpha * beta) / 2;
  double lambda = std::sqrt((eps / beta) * alpha);

  // Ekeland descent; each move strictly decreases f, so it terminates.
  Point<double> current = x0;
  double fcur = fx0.v;
  for (int iter = 0; iter < 1000000; ++iter) {
    std::optional<size_t> best;
    double best_score = fcur;
    for (size_t i = 0; i < n; ++i) {
      if (!g.values[i].is_finite()) continue;
      Point<double> y = g.grid.node(g.grid.unflatten(i));
      double score = g.values[i].v + lambda * euclid_norm(sub(y.c, current.c));
      if (score < best_score - 1e-15) {
        best_score = score;
        best = i;
      }
    }
    if (!best) break;
    current = g.grid.node(g.grid.unflatten(*best));
    fcur = g.values[*best].v;
  }

  // Qualifying nodes scanned in ascending f order; the first certified hit
  // is the least-f selection.
  std::vector<size_t> order;
  for (size_t i = 0; i < n; ++i)
    if (g.values[i].is_finite()) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return g.values[a].v < g.values[b].v; });
  for (size_t i : order) {
    Point<double> z = g.grid.node(g.grid.unflatten(i));
    if (!(euclid_norm(sub(z.c, x0.c)) < beta)) continue;
    std::optional<Covector<double>> u;
    if (g.dim == 1) {
      auto mn = cf_detail::min_norm_in(cf_detail::slope_interval_1d(g, i));
      if (mn) u = Covector<double>{{*mn}};
    } else {
      u = cf_detail::min_norm_subgradient(g, i);
    }
    if (!u) continue;
    if (!(euclid_norm(u->c) < alpha)) continue;
    if (!subgradient_test(g, z, *u, tol).verdict) continue;
    return BrResult{z, *u, "probes: " + std::to_string(n) + " grid nodes"};
  }
  throw SearchExhausted("no qualifying subgradient pair on the probe grid", gap);
}

// Descent witness: z with f(z) < f(x) and a certified z* in df(z) making
// <z*, x - z> > 0. Nodes are scanned in ascending f order with the
// interval-midpoint subgradient selection.
inline BrResult descent_witness(const ConvexFunction<double>& f, const Point<double>& x,
                                const Tolerance& tol = {},
                                std::optional<GridShape<double>> probe = std::nullopt) {
  ConvexFunction<double> g =
      f.kind == FnKind::Grid ? f : materialize_grid(f, probe ? *probe : default_probe_shape(x, 4.0));
  Ext<double> fx = cf_detail::eval_or_inf(g, x);
  if (!fx.is_finite()) throw InvalidInput("x lies outside the sampled domain");
  size_t n = g.values.size();
  std::vector<size_t> order;
  for (size_t i = 0; i < n; ++i)
    if (g.values[i].is_finite()) order.push_back(i);
  if (order.empty()) throw InvalidInput("empty sampled domain");
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return g.values[a].v < g.values[b].v; });
  if (!(g.values[order.front()].v < fx.v - tol.abs))
    throw InvalidInput("x already minimizes f on the probe grid");
  for (size_t i : order) {
    if (!(g.values[i].v < fx.v - tol.abs)) break;
    Point<double> z = g.grid.node(g.grid.unflatten(i));
    auto zstar = cf_detail::representative_subgradient(f, g, i);
    if (!zstar) continue;
    if (!(pairing(*zstar, Point<double>{sub(x.c, z.c)}) > tol.abs)) continue;
    if (!subgradient_test(g, z, *zstar, tol).verdict) continue;
    return BrResult{z, *zstar, ""};
  }
  throw SearchExhausted("no descent witness on the probe grid", 0.0);
}

// ---------------------------------------------------------------------------
// Potential reconstruction for cyclically monotone graphs

template <class S>
struct PotentialReconstruction {
  size_t base = 0;
  std::vector<S> node_values;
  std::vector<std::pair<Covector<S>, S>> affine_pieces;  // slope, intercept

  // f(x) = max over pieces of <slope, x> + intercept
  S eval(const Point<S>& x) const {
    S best = pairing(affine_pieces[0].first, x) + affine_pieces[0].second;
    for (size_t i = 1; i < affine_pieces.size(); ++i)
      best = std::max(best, pairing(affine_pieces[i].first, x) + affine_pieces[i].second);
    return best;
  }
};

template <class S>
struct PotentialResult {
  bool ok = false;
  PotentialReconstruction<S> reconstruction;
  CycleReport<S> cycle;  // the violating cycle when not cyclically monotone
};

// Builds f with T subset of df by the chain-supremum construction: node
// values are longest-path values from `base` under tail weights
// v(i->j) = <x_i*, x_j - x_i>, finite because no cycle has positive weight.
template <class S>
PotentialResult<S> reconstruct_potential(const OperatorGraph<S>& g, size_t base,
                                         const Tolerance& tol = {}) {
  g.validate();
  if (base >= g.size()) throw InvalidInput("base node index out of range");
  CycleReport<S> cyc = check_cyclic(g, tol);
  if (!cyc.verdict) return PotentialResult<S>{false, {}, cyc};
  size_t n = g.size();
  auto vweight = [&](size_t i, size_t j) {
    return pairing(g.pairs[i].xstar, Point<S>{sub(g.pairs[j].x.c, g.pairs[i].x.c)});
  };
  // Longest path from base; seeded with the direct edges so every node holds
  // a genuine chain value from the start.
  std::vector<S> val(n);
  for (size_t j = 0; j < n; ++j) val[j] = j == base ? S{} : vweight(base, j);
  val[base] = S{};
  for (size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        S cand = val[i] + vweight(i, j);
        if (cand > val[j]) {
          val[j] = cand;
          changed = true;
        }
      }
    if (!changed) break;
  }
  // The base keeps value zero: cycles through base have nonpositive weight.
  // The floating backend tolerates roundoff up to n*abs before giving up.
  double drift = scalar_traits<S>::to_double(val[base]);
  double allowed = scalar_traits<S>::is_exact ? 0.0 : static_cast<double>(n) * tol.abs;
  if (drift > allowed)
    throw SearchExhausted("longest-path values failed to stabilize", drift);
  val[base] = S{};
  PotentialResult<S> out;
  out.ok = true;
  out.reconstruction.base = base;
  out.reconstruction.node_values = val;
  for (size_t j = 0; j < n; ++j)
    out.reconstruction.affine_pieces.emplace_back(
        g.pairs[j].xstar, val[j] - pairing(g.pairs[j].xstar, g.pairs[j].x));
  return out;
}

// ---------------------------------------------------------------------------
// Minty-style solvability probe (Euclidean J)

struct MaximalityProbeResult {
  Certificate<double> cert;
  std::vector<Point<double>> solutions;
};

// For each sampled y*, solves y* in df(x) + x by minimizing
// f + ||.||^2/2 - <y*, .> over the grid; optimality of the discrete argmin
// is certified by testing 0 in the discrete subdifferential of the
// objective. An argmin on the probe-box face cannot be certified and raises
// an error carrying the residual.
inline MaximalityProbeResult maximality_probe(const ConvexFunction<double>& f,
                                              const std::vector<Covector<double>>& dual_samples,
                                              const Tolerance& tol = {},
                                              std::optional<GridShape<double>> probe = std::nullopt) {
  if (f.dim > 2) throw InvalidInput("maximality probe supports one or two dimensions");
  ConvexFunction<double> g =
      f.kind == FnKind::Grid
          ? f
          : materialize_grid(f, probe ? *probe : default_probe_shape(Point<double>{std::vector<double>(f.dim, 0.0)}, 8.0, 1024));
  MaximalityProbeResult out;
  double worst = 0;
  for (const auto& ystar : dual_samples) {
    if (ystar.dim() != f.dim) throw InvalidInput("dual sample dimension mismatch");
    Matrix<double> id(f.dim, std::vector<double>(f.dim, 0.0));
    for (int i = 0; i < f.dim; ++i) id[i][i] = 1.0;
    std::vector<double> negy(ystar.c.size());
    for (size_t i = 0; i < negy.size(); ++i) negy[i] = -ystar.c[i];
    ConvexFunction<double> objective = ConvexFunction<double>::sum(
        {g, ConvexFunction<double>::quadratic(id, negy, 0.0)});
    std::optional<size_t> best;
    double best_val = 0;
    for (size_t i = 0; i < g.values.size(); ++i) {
      if (!g.values[i].is_finite()) continue;
      Point<double> p = g.grid.node(g.grid.unflatten(i));
      double v = g.values[i].v + 0.5 * euclid_norm_sq(p.c) - dot(ystar.c, p.c);
      if (!best || v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (!best) throw InvalidInput("empty sampled domain");
    auto idx = g.grid.unflatten(*best);
    for (int a = 0; a < f.dim; ++a)
      if (idx[a] == 0 || idx[a] == g.grid.steps[a])
        throw SearchExhausted("argmin on the probe-box face; enlarge the grid", best_val);
    Point<double> xhat = g.grid.node(idx);
    Certificate<double> cert =
        subgradient_test(objective, xhat, Covector<double>{std::vector<double>(f.dim, 0.0)}, tol);
    if (!cert.verdict)
      throw SearchExhausted("grid too coarse to certify optimality",
                            scalar_traits<double>::to_double(cert.value));
    worst = std::max(worst, cert.value);
    out.solutions.push_back(xhat);
  }
  out.cert = Certificate<double>{true, {}, worst,
                                 "all " + std::to_string(dual_samples.size()) + " samples solvable"};
  return out;
}

// Resolvent of a subdifferential: argmin of f + (lambda/2)||.||^2 - <y*, .>
// over the grid.
inline Point<double> resolvent_fn(const ConvexFunction<double>& f, double lambda,
                                  const Covector<double>& ystar,
                                  std::optional<GridShape<double>> probe = std::nullopt) {
  if (!(lambda > 0)) throw InvalidInput("resolvent requires lambda > 0");
  double reach = (dual_norm_eval(Norm::euclidean(), ystar) + 1.0) * 2.0 / lambda;
  ConvexFunction<double> g =
      f.kind == FnKind::Grid
          ? f
          : materialize_grid(f, probe ? *probe
                                      : default_probe_shape(Point<double>{std::vector<double>(f.dim, 0.0)},
                                                            reach, 16384));
  std::optional<size_t> best;
  double best_val = 0;
  for (size_t i = 0; i < g.values.size(); ++i) {
    if (!g.values[i].is_finite()) continue;
    Point<double> p = g.grid.node(g.grid.unflatten(i));
    double v = g.values[i].v + 0.5 * lambda * euclid_norm_sq(p.c) - dot(ystar.c, p.c);
    if (!best || v < best_val) {
      best = i;
      best_val = v;
    }
  }
  if (!best) throw InvalidInput("empty sampled domain");
  return g.grid.node(g.grid.unflatten(*best));
}

}  // namespace monokit

#endif
