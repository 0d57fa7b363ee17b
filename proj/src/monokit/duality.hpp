#ifndef MONOKIT_DUALITY_HPP
#define MONOKIT_DUALITY_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "monokit/dense.hpp"
#include "monokit/linalg.hpp"
#include "monokit/norm.hpp"
#include "monokit/projection.hpp"
#include "monokit/region.hpp"
#include "monokit/scalar.hpp"
#include "monokit/step1d.hpp"

namespace monokit {

struct DualityMapResult {
  Covector<double> selection;
  std::vector<Covector<double>> face;  // extreme covectors when set-valued
  bool single_valued = true;
};

// Duality map J(x) = {x* : <x*, x> = ||x||^2, ||x*||_* = ||x||}. Single
// valued for Euclidean, weighted-l2 and Lp (1 < p < inf); the sup norm
// returns the face spanned by the max-attaining coordinates, with the
// barycenter as selection.
inline DualityMapResult duality_map(const Norm& n, const Point<double>& x) {
  n.validate(x.dim());
  int d = x.dim();
  DualityMapResult out;
  bool zero = true;
  for (double v : x.c)
    if (v != 0) zero = false;
  if (zero) {
    out.selection = Covector<double>{std::vector<double>(d, 0.0)};
    return out;
  }
  switch (n.kind) {
    case NormKind::Euclidean:
      out.selection = Covector<double>{x.c};
      return out;
    case NormKind::WeightedL2: {
      std::vector<double> j(d);
      for (int i = 0; i < d; ++i) j[i] = n.weights[i] * x.c[i];
      out.selection = Covector<double>{j};
      return out;
    }
    case NormKind::Lp: {
      double nx = norm_eval(n, x);
      double factor = std::pow(nx, 2.0 - n.p);
      std::vector<double> j(d);
      for (int i = 0; i < d; ++i)
        j[i] = factor * std::pow(std::fabs(x.c[i]), n.p - 1.0) * (x.c[i] >= 0 ? 1.0 : -1.0);
      out.selection = Covector<double>{j};
      return out;
    }
    case NormKind::Sup: {
      double nx = norm_eval(n, x);
      out.single_valued = false;
      std::vector<double> bary(d, 0.0);
      for (int i = 0; i < d; ++i) {
        if (std::fabs(std::fabs(x.c[i]) - nx) > 1e-12 * (1.0 + nx)) continue;
        std::vector<double> e(d, 0.0);
        e[i] = nx * (x.c[i] >= 0 ? 1.0 : -1.0);
        out.face.push_back(Covector<double>{e});
        bary[i] = e[i];
      }
      for (double& v : bary) v /= static_cast<double>(out.face.size());
      out.selection = Covector<double>{bary};
      if (out.face.size() == 1) out.single_valued = true;
      return out;
    }
  }
  throw InvalidInput("unknown norm kind");
}

struct ProjectResult {
  Point<double> point;
  double residual = 0;
  int sweeps = 0;
};

// Euclidean metric projection onto a convex region: closed form for boxes
// and balls, Dykstra-corrected cyclic halfspace projections otherwise.
inline ProjectResult project(const ConvexRegion<double>& c, const Point<double>& x,
                             double residual_tol = 1e-12, int max_sweeps = 100000) {
  c.validate();
  if (x.dim() != c.dim) throw InvalidInput("projection dimension mismatch");
  switch (c.kind) {
    case RegionKind::Box: {
      Point<double> p = x;
      for (int i = 0; i < c.dim; ++i) p.c[i] = std::clamp(p.c[i], c.lo[i], c.hi[i]);
      return ProjectResult{p, 0.0, 0};
    }
    case RegionKind::Ball: {
      if (c.norm.kind != NormKind::Euclidean)
        throw InvalidInput("metric projection requires a Euclidean ball");
      std::vector<double> d = sub(x.c, c.center);
      double nd = euclid_norm(d);
      if (nd <= c.radius) return ProjectResult{x, 0.0, 0};
      Point<double> p{c.center};
      for (int i = 0; i < c.dim; ++i) p.c[i] += c.radius * d[i] / nd;
      return ProjectResult{p, 0.0, 0};
    }
    case RegionKind::Halfspaces: {
      std::vector<HalfspaceRow> rows;
      for (const auto& h : c.rows) rows.push_back(HalfspaceRow{h.a, h.b});
      auto p = dykstra_halfspaces(rows, x.c, residual_tol, max_sweeps);
      double worst = 0;
      for (const auto& h : c.rows) worst = std::max(worst, dot(h.a, p) - h.b);
      return ProjectResult{Point<double>{p}, std::max(worst, 0.0), 0};
    }
  }
  throw InvalidInput("unknown region kind");
}

// Variational inequality <x - Px, z - Px> <= 0 for the given x against
// probes z in C, plus the strong monotonicity inequality
// <x - y, Px - Py> >= ||Px - Py||^2 over pairs drawn from {x} and the probes.
inline Certificate<double> projection_vi_check(const ConvexRegion<double>& c,
                                               const Point<double>& x,
                                               const std::vector<Point<double>>& probes,
                                               const Tolerance& tol = {}) {
  c.validate();
  for (const auto& z : probes)
    if (!c.contains(z.c, tol)) throw InvalidInput("a probe lies outside the region");
  Point<double> px = project(c, x).point;
  for (const auto& z : probes) {
    double v = dot(sub(x.c, px.c), sub(z.c, px.c));
    if (!nonpos(v, tol))
      return Certificate<double>{false, {GraphPair<double>{z, Covector<double>{px.c}}}, v,
                                 "variational inequality failed"};
  }
  std::vector<Point<double>> pool = probes;
  pool.push_back(x);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      Point<double> pa = project(c, pool[i]).point;
      Point<double> pb = project(c, pool[j]).point;
      double lhs = dot(sub(pool[i].c, pool[j].c), sub(pa.c, pb.c));
      double rhs = euclid_norm_sq(sub(pa.c, pb.c));
      if (!nonneg(lhs - rhs, tol))
        return Certificate<double>{false,
                                   {GraphPair<double>{pool[i], Covector<double>{pa.c}},
                                    GraphPair<double>{pool[j], Covector<double>{pb.c}}},
                                   lhs - rhs,
                                   "strong monotonicity of the projection failed"};
    }
  return Certificate<double>{true, {}, 0.0, ""};
}

using MapOracle = std::function<Point<double>(const Point<double>&)>;

struct NonexpansiveReport {
  Certificate<double> cert;
  std::vector<Point<double>> fixed_points;
};

// Checks ||U(x) - U(y)|| <= ||x - y|| and monotonicity of I - U on all
// sample pairs; samples with ||x - U(x)|| <= tol.abs are reported as fixed
// points (0 in the range of I - U iff U has a fixed point).
inline NonexpansiveReport nonexpansive_residual(const MapOracle& u, const ConvexRegion<double>& c,
                                                const std::vector<Point<double>>& samples,
                                                const Tolerance& tol = {}) {
  c.validate();
  NonexpansiveReport rep;
  std::vector<Point<double>> ux;
  for (const auto& s : samples) {
    if (!c.contains(s.c, tol)) throw InvalidInput("a sample lies outside the region");
    Point<double> img = u(s);
    if (!c.contains(img.c, tol))
      throw InvalidInput("the map leaves the region on a sample");
    ux.push_back(img);
  }
  for (size_t i = 0; i < samples.size(); ++i) {
    double fix = euclid_norm(sub(samples[i].c, ux[i].c));
    if (fix <= tol.abs + 1e-12) rep.fixed_points.push_back(samples[i]);
  }
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j) {
      double dxy = euclid_norm(sub(samples[i].c, samples[j].c));
      double duv = euclid_norm(sub(ux[i].c, ux[j].c));
      if (!nonneg(dxy - duv, tol)) {
        rep.cert = Certificate<double>{false,
                                       {GraphPair<double>{samples[i], Covector<double>{ux[i].c}},
                                        GraphPair<double>{samples[j], Covector<double>{ux[j].c}}},
                                       duv - dxy,
                                       "nonexpansiveness failed"};
        return rep;
      }
      std::vector<double> ri = sub(samples[i].c, ux[i].c);
      std::vector<double> rj = sub(samples[j].c, ux[j].c);
      double mono = dot(sub(ri, rj), sub(samples[i].c, samples[j].c));
      if (!nonneg(mono, tol)) {
        rep.cert = Certificate<double>{false,
                                       {GraphPair<double>{samples[i], Covector<double>{ri}},
                                        GraphPair<double>{samples[j], Covector<double>{rj}}},
                                       mono,
                                       "residual monotonicity failed"};
        return rep;
      }
    }
  rep.cert = Certificate<double>{true, {}, 0.0, ""};
  return rep;
}

// Positivity of a linear operator on samples, with the minimum eigenvalue of
// the symmetric part as the analytic certificate.
inline Certificate<double> positive_check(const Matrix<double>& a,
                                          const std::vector<Point<double>>& samples,
                                          const Tolerance& tol = {}) {
  validate_square(a, "operator matrix");
  size_t n = a.size();
  Matrix<double> sym(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) sym[i][j] = (a[i][j] + a[j][i]) / 2.0;
  double min_eig = 0;
  bool first = true;
  for (double ev : symmetric_eigenvalues(sym)) {
    if (first || ev < min_eig) min_eig = ev;
    first = false;
  }
  for (const auto& x : samples) {
    if (x.dim() != static_cast<int>(n)) throw InvalidInput("sample dimension mismatch");
    std::vector<double> ax = mat_vec(a, x.c);
    double v = dot(ax, x.c);
    if (!nonneg(v, tol))
      return Certificate<double>{false, {GraphPair<double>{x, Covector<double>{ax}}}, v,
                                 "min symmetric-part eigenvalue " + std::to_string(min_eig)};
  }
  return Certificate<double>{true, {}, min_eig,
                             "min symmetric-part eigenvalue " + std::to_string(min_eig)};
}

}  // namespace monokit

#endif
