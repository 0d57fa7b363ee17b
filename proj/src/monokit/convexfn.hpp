#ifndef MONOKIT_CONVEXFN_HPP
#define MONOKIT_CONVEXFN_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monokit/dense.hpp"
#include "monokit/fm.hpp"
#include "monokit/linalg.hpp"
#include "monokit/norm.hpp"
#include "monokit/region.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

// Extended scalar: finite value, or +/- infinity.
template <class S>
struct Ext {
  S v{};
  int inf = 0;  // -1, 0, +1

  static Ext finite(S val) { return Ext{std::move(val), 0}; }
  static Ext plus_inf() { return Ext{S{}, 1}; }
  static Ext minus_inf() { return Ext{S{}, -1}; }
  bool is_finite() const { return inf == 0; }
};

template <class S>
Ext<S> ext_add(const Ext<S>& a, const Ext<S>& b) {
  if (a.inf == 0 && b.inf == 0) return Ext<S>::finite(a.v + b.v);
  if (a.inf + b.inf == 0 && a.inf != 0) throw InvalidInput("indeterminate inf - inf");
  return a.inf != 0 ? a : b;
}

// Rectangular grid: steps[i] cells per axis, steps[i]+1 nodes, values stored
// row-major with the last axis fastest.
template <class S>
struct GridShape {
  std::vector<S> lo, hi;
  std::vector<int> steps;

  int dim() const { return static_cast<int>(lo.size()); }
  size_t node_count() const {
    size_t n = 1;
    for (int s : steps) n *= static_cast<size_t>(s) + 1;
    return n;
  }
  S step_size(int axis) const { return (hi[axis] - lo[axis]) / S(steps[axis]); }
  void validate() const {
    if (lo.empty() || hi.size() != lo.size() || steps.size() != lo.size())
      throw InvalidInput("grid descriptor sizes disagree");
    for (size_t i = 0; i < lo.size(); ++i) {
      if (!(lo[i] < hi[i])) throw InvalidInput("grid box must have lo < hi");
      if (steps[i] < 1) throw InvalidInput("grid needs at least one cell per axis");
    }
  }
  std::vector<int> unflatten(size_t flat) const {
    std::vector<int> idx(steps.size());
    for (int a = static_cast<int>(steps.size()) - 1; a >= 0; --a) {
      size_t n = static_cast<size_t>(steps[a]) + 1;
      idx[a] = static_cast<int>(flat % n);
      flat /= n;
    }
    return idx;
  }
  size_t flatten(const std::vector<int>& idx) const {
    size_t flat = 0;
    for (size_t a = 0; a < steps.size(); ++a)
      flat = flat * (static_cast<size_t>(steps[a]) + 1) + static_cast<size_t>(idx[a]);
    return flat;
  }
  Point<S> node(const std::vector<int>& idx) const {
    std::vector<S> c(lo.size());
    for (size_t a = 0; a < lo.size(); ++a) c[a] = lo[a] + S(idx[a]) * step_size(static_cast<int>(a));
    return Point<S>{c};
  }
};

enum class FnKind { Grid, Quadratic, NormScaled, Indicator, Support, AffineShift, Sum };

// Convex function in closed form or as grid samples with a +inf sentinel.
template <class S>
struct ConvexFunction {
  FnKind kind = FnKind::Quadratic;

  GridShape<S> grid;
  std::vector<Ext<S>> values;

  Matrix<S> q;  // f = x^T q x / 2 + <b, x> + c, q symmetric PSD
  std::vector<S> b;
  S c{};

  Norm norm;  // f = scale * ||x||
  S scale{};

  std::shared_ptr<ConvexRegion<S>> set;  // indicator

  std::vector<Covector<S>> support_points;  // f = max <a, x>

  std::shared_ptr<ConvexFunction<S>> base;  // f = base(x - shift_x) + <shift_a, x> + c
  Point<S> shift_x;
  Covector<S> shift_a;

  std::vector<std::shared_ptr<ConvexFunction<S>>> parts;  // f = sum of parts

  int dim = 0;

  static ConvexFunction grid_fn(GridShape<S> shape, std::vector<Ext<S>> vals) {
    ConvexFunction f;
    f.kind = FnKind::Grid;
    f.dim = shape.dim();
    f.grid = std::move(shape);
    f.values = std::move(vals);
    return f;
  }
  static ConvexFunction quadratic(Matrix<S> q, std::vector<S> b, S c) {
    ConvexFunction f;
    f.kind = FnKind::Quadratic;
    f.dim = static_cast<int>(b.size());
    f.q = std::move(q);
    f.b = std::move(b);
    f.c = std::move(c);
    return f;
  }
  static ConvexFunction norm_scaled(Norm n, S scale, int dim) {
    ConvexFunction f;
    f.kind = FnKind::NormScaled;
    f.dim = dim;
    f.norm = n;
    f.scale = std::move(scale);
    return f;
  }
  static ConvexFunction indicator(ConvexRegion<S> region) {
    ConvexFunction f;
    f.kind = FnKind::Indicator;
    f.dim = region.dim;
    f.set = std::make_shared<ConvexRegion<S>>(std::move(region));
    return f;
  }
  static ConvexFunction support(std::vector<Covector<S>> pts) {
    ConvexFunction f;
    f.kind = FnKind::Support;
    if (pts.empty()) throw InvalidInput("support function needs at least one covector");
    f.dim = pts[0].dim();
    f.support_points = std::move(pts);
    return f;
  }
  static ConvexFunction affine_shift(ConvexFunction basefn, Point<S> x0, Covector<S> a, S c) {
    ConvexFunction f;
    f.kind = FnKind::AffineShift;
    f.dim = basefn.dim;
    f.base = std::make_shared<ConvexFunction<S>>(std::move(basefn));
    f.shift_x = std::move(x0);
    f.shift_a = std::move(a);
    f.c = std::move(c);
    return f;
  }
  static ConvexFunction sum(std::vector<ConvexFunction> fs) {
    if (fs.empty()) throw InvalidInput("sum of zero functions");
    ConvexFunction f;
    f.kind = FnKind::Sum;
    f.dim = fs[0].dim;
    for (auto& g : fs) {
      if (g.dim != f.dim) throw InvalidInput("sum of functions of different dimension");
      f.parts.push_back(std::make_shared<ConvexFunction<S>>(std::move(g)));
    }
    return f;
  }

  void validate(const Tolerance& tol = {}) const;
};

namespace cf_detail {

inline long long rational_floor(const Rational& r) {
  boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q.template convert_to<long long>();
}
inline long long floor_of(double v) { return static_cast<long long>(std::floor(v)); }
inline long long floor_of(const Rational& v) { return rational_floor(v); }

}  // namespace cf_detail

// Multilinear interpolation on the grid. A corner at +inf forces +inf unless
// its interpolation weight is exactly zero.
template <class S>
Ext<S> grid_eval(const GridShape<S>& g, const std::vector<Ext<S>>& values, const Point<S>& x) {
  int d = g.dim();
  if (x.dim() != d) throw InvalidInput("grid eval dimension mismatch");
  std::vector<int> base(d);
  std::vector<S> frac(d);
  for (int a = 0; a < d; ++a) {
    if (x.c[a] < g.lo[a] || x.c[a] > g.hi[a]) throw InvalidInput("point outside the grid box");
    S u = (x.c[a] - g.lo[a]) / g.step_size(a);
    long long i0 = cf_detail::floor_of(u);
    if (i0 >= g.steps[a]) i0 = g.steps[a] - 1;
    if (i0 < 0) i0 = 0;
    base[a] = static_cast<int>(i0);
    frac[a] = u - S(i0);
  }
  S total{};
  bool hit_inf = false;
  for (size_t corner = 0; corner < (size_t(1) << d); ++corner) {
    S w = S(1);
    std::vector<int> idx(d);
    for (int a = 0; a < d; ++a) {
      bool high = (corner >> a) & 1;
      idx[a] = base[a] + (high ? 1 : 0);
      w = w * (high ? frac[a] : S(1) - frac[a]);
    }
    if (w == S(0)) continue;
    const Ext<S>& val = values[g.flatten(idx)];
    if (!val.is_finite()) {
      hit_inf = true;
      continue;
    }
    total += w * val.v;
  }
  if (hit_inf) return Ext<S>::plus_inf();
  return Ext<S>::finite(total);
}

template <class S>
Ext<S> eval(const ConvexFunction<S>& f, const Point<S>& x);

namespace cf_detail {

template <class S>
Ext<S> eval_or_inf(const ConvexFunction<S>& f, const Point<S>& x) {
  // Probe loops treat points outside a grid box as +inf rather than erroring.
  if (f.kind == FnKind::Grid) {
    for (int a = 0; a < f.dim; ++a)
      if (x.c[a] < f.grid.lo[a] || x.c[a] > f.grid.hi[a]) return Ext<S>::plus_inf();
    return grid_eval(f.grid, f.values, x);
  }
  if (f.kind == FnKind::Sum) {
    Ext<S> acc = Ext<S>::finite(S{});
    for (const auto& p : f.parts) acc = ext_add(acc, eval_or_inf(*p, x));
    return acc;
  }
  if (f.kind == FnKind::AffineShift) {
    Ext<S> inner = eval_or_inf(*f.base, Point<S>{sub(x.c, f.shift_x.c)});
    return ext_add(inner, Ext<S>::finite(pairing(f.shift_a, x) + f.c));
  }
  return eval(f, x);
}

}  // namespace cf_detail

template <class S>
Ext<S> eval(const ConvexFunction<S>& f, const Point<S>& x) {
  if (x.dim() != f.dim) throw InvalidInput("function eval dimension mismatch");
  switch (f.kind) {
    case FnKind::Grid:
      return grid_eval(f.grid, f.values, x);
    case FnKind::Quadratic: {
      S val = dot(f.b, x.c) + f.c;
      std::vector<S> qx = mat_vec(f.q, x.c);
      val += dot(qx, x.c) / S(2);
      return Ext<S>::finite(val);
    }
    case FnKind::NormScaled:
      return Ext<S>::finite(f.scale * norm_eval(f.norm, x));
    case FnKind::Indicator:
      return f.set->contains(x.c) ? Ext<S>::finite(S{}) : Ext<S>::plus_inf();
    case FnKind::Support: {
      S best = pairing(f.support_points[0], x);
      for (size_t i = 1; i < f.support_points.size(); ++i)
        best = std::max(best, pairing(f.support_points[i], x));
      return Ext<S>::finite(best);
    }
    case FnKind::AffineShift:
      return cf_detail::eval_or_inf(f, x);
    case FnKind::Sum:
      return cf_detail::eval_or_inf(f, x);
  }
  throw InvalidInput("unknown function kind");
}

template <class S>
void ConvexFunction<S>::validate(const Tolerance& tol) const {
  if (dim <= 0) throw InvalidInput("function must have positive dimension");
  switch (kind) {
    case FnKind::Grid: {
      grid.validate();
      if (values.size() != grid.node_count())
        throw InvalidInput("grid value array does not match the node count");
      // Midpoint convexity along every axis, infinity treated as dominant.
      for (size_t flat = 0; flat < values.size(); ++flat) {
        auto idx = grid.unflatten(flat);
        for (int a = 0; a < dim; ++a) {
          if (idx[a] == 0 || idx[a] == grid.steps[a]) continue;
          auto left = idx, right = idx;
          --left[a];
          ++right[a];
          const Ext<S>& l = values[grid.flatten(left)];
          const Ext<S>& r = values[grid.flatten(right)];
          const Ext<S>& m = values[flat];
          if (!l.is_finite() || !r.is_finite()) {
            if (!m.is_finite()) continue;
            continue;  // an infinite side makes the midpoint bound vacuous
          }
          if (!m.is_finite())
            throw InvalidInput("grid domain is not convex along an axis");
          if (!nonpos(S(S(2) * m.v - l.v - r.v), tol))
            throw InvalidInput("grid values violate midpoint convexity along an axis");
        }
      }
      break;
    }
    case FnKind::Quadratic: {
      validate_square(q, "quadratic matrix");
      if (static_cast<int>(q.size()) != dim || static_cast<int>(b.size()) != dim)
        throw InvalidInput("quadratic sizes disagree");
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j)
          if (!scalar_close(q[i][j], q[j][i], tol))
            throw InvalidInput("quadratic matrix must be symmetric");
      // PSD checked numerically; exact inputs are converted for the test.
      Matrix<double> qd(q.size(), std::vector<double>(q.size()));
      double mag = 0;
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) {
          qd[i][j] = scalar_traits<S>::to_double(q[i][j]);
          mag = std::max(mag, std::fabs(qd[i][j]));
        }
      for (double ev : symmetric_eigenvalues(qd))
        if (ev < -1e-9 * (1.0 + mag))
          throw InvalidInput("quadratic matrix is not positive semidefinite");
      break;
    }
    case FnKind::NormScaled:
      norm.validate(dim);
      if (scale < S(0)) throw InvalidInput("norm scale must be nonnegative");
      break;
    case FnKind::Indicator:
      set->validate();
      break;
    case FnKind::Support:
      for (const auto& a : support_points)
        if (a.dim() != dim) throw InvalidInput("support covector dimension mismatch");
      break;
    case FnKind::AffineShift:
      base->validate(tol);
      if (shift_x.dim() != dim || shift_a.dim() != dim)
        throw InvalidInput("affine shift dimension mismatch");
      break;
    case FnKind::Sum:
      for (const auto& p : parts) p->validate(tol);
      break;
  }
}

// Probe points used to realize "for all y" quantifiers at desk scale:
// grid nodes with finite value, region vertices and axis extremes, shifted
// recursively through sums.
template <class S>
void collect_probes(const ConvexFunction<S>& f, std::vector<Point<S>>& out) {
  switch (f.kind) {
    case FnKind::Grid: {
      for (size_t flat = 0; flat < f.values.size(); ++flat)
        if (f.values[flat].is_finite()) out.push_back(f.grid.node(f.grid.unflatten(flat)));
      break;
    }
    case FnKind::Indicator: {
      const auto& r = *f.set;
      if (r.kind == RegionKind::Ball) {
        out.push_back(Point<S>{r.center});
        for (int i = 0; i < r.dim; ++i)
          for (int sgn : {-1, 1}) {
            auto c = r.center;
            c[i] += S(sgn) * r.radius;
            if (r.contains(c)) out.push_back(Point<S>{c});
          }
      } else {
        if (r.kind == RegionKind::Box && r.dim > 12)
          throw InvalidInput("indicator probe enumeration capped at dimension 12");
        for (auto& v : r.vertices()) out.push_back(Point<S>{v});
        out.push_back(Point<S>{r.reference_point()});
      }
      break;
    }
    case FnKind::AffineShift: {
      std::vector<Point<S>> inner;
      collect_probes(*f.base, inner);
      for (auto& p : inner) out.push_back(Point<S>{add(p.c, f.shift_x.c)});
      break;
    }
    case FnKind::Sum:
      for (const auto& p : f.parts) collect_probes(*p, out);
      break;
    default:
      break;  // closed forms are handled analytically
  }
}

template <class S>
std::vector<Point<S>> probes_of(const ConvexFunction<S>& f) {
  std::vector<Point<S>> out;
  collect_probes(f, out);
  return out;
}

namespace cf_detail {

// Gradient where the closed form is differentiable at x; nullopt otherwise.
template <class S>
std::optional<Covector<S>> smooth_gradient(const ConvexFunction<S>& f, const Point<S>& x) {
  if (f.kind == FnKind::Quadratic)
    return Covector<S>{add(mat_vec(f.q, x.c), f.b)};
  if (f.kind == FnKind::AffineShift) {
    auto g = smooth_gradient(*f.base, Point<S>{sub(x.c, f.shift_x.c)});
    if (!g) return std::nullopt;
    return Covector<S>{add(g->c, f.shift_a.c)};
  }
  if (f.kind == FnKind::Sum) {
    std::vector<S> acc(f.dim, S{});
    for (const auto& p : f.parts) {
      auto g = smooth_gradient(*p, x);
      if (!g) return std::nullopt;
      acc = add(acc, g->c);
    }
    return Covector<S>{acc};
  }
  if constexpr (!scalar_traits<S>::is_exact) {
    if (f.kind == FnKind::NormScaled) {
      bool at_zero = true;
      for (const S& v : x.c)
        if (v != S(0)) at_zero = false;
      if (at_zero) return std::nullopt;
      const Norm& n = f.norm;
      if (n.kind == NormKind::Euclidean) {
        double nx = euclid_norm(x.c);
        return Covector<S>{scale(S(f.scale / nx), x.c)};
      }
      if (n.kind == NormKind::WeightedL2) {
        double nx = norm_eval(n, x);
        std::vector<S> g(x.c.size());
        for (size_t i = 0; i < g.size(); ++i) g[i] = f.scale * n.weights[i] * x.c[i] / nx;
        return Covector<S>{g};
      }
      if (n.kind == NormKind::Lp) {
        double nx = norm_eval(n, x);
        if (nx == 0) return std::nullopt;
        std::vector<S> g(x.c.size());
        for (size_t i = 0; i < g.size(); ++i) {
          double xi = x.c[i];
          g[i] = f.scale * std::pow(std::fabs(xi), n.p - 1.0) * (xi >= 0 ? 1.0 : -1.0) /
                 std::pow(nx, n.p - 1.0);
        }
        return Covector<S>{g};
      }
    }
  }
  return std::nullopt;
}

// A direction y along which <x*, y> > scale * ||y||, used to witness a dual
// norm bound violation.
inline std::vector<double> dual_attainer(const Norm& n, const std::vector<double>& xstar) {
  switch (n.kind) {
    case NormKind::Euclidean:
      return xstar;
    case NormKind::WeightedL2: {
      std::vector<double> y(xstar.size());
      for (size_t i = 0; i < y.size(); ++i) y[i] = xstar[i] / n.weights[i];
      return y;
    }
    case NormKind::Lp: {
      double q = n.p / (n.p - 1.0);
      std::vector<double> y(xstar.size());
      for (size_t i = 0; i < y.size(); ++i)
        y[i] = std::pow(std::fabs(xstar[i]), q - 1.0) * (xstar[i] >= 0 ? 1.0 : -1.0);
      return y;
    }
    case NormKind::Sup: {
      std::vector<double> y(xstar.size());
      for (size_t i = 0; i < y.size(); ++i) y[i] = xstar[i] > 0 ? 1.0 : (xstar[i] < 0 ? -1.0 : 0.0);
      return y;
    }
  }
  throw InvalidInput("unknown norm kind");
}
inline std::vector<Rational> dual_attainer(const Norm& n, const std::vector<Rational>& xstar) {
  if (n.kind != NormKind::Sup)
    throw InvalidInput("exact dual attainer supports only the sup norm");
  std::vector<Rational> y(xstar.size());
  for (size_t i = 0; i < y.size(); ++i)
    y[i] = xstar[i] > 0 ? Rational(1) : (xstar[i] < 0 ? Rational(-1) : Rational(0));
  return y;
}

}  // namespace cf_detail

// Subgradient membership: <x*, y - x> <= f(y) - f(x) for all y, realized
// analytically for closed forms and over the probe set otherwise. A false
// verdict carries a witnessing y (stored as witness.x) and the positive
// violation margin.
template <class S>
Certificate<S> subgradient_test(const ConvexFunction<S>& f, const Point<S>& x,
                                const Covector<S>& xstar, const Tolerance& tol = {},
                                const std::vector<Point<S>>* extra_probes = nullptr) {
  Ext<S> fx = cf_detail::eval_or_inf(f, x);
  if (!fx.is_finite()) throw InvalidInput("subgradient test at a point outside dom(f)");

  auto fail = [&](Point<S> y, S margin) {
    return Certificate<S>{false, {GraphPair<S>{std::move(y), xstar}}, margin, ""};
  };

  // Differentiable sums and shifts resolve analytically: df(x) = {grad f(x)}.
  if (f.kind == FnKind::Sum || f.kind == FnKind::AffineShift) {
    if (auto grad = cf_detail::smooth_gradient(f, x)) {
      bool ok = true;
      for (int i = 0; i < f.dim; ++i)
        if (!scalar_close(grad->c[i], xstar.c[i], tol)) ok = false;
      if (ok) return Certificate<S>{true, {}, S{}, "analytic: gradient"};
      std::vector<S> d = sub(xstar.c, grad->c);
      for (int k = 0; k <= 40; ++k) {
        S t = scalar_traits<S>::from_ratio(1, 1LL << k);
        Point<S> y{add(x.c, scale(t, d))};
        Ext<S> fy = cf_detail::eval_or_inf(f, y);
        if (!fy.is_finite()) continue;
        S margin = pairing(xstar, Point<S>{sub(y.c, x.c)}) - (fy.v - fx.v);
        if (margin > S(0) && !nonpos(margin, tol)) return fail(std::move(y), margin);
      }
      throw SearchExhausted("gradient mismatch but no violating step found", 0.0);
    }
  }

  switch (f.kind) {
    case FnKind::Quadratic: {
      Covector<S> g{add(mat_vec(f.q, x.c), f.b)};
      bool ok = true;
      for (int i = 0; i < f.dim; ++i)
        if (!scalar_close(g.c[i], xstar.c[i], tol)) ok = false;
      if (ok) return Certificate<S>{true, {}, S{}, "analytic: gradient"};
      std::vector<S> d = sub(xstar.c, g.c);
      S dd = dot(d, d);
      S qd = dot(mat_vec(f.q, d), d);
      S t = qd > S(0) ? S(dd / qd) : S(1);
      Point<S> y{add(x.c, scale(t, d))};
      S margin = pairing(xstar, Point<S>{sub(y.c, x.c)}) - (eval(f, y).v - fx.v);
      return fail(std::move(y), margin);
    }
    case FnKind::NormScaled: {
      S dual = dual_norm_eval(f.norm, xstar);
      if (!nonneg(S(f.scale - dual), tol)) {
        std::vector<S> yc = cf_detail::dual_attainer(f.norm, xstar.c);
        Point<S> y{yc};
        S margin = pairing(xstar, y) - f.scale * norm_eval(f.norm, y);
        // Separating from x rather than 0 keeps the inequality form.
        Point<S> yy{add(x.c, yc)};
        S m2 = pairing(xstar, Point<S>{sub(yy.c, x.c)}) - (eval(f, yy).v - fx.v);
        if (m2 > S(0)) return fail(std::move(yy), m2);
        return fail(std::move(y), margin);
      }
      S align = pairing(xstar, x) - f.scale * norm_eval(f.norm, x);
      if (!nonneg(align, tol)) {
        // y = 0 violates exactly by the alignment defect.
        Point<S> y{std::vector<S>(f.dim, S{})};
        return fail(std::move(y), S(-align));
      }
      return Certificate<S>{true, {}, S{}, "analytic: dual ball and alignment"};
    }
    case FnKind::Indicator: {
      S sup = f.set->support(xstar.c);
      S gap = sup - pairing(xstar, x);
      if (nonpos(gap, tol))
        return Certificate<S>{true, {}, S{}, "analytic: support attains at x"};
      Point<S> y{f.set->support_point(xstar.c)};
      S margin = pairing(xstar, Point<S>{sub(y.c, x.c)});
      return fail(std::move(y), margin);
    }
    case FnKind::Support: {
      // x* must lie in the convex hull of the covectors attaining sigma_A(x).
      S best = pairing(f.support_points[0], x);
      for (const auto& a : f.support_points) best = std::max(best, pairing(a, x));
      std::vector<size_t> attain;
      for (size_t i = 0; i < f.support_points.size(); ++i)
        if (scalar_close(pairing(f.support_points[i], x), best, tol)) attain.push_back(i);
      size_t m = attain.size();
      LinearSystem<S> sys(static_cast<int>(m));
      for (size_t i = 0; i < m; ++i) {
        std::vector<S> row(m, S{});
        row[i] = S(-1);
        sys.add(row, S{});  // lambda_i >= 0
      }
      std::vector<S> ones(m, S(1));
      sys.add(ones, S(1));
      sys.add_ge(ones, S(1));
      for (int c = 0; c < f.dim; ++c) {
        std::vector<S> row(m);
        for (size_t i = 0; i < m; ++i) row[i] = f.support_points[attain[i]].c[c];
        sys.add(row, xstar.c[c]);
        sys.add_ge(row, xstar.c[c]);
      }
      if (fm_feasible(sys))
        return Certificate<S>{true, {}, S{}, "analytic: hull membership over attaining covectors"};
      // Search a separating direction among axis, attainer and difference
      // directions, then push far enough to expose the violation.
      std::vector<std::vector<S>> dirs;
      for (int i = 0; i < f.dim; ++i)
        for (int sgn : {1, -1}) {
          std::vector<S> e(f.dim, S{});
          e[i] = S(sgn);
          dirs.push_back(e);
        }
      for (const auto& a : f.support_points) dirs.push_back(sub(xstar.c, a.c));
      for (const auto& d : dirs) {
        for (int k = 0; k <= 24; ++k) {
          S t = scalar_traits<S>::from_int(1LL << k);
          Point<S> y{add(x.c, scale(t, d))};
          S margin = pairing(xstar, Point<S>{sub(y.c, x.c)}) - (eval(f, y).v - fx.v);
          if (margin > S(0) && !nonpos(margin, tol)) return fail(std::move(y), margin);
        }
      }
      throw SearchExhausted("hull membership failed but no separating probe was found", 0.0);
    }
    case FnKind::AffineShift: {
      Covector<S> inner_star{sub(xstar.c, f.shift_a.c)};
      Point<S> inner_x{sub(x.c, f.shift_x.c)};
      Certificate<S> cert = subgradient_test(*f.base, inner_x, inner_star, tol);
      if (!cert.verdict && !cert.witnesses.empty()) {
        Point<S> y{add(cert.witnesses[0].x.c, f.shift_x.c)};
        cert.witnesses[0] = GraphPair<S>{std::move(y), xstar};
      }
      return cert;
    }
    case FnKind::Grid:
    case FnKind::Sum: {
      std::vector<Point<S>> probes = probes_of(f);
      if (extra_probes)
        probes.insert(probes.end(), extra_probes->begin(), extra_probes->end());
      if (probes.empty()) {
        // closed forms without intrinsic nodes: dyadic axis ladder around x
        for (int i = 0; i < f.dim; ++i)
          for (int k = -4; k <= 20; ++k)
            for (int sgn : {-1, 1}) {
              S t = k >= 0 ? scalar_traits<S>::from_ratio(sgn, 1LL << k)
                           : scalar_traits<S>::from_int(sgn * (1LL << -k));
              Point<S> y = x;
              y.c[i] += t;
              probes.push_back(std::move(y));
            }
      }
      bool found = false;
      S worst{};
      Point<S> arg;
      for (const auto& y : probes) {
        Ext<S> fy = cf_detail::eval_or_inf(f, y);
        if (!fy.is_finite()) continue;
        S margin = pairing(xstar, Point<S>{sub(y.c, x.c)}) - (fy.v - fx.v);
        if (!found || margin > worst) {
          found = true;
          worst = margin;
          arg = y;
        }
      }
      if (!found) throw InvalidInput("probe set contains no point of dom(f)");
      std::string note = "probes: " + std::to_string(probes.size()) + " points";
      if (nonpos(worst, tol)) return Certificate<S>{true, {}, worst, note};
      Certificate<S> cert = fail(std::move(arg), worst);
      cert.note = note;
      return cert;
    }
  }
  throw InvalidInput("unknown function kind");
}

// Closed-form conjugate value f*(y) where available.
template <class S>
std::optional<Ext<S>> fenchel_value(const ConvexFunction<S>& f, const Covector<S>& y) {
  switch (f.kind) {
    case FnKind::Quadratic: {
      auto z = solve_consistent(f.q, sub(y.c, f.b));
      if (!z) return Ext<S>::plus_inf();
      // Consistency: q z = y - b must hold (solve_consistent guarantees it).
      S val = dot(sub(y.c, f.b), *z) / S(2) - f.c;
      return Ext<S>::finite(val);
    }
    case FnKind::NormScaled: {
      S dual = dual_norm_eval(f.norm, y);
      Tolerance tol;
      return nonneg(S(f.scale - dual), tol) ? Ext<S>::finite(S{}) : Ext<S>::plus_inf();
    }
    case FnKind::Indicator:
      return Ext<S>::finite(f.set->support(y.c));
    case FnKind::Support: {
      size_t m = f.support_points.size();
      LinearSystem<S> sys(static_cast<int>(m));
      for (size_t i = 0; i < m; ++i) {
        std::vector<S> row(m, S{});
        row[i] = S(-1);
        sys.add(row, S{});
      }
      std::vector<S> ones(m, S(1));
      sys.add(ones, S(1));
      sys.add_ge(ones, S(1));
      for (int c = 0; c < f.dim; ++c) {
        std::vector<S> row(m);
        for (size_t i = 0; i < m; ++i) row[i] = f.support_points[i].c[c];
        sys.add(row, y.c[c]);
        sys.add_ge(row, y.c[c]);
      }
      return fm_feasible(sys) ? Ext<S>::finite(S{}) : Ext<S>::plus_inf();
    }
    case FnKind::AffineShift: {
      auto inner = fenchel_value(*f.base, Covector<S>{sub(y.c, f.shift_a.c)});
      if (!inner) return std::nullopt;
      if (!inner->is_finite()) return inner;
      S val = inner->v + dot(sub(y.c, f.shift_a.c), f.shift_x.c) - f.c;
      return Ext<S>::finite(val);
    }
    default:
      return std::nullopt;
  }
}

// Point attaining (or escaping toward) the conjugate supremum; the natural
// witness for epsilon-subdifferential failures.
template <class S>
std::optional<Point<S>> fenchel_attainer(const ConvexFunction<S>& f, const Covector<S>& y) {
  switch (f.kind) {
    case FnKind::Quadratic: {
      auto z = solve_consistent(f.q, sub(y.c, f.b));
      if (!z) return std::nullopt;
      return Point<S>{*z};
    }
    case FnKind::Indicator: {
      if constexpr (scalar_traits<S>::is_exact) {
        if (f.set->kind == RegionKind::Ball) return std::nullopt;
      }
      return Point<S>{f.set->support_point(y.c)};
    }
    case FnKind::AffineShift: {
      auto inner = fenchel_attainer(*f.base, Covector<S>{sub(y.c, f.shift_a.c)});
      if (!inner) return std::nullopt;
      return Point<S>{add(inner->c, f.shift_x.c)};
    }
    default:
      return std::nullopt;
  }
}

// Discrete Legendre transform onto a covector grid. Closed forms use their
// exact conjugates pointwise; grid and sum inputs take the discrete
// supremum over the primal probe nodes (exact only for the grid restriction).
template <class S>
ConvexFunction<S> fenchel_conjugate(const ConvexFunction<S>& f, const GridShape<S>& dual_grid) {
  dual_grid.validate();
  if (dual_grid.dim() != f.dim) throw InvalidInput("dual grid dimension mismatch");
  bool closed_form = fenchel_value(f, Covector<S>{std::vector<S>(f.dim, S{})}).has_value();
  std::vector<Point<S>> probes;
  if (!closed_form) {
    probes = probes_of(f);
    if (probes.empty())
      throw InvalidInput("conjugate needs a closed form or a grid-backed domain");
  }
  std::vector<Ext<S>> vals(dual_grid.node_count());
  for (size_t flat = 0; flat < vals.size(); ++flat) {
    Point<S> ynode = dual_grid.node(dual_grid.unflatten(flat));
    Covector<S> y{ynode.c};
    if (closed_form) {
      vals[flat] = *fenchel_value(f, y);
    } else {
      bool found = false;
      S best{};
      for (const auto& p : probes) {
        Ext<S> fp = cf_detail::eval_or_inf(f, p);
        if (!fp.is_finite()) continue;
        S cand = dot(y.c, p.c) - fp.v;
        if (!found || cand > best) {
          found = true;
          best = cand;
        }
      }
      if (!found) throw InvalidInput("conjugate of a function with empty sampled domain");
      vals[flat] = Ext<S>::finite(best);
    }
  }
  return ConvexFunction<S>::grid_fn(dual_grid, std::move(vals));
}

// Right-hand directional derivative d+f(x)(y). Closed forms are analytic;
// grid-backed functions use dyadic difference quotients, which convexity
// makes nonincreasing as t decreases. Divergence is declared when the
// quotient magnitude passes 1e12 or the dyadic differences fail to contract
// all the way down to the cell scale.
template <class S>
Ext<S> directional_derivative(const ConvexFunction<S>& f, const Point<S>& x, const Point<S>& y,
                              const Tolerance& tol = {}) {
  Ext<S> fx = cf_detail::eval_or_inf(f, x);
  if (!fx.is_finite()) throw InvalidInput("directional derivative at a point outside dom(f)");
  switch (f.kind) {
    case FnKind::Quadratic:
      return Ext<S>::finite(dot(add(mat_vec(f.q, x.c), f.b), y.c));
    case FnKind::NormScaled: {
      bool at_zero = true;
      for (const S& v : x.c)
        if (v != S(0)) at_zero = false;
      if (at_zero) return Ext<S>::finite(f.scale * norm_eval(f.norm, y));
      if (f.norm.kind == NormKind::Sup) {
        S nx = norm_eval(f.norm, x);
        bool seen = false;
        S best{};
        for (int i = 0; i < f.dim; ++i) {
          if (!scalar_close(abs_val(x.c[i]), nx, tol)) continue;
          S cand = x.c[i] > S(0) ? y.c[i] : S(-y.c[i]);
          if (!seen || cand > best) {
            best = cand;
            seen = true;
          }
        }
        return Ext<S>::finite(f.scale * best);
      }
      auto g = cf_detail::smooth_gradient(f, x);
      if (!g) throw InvalidInput("directional derivative unavailable for this norm");
      return Ext<S>::finite(pairing(*g, y));
    }
    case FnKind::Support: {
      S nx = pairing(f.support_points[0], x);
      for (const auto& a : f.support_points) nx = std::max(nx, pairing(a, x));
      bool seen = false;
      S best{};
      for (const auto& a : f.support_points) {
        if (!scalar_close(pairing(a, x), nx, tol)) continue;
        S cand = pairing(a, y);
        if (!seen || cand > best) {
          best = cand;
          seen = true;
        }
      }
      return Ext<S>::finite(best);
    }
    case FnKind::Indicator: {
      for (int k = 0; k <= 40; ++k) {
        S t = scalar_traits<S>::from_ratio(1, 1LL << k);
        // membership slack scales with t, so outward rays are never accepted
        Tolerance scaled{tol.abs * scalar_traits<S>::to_double(t), tol.rel};
        if (f.set->contains(add(x.c, scale(t, y.c)), scaled)) return Ext<S>::finite(S{});
      }
      return Ext<S>::plus_inf();
    }
    case FnKind::AffineShift: {
      Ext<S> inner =
          directional_derivative(*f.base, Point<S>{sub(x.c, f.shift_x.c)}, y, tol);
      return ext_add(inner, Ext<S>::finite(pairing(f.shift_a, y)));
    }
    case FnKind::Grid:
    case FnKind::Sum: {
      if constexpr (scalar_traits<S>::is_exact)
        throw InvalidInput("numeric directional derivative requires the floating backend");
      else {
        // Largest step staying in every grid box along the ray.
        double tmax = 1.0;
        double tmin = 0.0;
        std::vector<const ConvexFunction<S>*> stack{&f};
        while (!stack.empty()) {
          const auto* g = stack.back();
          stack.pop_back();
          if (g->kind == FnKind::Sum)
            for (const auto& p : g->parts) stack.push_back(p.get());
          if (g->kind == FnKind::AffineShift) stack.push_back(g->base.get());
          if (g->kind != FnKind::Grid) continue;
          for (int a = 0; a < g->dim; ++a) {
            if (y.c[a] == 0) continue;
            double room = y.c[a] > 0 ? g->grid.hi[a] - x.c[a] : x.c[a] - g->grid.lo[a];
            tmax = std::min(tmax, room / std::fabs(y.c[a]));
            // below one cell the interpolant is linear and quotients freeze,
            // which would mask divergence
            double cell = scalar_traits<S>::to_double(g->grid.step_size(a)) / std::fabs(y.c[a]);
            tmin = std::max(tmin, cell);
          }
        }
        if (tmax <= 0) return Ext<S>::plus_inf();
        double t = tmax;
        std::vector<double> quotients;
        for (int k = 0; k < 60 && t >= tmin * 0.999; ++k, t /= 2) {
          Ext<S> ft = cf_detail::eval_or_inf(f, Point<S>{add(x.c, scale(t, y.c))});
          if (!ft.is_finite()) {
            quotients.clear();
            continue;
          }
          quotients.push_back((ft.v - fx.v) / t);
          size_t m = quotients.size();
          if (m >= 2 && std::fabs(quotients[m - 1]) > 1e12)
            return quotients[m - 1] > 0 ? Ext<S>::plus_inf() : Ext<S>::minus_inf();
          if (m >= 2 &&
              std::fabs(quotients[m - 1] - quotients[m - 2]) <=
                  tol.abs + tol.rel * std::fabs(quotients[m - 1]))
            return Ext<S>::finite(quotients[m - 1]);
        }
        if (quotients.empty()) return Ext<S>::plus_inf();
        size_t m = quotients.size();
        if (m >= 4) {
          // Dyadic differences that refuse to contract at the finest scale
          // mean the quotient still diverges there.
          int noncontracting = 0;
          for (size_t i = m - 3; i < m; ++i) {
            double d1 = std::fabs(quotients[i] - quotients[i - 1]);
            double d0 = i >= 2 ? std::fabs(quotients[i - 1] - quotients[i - 2]) : d1;
            if (d0 > 0 && d1 >= 0.9 * d0) ++noncontracting;
          }
          if (noncontracting == 3)
            return quotients[m - 1] < quotients[0] ? Ext<S>::minus_inf() : Ext<S>::plus_inf();
        }
        return Ext<S>::finite(quotients[m - 1]);
      }
    }
  }
  throw InvalidInput("unknown function kind");
}

// Epsilon-subdifferential membership, via the conjugate characterization
// f(x) + f*(x*) <= <x*, x> + eps when the conjugate is closed-form, and the
// direct probe inequality otherwise. eps = 0 reduces to subgradient_test.
template <class S>
Certificate<S> eps_subdifferential_test(const ConvexFunction<S>& f, const Point<S>& x,
                                        const Covector<S>& xstar, const S& eps,
                                        const Tolerance& tol = {}) {
  if (eps < S(0)) throw InvalidInput("epsilon must be nonnegative");
  Ext<S> fx = cf_detail::eval_or_inf(f, x);
  if (!fx.is_finite()) throw InvalidInput("epsilon-subgradient test outside dom(f)");
  auto conj = fenchel_value(f, xstar);
  if (conj) {
    if (!conj->is_finite())
      return Certificate<S>{false, {}, S{}, "conjugate infinite at x*"};
    S gap = fx.v + conj->v - pairing(xstar, x);
    if (nonpos(S(gap - eps), tol))
      return Certificate<S>{true, {}, gap, "conjugate route"};
    Certificate<S> cert{false, {}, S(gap - eps), "conjugate route"};
    if (auto y = fenchel_attainer(f, xstar))
      cert.witnesses.push_back(GraphPair<S>{*y, xstar});
    return cert;
  }
  std::vector<Point<S>> probes = probes_of(f);
  if (probes.empty()) throw InvalidInput("no probe points available for this function");
  bool found = false;
  S worst{};
  Point<S> arg;
  for (const auto& y : probes) {
    Ext<S> fy = cf_detail::eval_or_inf(f, y);
    if (!fy.is_finite()) continue;
    S margin = pairing(xstar, Point<S>{sub(y.c, x.c)}) - (fy.v - fx.v) - eps;
    if (!found || margin > worst) {
      found = true;
      worst = margin;
      arg = y;
    }
  }
  if (!found) throw InvalidInput("probe set contains no point of dom(f)");
  std::string note = "probes: " + std::to_string(probes.size()) + " points";
  if (nonpos(worst, tol)) return Certificate<S>{true, {}, worst, note};
  return Certificate<S>{false, {GraphPair<S>{arg, xstar}}, worst, note};
}

}  // namespace monokit

#endif
