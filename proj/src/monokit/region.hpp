#ifndef MONOKIT_REGION_HPP
#define MONOKIT_REGION_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "monokit/dense.hpp"
#include "monokit/fm.hpp"
#include "monokit/linalg.hpp"
#include "monokit/norm.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

enum class RegionKind { Box, Ball, Halfspaces };

// Nonempty closed convex region: axis box, norm ball, or an intersection of
// halfspaces <a, x> <= b. Also used for covector windows, where `norm` is
// read as a norm on covector coordinates.
template <class S>
struct ConvexRegion {
  RegionKind kind = RegionKind::Box;
  int dim = 0;

  std::vector<S> lo, hi;  // Box

  Norm norm;  // Ball
  S radius{};
  std::vector<S> center;

  struct Halfspace {
    std::vector<S> a;
    S b{};
  };
  std::vector<Halfspace> rows;

  static ConvexRegion box(std::vector<S> lo, std::vector<S> hi) {
    ConvexRegion r;
    r.kind = RegionKind::Box;
    r.dim = static_cast<int>(lo.size());
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    return r;
  }
  static ConvexRegion ball(Norm n, S radius, std::vector<S> center) {
    ConvexRegion r;
    r.kind = RegionKind::Ball;
    r.dim = static_cast<int>(center.size());
    r.norm = n;
    r.radius = std::move(radius);
    r.center = std::move(center);
    return r;
  }
  static ConvexRegion halfspaces(int dim, std::vector<Halfspace> rows) {
    ConvexRegion r;
    r.kind = RegionKind::Halfspaces;
    r.dim = dim;
    r.rows = std::move(rows);
    return r;
  }

  LinearSystem<S> as_system() const {
    if (kind == RegionKind::Box) {
      LinearSystem<S> sys(dim);
      for (int i = 0; i < dim; ++i) {
        std::vector<S> e(dim, S{});
        e[i] = S(1);
        sys.add(e, hi[i]);
        e[i] = S(-1);
        sys.add(e, S(-lo[i]));
      }
      return sys;
    }
    if (kind == RegionKind::Halfspaces) {
      LinearSystem<S> sys(dim);
      for (const auto& h : rows) sys.add(h.a, h.b);
      return sys;
    }
    throw InvalidInput("region is not polyhedral");
  }

  void validate() const {
    if (dim <= 0) throw InvalidInput("region must have positive dimension");
    switch (kind) {
      case RegionKind::Box:
        if (static_cast<int>(lo.size()) != dim || static_cast<int>(hi.size()) != dim)
          throw InvalidInput("box bounds do not match the dimension");
        for (int i = 0; i < dim; ++i)
          if (lo[i] > hi[i]) throw InvalidInput("empty box: lo exceeds hi");
        break;
      case RegionKind::Ball:
        norm.validate(dim);
        if (radius < S(0)) throw InvalidInput("ball radius must be nonnegative");
        if (static_cast<int>(center.size()) != dim)
          throw InvalidInput("ball center does not match the dimension");
        break;
      case RegionKind::Halfspaces: {
        if (rows.empty()) throw InvalidInput("halfspace region needs at least one row");
        for (const auto& h : rows)
          if (static_cast<int>(h.a.size()) != dim)
            throw InvalidInput("halfspace row does not match the dimension");
        if (!fm_feasible(as_system())) throw InvalidInput("empty halfspace intersection");
        break;
      }
    }
  }

  bool contains(const std::vector<S>& p, const Tolerance& tol = {}) const {
    if (static_cast<int>(p.size()) != dim) throw InvalidInput("membership dimension mismatch");
    switch (kind) {
      case RegionKind::Box:
        for (int i = 0; i < dim; ++i)
          if (!nonneg(S(p[i] - lo[i]), tol) || !nonneg(S(hi[i] - p[i]), tol)) return false;
        return true;
      case RegionKind::Ball: {
        std::vector<S> d = sub(p, center);
        if (norm.kind == NormKind::Sup) {
          for (const S& v : d)
            if (!nonneg(S(radius - abs_val(v)), tol)) return false;
          return true;
        }
        if (norm.kind == NormKind::Euclidean)
          return nonneg(S(radius * radius - euclid_norm_sq(d)), tol);
        if constexpr (!scalar_traits<S>::is_exact) {
          return nonneg(radius - norm_eval(norm, Point<S>{d}), tol);
        } else {
          throw InvalidInput("exact ball membership supports only sup and euclidean norms");
        }
      }
      case RegionKind::Halfspaces:
        for (const auto& h : rows)
          if (!nonneg(S(h.b - dot(h.a, p)), tol)) return false;
        return true;
    }
    throw InvalidInput("unknown region kind");
  }

  // Deterministic interior reference point: box midpoint, ball center, or
  // coordinatewise midpoints of the polytope's exact coordinate ranges.
  std::vector<S> reference_point() const {
    switch (kind) {
      case RegionKind::Box: {
        std::vector<S> m(dim);
        for (int i = 0; i < dim; ++i) m[i] = (lo[i] + hi[i]) / S(2);
        return m;
      }
      case RegionKind::Ball:
        return center;
      case RegionKind::Halfspaces: {
        auto sys = as_system();
        std::vector<S> m(dim);
        for (int i = 0; i < dim; ++i) {
          auto iv = fm_coordinate_bounds(sys, i);
          if (!iv.lo || !iv.hi) throw InvalidInput("unbounded halfspace region");
          m[i] = (*iv.lo + *iv.hi) / S(2);
        }
        return m;
      }
    }
    throw InvalidInput("unknown region kind");
  }

  // Smallest axis box known to contain the region.
  std::pair<std::vector<S>, std::vector<S>> bounding_box() const {
    switch (kind) {
      case RegionKind::Box:
        return {lo, hi};
      case RegionKind::Ball: {
        std::vector<S> blo(dim), bhi(dim);
        for (int i = 0; i < dim; ++i) {
          S r = radius;
          if (norm.kind == NormKind::WeightedL2)
            r = S(scalar_traits<S>::to_double(radius) / std::sqrt(norm.weights[i]));
          blo[i] = center[i] - r;
          bhi[i] = center[i] + r;
        }
        return {blo, bhi};
      }
      case RegionKind::Halfspaces: {
        auto sys = as_system();
        std::vector<S> blo(dim), bhi(dim);
        for (int i = 0; i < dim; ++i) {
          auto iv = fm_coordinate_bounds(sys, i);
          if (!iv.lo || !iv.hi) throw InvalidInput("unbounded halfspace region");
          blo[i] = *iv.lo;
          bhi[i] = *iv.hi;
        }
        return {blo, bhi};
      }
    }
    throw InvalidInput("unknown region kind");
  }

  // Support function sup{<y, x> : x in region}.
  S support(const std::vector<S>& y) const {
    switch (kind) {
      case RegionKind::Box: {
        S s{};
        for (int i = 0; i < dim; ++i) s += std::max(lo[i] * y[i], hi[i] * y[i]);
        return s;
      }
      case RegionKind::Ball:
        return dot(y, center) + radius * dual_norm_eval(norm, Covector<S>{y});
      case RegionKind::Halfspaces: {
        S best{};
        bool seen = false;
        for (const auto& v : vertices()) {
          S val = dot(y, v);
          if (!seen || val > best) {
            best = val;
            seen = true;
          }
        }
        if (!seen) throw InvalidInput("halfspace region has no vertices");
        return best;
      }
    }
    throw InvalidInput("unknown region kind");
  }

  // A point of the region attaining (or nearly attaining) the support in
  // direction y; used as a violation witness by normal-cone tests.
  std::vector<S> support_point(const std::vector<S>& y) const {
    switch (kind) {
      case RegionKind::Box: {
        std::vector<S> p(dim);
        for (int i = 0; i < dim; ++i) p[i] = (hi[i] * y[i] >= lo[i] * y[i]) ? hi[i] : lo[i];
        return p;
      }
      case RegionKind::Ball: {
        if constexpr (scalar_traits<S>::is_exact)
          throw InvalidInput("exact ball support point not available");
        else {
          double ny = euclid_norm(y);
          if (ny == 0) return center;
          if (norm.kind == NormKind::Euclidean) {
            std::vector<S> p = center;
            for (int i = 0; i < dim; ++i) p[i] += radius * y[i] / ny;
            return p;
          }
          // General norms: best vertex of the inscribed cross-polytope.
          std::vector<S> best = center;
          S bestval = dot(y, center);
          for (int i = 0; i < dim; ++i)
            for (int sgn : {-1, 1}) {
              std::vector<S> cand = center;
              std::vector<S> dir(dim, S{});
              dir[i] = S(sgn);
              S unit = norm_eval(norm, Point<S>{dir});
              cand[i] += S(sgn) * radius / unit;
              S val = dot(y, cand);
              if (val > bestval) {
                bestval = val;
                best = cand;
              }
            }
          return best;
        }
      }
      case RegionKind::Halfspaces: {
        auto vs = vertices();
        if (vs.empty()) throw InvalidInput("halfspace region has no vertices");
        size_t arg = 0;
        S best = dot(y, vs[0]);
        for (size_t i = 1; i < vs.size(); ++i) {
          S val = dot(y, vs[i]);
          if (val > best) {
            best = val;
            arg = i;
          }
        }
        return vs[arg];
      }
    }
    throw InvalidInput("unknown region kind");
  }

  // Vertex enumeration for bounded polytopes in small dimension: solve every
  // dim-subset of active rows and keep the feasible solutions.
  std::vector<std::vector<S>> vertices() const {
    if (kind == RegionKind::Box) {
      if (dim > 16) throw InvalidInput("box vertex enumeration capped at dimension 16");
      std::vector<std::vector<S>> out;
      for (size_t mask = 0; mask < (size_t(1) << dim); ++mask) {
        std::vector<S> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? hi[i] : lo[i];
        out.push_back(std::move(v));
      }
      return out;
    }
    if (kind != RegionKind::Halfspaces)
      throw InvalidInput("vertex enumeration requires a polyhedral region");
    if (dim > 4) throw InvalidInput("halfspace vertex enumeration capped at dimension 4");
    {
      auto sys = as_system();
      for (int i = 0; i < dim; ++i) {
        auto iv = fm_coordinate_bounds(sys, i);
        if (!iv.lo || !iv.hi) throw InvalidInput("unbounded halfspace region");
      }
    }
    size_t m = rows.size();
    std::vector<int> idx(dim);
    std::vector<std::vector<S>> out;
    Tolerance tol;
    auto emit = [&](const std::vector<S>& v) {
      for (const auto& w : out)
        if ([&] {
              for (int i = 0; i < dim; ++i)
                if (!scalar_close(v[i], w[i], tol)) return false;
              return true;
            }())
          return;
      out.push_back(v);
    };
    std::vector<size_t> comb(dim);
    auto rec = [&](auto&& self, size_t start, int depth) -> void {
      if (depth == dim) {
        Matrix<S> a(dim, std::vector<S>(dim));
        std::vector<S> b(dim);
        for (int i = 0; i < dim; ++i) {
          a[i] = rows[comb[i]].a;
          b[i] = rows[comb[i]].b;
        }
        auto x = solve_consistent(a, b);
        if (!x) return;
        // Only genuine intersections of `dim` hyperplanes count.
        for (int i = 0; i < dim; ++i) {
          S resid = dot(rows[comb[i]].a, *x) - rows[comb[i]].b;
          if (!scalar_close(resid, S{}, tol)) return;
        }
        if (contains(*x, tol)) emit(*x);
        return;
      }
      for (size_t j = start; j < m; ++j) {
        comb[depth] = j;
        self(self, j + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    return out;
  }
};

}  // namespace monokit

#endif
