#ifndef MONOKIT_FM_HPP
#define MONOKIT_FM_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "monokit/linalg.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

// Linear inequality system  <a, u> <= b, solved by Fourier-Motzkin
// elimination. Intended for desk-scale dimensions (<= 3 in the main call
// sites); the row cap guards against elimination blowup elsewhere.
template <class S>
struct LinearSystem {
  struct Row {
    std::vector<S> a;
    S b{};
  };
  std::vector<Row> rows;
  int dim = 0;

  explicit LinearSystem(int d) : dim(d) {}

  void add(std::vector<S> a, S b) {
    if (static_cast<int>(a.size()) != dim) throw InvalidInput("linear system row dimension mismatch");
    rows.push_back(Row{std::move(a), std::move(b)});
  }

  // <a, u> >= b  stored as  <-a, u> <= -b.
  void add_ge(const std::vector<S>& a, const S& b) {
    std::vector<S> na(a.size());
    for (size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
    add(std::move(na), S(-b));
  }
};

namespace fm_detail {

template <class S>
bool is_zero(const S& v) {
  if constexpr (scalar_traits<S>::is_exact)
    return v == 0;
  else
    return std::fabs(v) <= 1e-13;
}

template <class S>
void dedupe(std::vector<typename LinearSystem<S>::Row>& rows) {
  for (auto& r : rows) {
    S lead{};
    for (const S& v : r.a)
      if (!is_zero(v)) {
        lead = abs_val(v);
        break;
      }
    if (is_zero(lead)) continue;
    for (S& v : r.a) v = v / lead;
    r.b = r.b / lead;
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  // Identical normals: only the tightest bound matters.
  std::vector<typename LinearSystem<S>::Row> out;
  for (auto& r : rows) {
    if (!out.empty() && out.back().a == r.a) continue;
    out.push_back(std::move(r));
  }
  rows = std::move(out);
}

constexpr size_t kRowCap = 200000;

// Eliminates variable k; returns false (infeasible) if a constant row fails.
template <class S>
bool eliminate(std::vector<typename LinearSystem<S>::Row>& rows, int k) {
  using Row = typename LinearSystem<S>::Row;
  std::vector<Row> pos, neg, rest;
  for (auto& r : rows) {
    if (is_zero(r.a[k]))
      rest.push_back(std::move(r));
    else if (r.a[k] > S(0))
      pos.push_back(std::move(r));
    else
      neg.push_back(std::move(r));
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      Row combined;
      combined.a.resize(p.a.size());
      S wp = -n.a[k], wn = p.a[k];
      for (size_t j = 0; j < p.a.size(); ++j) combined.a[j] = wp * p.a[j] + wn * n.a[j];
      combined.b = wp * p.b + wn * n.b;
      rest.push_back(std::move(combined));
      if (rest.size() > kRowCap)
        throw SearchExhausted("fourier-motzkin row blowup", static_cast<double>(rest.size()));
    }
  dedupe<S>(rest);
  rows = std::move(rest);
  for (const auto& r : rows) {
    bool all_zero = true;
    for (const S& v : r.a)
      if (!is_zero(v)) {
        all_zero = false;
        break;
      }
    if (all_zero && r.b < S(0)) return false;
  }
  return true;
}

// Bounds on variable k implied by rows whose other active variables are
// already assigned (vals[j] meaningful for j < k).
template <class S>
struct Interval {
  std::optional<S> lo, hi;
  bool empty(const Tolerance& tol) const {
    if (!lo || !hi) return false;
    if constexpr (scalar_traits<S>::is_exact)
      return *lo > *hi;
    else
      return *lo > *hi + tol.abs;
  }
};

template <class S>
Interval<S> bounds_given(const std::vector<typename LinearSystem<S>::Row>& rows, int k,
                         const std::vector<S>& vals) {
  Interval<S> iv;
  for (const auto& r : rows) {
    if (is_zero(r.a[k])) continue;
    S rhs = r.b;
    for (int j = 0; j < k; ++j) rhs -= r.a[j] * vals[j];
    S bound = rhs / r.a[k];
    if (r.a[k] > S(0)) {
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    } else {
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    }
  }
  return iv;
}

}  // namespace fm_detail

template <class S>
bool fm_feasible(const LinearSystem<S>& sys) {
  auto rows = sys.rows;
  for (int k = sys.dim - 1; k >= 0; --k)
    if (!fm_detail::eliminate<S>(rows, k)) return false;
  return true;
}

// A feasible point chosen greedily: variable k is clamped to pref[k] within
// the exact bounds implied by the already-fixed coordinates. Coordinatewise
// nearest to pref, and exact in the rational backend.
template <class S>
std::optional<std::vector<S>> fm_sample_near(const LinearSystem<S>& sys,
                                             const std::vector<S>& pref,
                                             const Tolerance& tol = {}) {
  if (static_cast<int>(pref.size()) != sys.dim) throw InvalidInput("preference dimension mismatch");
  std::vector<std::vector<typename LinearSystem<S>::Row>> levels(sys.dim + 1);
  levels[sys.dim] = sys.rows;
  for (int k = sys.dim - 1; k >= 0; --k) {
    levels[k] = levels[k + 1];
    if (!fm_detail::eliminate<S>(levels[k], k)) return std::nullopt;
  }
  std::vector<S> vals(sys.dim);
  for (int k = 0; k < sys.dim; ++k) {
    auto iv = fm_detail::bounds_given<S>(levels[k + 1], k, vals);
    if (iv.empty(tol)) return std::nullopt;
    S v = pref[k];
    if (iv.lo && v < *iv.lo) v = *iv.lo;
    if (iv.hi && v > *iv.hi) v = *iv.hi;
    vals[k] = v;
  }
  return vals;
}

// Exact range of a single coordinate over the feasible set.
template <class S>
fm_detail::Interval<S> fm_coordinate_bounds(const LinearSystem<S>& sys, int coord) {
  auto rows = sys.rows;
  for (int k = sys.dim - 1; k >= 0; --k) {
    if (k == coord) continue;
    if (!fm_detail::eliminate<S>(rows, k))
      throw InvalidInput("coordinate bounds of an infeasible system");
  }
  fm_detail::Interval<S> iv;
  for (const auto& r : rows) {
    if (fm_detail::is_zero(r.a[coord])) continue;
    S bound = r.b / r.a[coord];
    if (r.a[coord] > S(0)) {
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    } else {
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    }
  }
  return iv;
}

}  // namespace monokit

#endif
