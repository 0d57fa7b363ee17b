#ifndef MONOKIT_STEP1D_HPP
#define MONOKIT_STEP1D_HPP

#include <optional>
#include <utility>
#include <vector>

#include "monokit/linalg.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

// Piecewise-constant nondecreasing set-valued map on the line: constant
// values on the open regions between breakpoints, interval values at the
// breakpoints themselves. A breakpoint value may be unset (point not in the
// domain); maximalization fills it with [left limit, right limit].
template <class S>
struct StepFunction1D {
  std::vector<S> breakpoints;
  std::vector<S> region_values;                            // breakpoints.size() + 1 entries
  std::vector<std::optional<std::pair<S, S>>> point_values;  // one per breakpoint

  void validate() const {
    if (region_values.size() != breakpoints.size() + 1)
      throw InvalidInput("step function needs one region value per gap");
    if (point_values.size() != breakpoints.size())
      throw InvalidInput("step function needs one point entry per breakpoint");
    for (size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i]))
        throw InvalidInput("breakpoints must be strictly increasing");
    for (size_t i = 1; i < region_values.size(); ++i)
      if (region_values[i - 1] > region_values[i])
        throw InvalidInput("step function is not monotone: region values decrease");
    for (size_t i = 0; i < breakpoints.size(); ++i) {
      if (!point_values[i]) continue;
      auto [lo, hi] = *point_values[i];
      if (lo > hi) throw InvalidInput("empty interval at a breakpoint");
      if (region_values[i] > lo || hi > region_values[i + 1])
        throw InvalidInput("step function is not monotone: breakpoint value escapes its limits");
    }
  }

  // Value set at x as a closed interval; nullopt when x is an undefined
  // breakpoint.
  std::optional<std::pair<S, S>> value_interval(const S& x) const {
    size_t i = 0;
    while (i < breakpoints.size() && breakpoints[i] < x) ++i;
    if (i < breakpoints.size() && breakpoints[i] == x) return point_values[i];
    return std::make_pair(region_values[i], region_values[i]);
  }
};

// Fills every breakpoint with the closed interval [left limit, right limit],
// producing the maximal monotone extension of the step function.
template <class S>
StepFunction1D<S> maximalize_1d(const StepFunction1D<S>& f) {
  f.validate();
  StepFunction1D<S> out = f;
  for (size_t i = 0; i < out.breakpoints.size(); ++i)
    out.point_values[i] = std::make_pair(out.region_values[i], out.region_values[i + 1]);
  return out;
}

// Unique solution of ystar in T(x) + lambda x for the maximalized step
// operator T. Breakpoints are tested first so exact hits return exactly.
template <class S>
S resolve_step(const StepFunction1D<S>& f, const S& lambda, const S& ystar) {
  if (!(lambda > S(0))) throw InvalidInput("resolvent requires lambda > 0");
  StepFunction1D<S> t = maximalize_1d(f);
  size_t k = t.breakpoints.size();
  for (size_t i = 0; i < k; ++i) {
    auto [lo, hi] = *t.point_values[i];
    S target = ystar - lambda * t.breakpoints[i];
    if (lo <= target && target <= hi) return t.breakpoints[i];
  }
  for (size_t i = 0; i <= k; ++i) {
    S x = (ystar - t.region_values[i]) / lambda;
    bool above = (i == 0) || (x >= t.breakpoints[i - 1]);
    bool below = (i == k) || (x <= t.breakpoints[i]);
    if (above && below) return x;
  }
  throw InvalidInput("resolvent value outside representable range");
}

}  // namespace monokit

#endif
