#ifndef MONOKIT_NORM_HPP
#define MONOKIT_NORM_HPP

#include <cmath>
#include <vector>

#include "monokit/linalg.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

enum class NormKind { Euclidean, Lp, Sup, WeightedL2 };

// Norm descriptor together with its dual: Euclidean <-> Euclidean,
// Lp <-> Lq with 1/p + 1/q = 1, Sup <-> L1, WeightedL2 <-> inverse weights.
// Lp requires 1 < p < inf; the sup norm is kept for gallery use where the
// duality map is set-valued.
struct Norm {
  NormKind kind = NormKind::Euclidean;
  double p = 2.0;
  std::vector<double> weights;

  static Norm euclidean() { return Norm{}; }
  static Norm lp(double p) { return Norm{NormKind::Lp, p, {}}; }
  static Norm sup() { return Norm{NormKind::Sup, 0.0, {}}; }
  static Norm weighted_l2(std::vector<double> w) {
    return Norm{NormKind::WeightedL2, 2.0, std::move(w)};
  }

  void validate(int dim = -1) const {
    if (kind == NormKind::Lp && !(p > 1.0 && std::isfinite(p)))
      throw InvalidInput("Lp norm requires 1 < p < inf");
    if (kind == NormKind::WeightedL2) {
      if (weights.empty()) throw InvalidInput("weighted-l2 norm requires weights");
      for (double w : weights)
        if (!(w > 0 && std::isfinite(w)))
          throw InvalidInput("weighted-l2 weights must be positive and finite");
      if (dim >= 0 && static_cast<int>(weights.size()) != dim)
        throw InvalidInput("weighted-l2 weights do not match the dimension");
    }
  }
};

namespace detail {

inline double norm_eval_impl(const Norm& n, const std::vector<double>& c, bool dual) {
  n.validate(static_cast<int>(c.size()));
  switch (n.kind) {
    case NormKind::Euclidean: {
      double s = 0;
      for (double v : c) s += v * v;
      return std::sqrt(s);
    }
    case NormKind::Lp: {
      double q = dual ? n.p / (n.p - 1.0) : n.p;
      double s = 0;
      for (double v : c) s += std::pow(std::fabs(v), q);
      return std::pow(s, 1.0 / q);
    }
    case NormKind::Sup: {
      double s = 0;
      if (dual) {
        for (double v : c) s += std::fabs(v);
      } else {
        for (double v : c) s = std::max(s, std::fabs(v));
      }
      return s;
    }
    case NormKind::WeightedL2: {
      double s = 0;
      for (size_t i = 0; i < c.size(); ++i)
        s += (dual ? c[i] * c[i] / n.weights[i] : n.weights[i] * c[i] * c[i]);
      return std::sqrt(s);
    }
  }
  throw InvalidInput("unknown norm kind");
}

inline Rational norm_eval_impl(const Norm& n, const std::vector<Rational>& c, bool dual) {
  // Only the sup/L1 pair has exactly representable values.
  if (n.kind != NormKind::Sup)
    throw InvalidInput("only the sup norm is exactly representable in the exact backend");
  Rational s{};
  if (dual) {
    for (const Rational& v : c) s += abs_val(v);
  } else {
    for (const Rational& v : c) s = std::max(s, abs_val(v));
  }
  return s;
}

}  // namespace detail

template <class S>
S norm_eval(const Norm& n, const Point<S>& x) {
  return detail::norm_eval_impl(n, x.c, false);
}

template <class S>
S dual_norm_eval(const Norm& n, const Covector<S>& xstar) {
  return detail::norm_eval_impl(n, xstar.c, true);
}

// Squared Euclidean norm; exact in the rational backend — used by ball
// membership tests so square roots never appear there.
template <class S>
S euclid_norm_sq(const std::vector<S>& c) {
  S s{};
  for (const S& v : c) s += v * v;
  return s;
}

inline double euclid_norm(const std::vector<double>& c) {
  return std::sqrt(euclid_norm_sq(c));
}

}  // namespace monokit

#endif
