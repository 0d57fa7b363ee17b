#ifndef MONOKIT_LINALG_HPP
#define MONOKIT_LINALG_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "monokit/scalar.hpp"

namespace monokit {

template <class S>
struct Point {
  std::vector<S> c;

  Point() = default;
  explicit Point(std::vector<S> coords) : c(std::move(coords)) {}
  int dim() const { return static_cast<int>(c.size()); }
};

template <class S>
struct Covector {
  std::vector<S> c;

  Covector() = default;
  explicit Covector(std::vector<S> coords) : c(std::move(coords)) {}
  int dim() const { return static_cast<int>(c.size()); }
};

template <class S>
void validate_coords(const std::vector<S>& c, const char* what) {
  if (c.empty()) throw InvalidInput(std::string(what) + " must have positive dimension");
  for (const S& v : c)
    if (!scalar_traits<S>::finite(v))
      throw InvalidInput(std::string(what) + " has a non-finite coordinate");
}

template <class S>
struct GraphPair {
  Point<S> x;
  Covector<S> xstar;

  GraphPair() = default;
  GraphPair(Point<S> p, Covector<S> q) : x(std::move(p)), xstar(std::move(q)) {
    if (x.dim() != xstar.dim()) throw InvalidInput("graph pair dimension mismatch");
  }
};

// Sampled set-valued operator: a finite list of (point, covector) pairs.
// Repeated points with distinct covectors are allowed.
template <class S>
struct OperatorGraph {
  int dim = 0;
  std::vector<GraphPair<S>> pairs;

  bool empty() const { return pairs.empty(); }
  size_t size() const { return pairs.size(); }

  void validate() const {
    if (dim <= 0) throw InvalidInput("operator graph must declare a positive dimension");
    for (const auto& p : pairs) {
      if (p.x.dim() != dim || p.xstar.dim() != dim)
        throw InvalidInput("operator graph contains a pair of mismatched dimension");
      validate_coords(p.x.c, "point");
      validate_coords(p.xstar.c, "covector");
    }
  }
};

// Verdict plus the data needed to reproduce a failure: at most two witnessing
// pairs and the violating (or extremal) quantity.
template <class S>
struct Certificate {
  bool verdict = true;
  std::vector<GraphPair<S>> witnesses;
  S value{};
  std::string note;
};

// Standard coordinate pairing <x*, x>.
template <class S>
S pairing(const Covector<S>& xstar, const Point<S>& x) {
  if (xstar.dim() != x.dim()) throw InvalidInput("pairing dimension mismatch");
  S acc{};
  for (size_t i = 0; i < x.c.size(); ++i) acc += xstar.c[i] * x.c[i];
  return acc;
}

template <class S>
std::vector<S> sub(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  std::vector<S> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S>
std::vector<S> add(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  std::vector<S> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S>
std::vector<S> scale(const S& t, const std::vector<S>& a) {
  std::vector<S> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

// <a* - b*, a - b>, the quantity behind every monotonicity check.
template <class S>
S monotone_gap(const GraphPair<S>& p, const GraphPair<S>& q) {
  Covector<S> ds{sub(p.xstar.c, q.xstar.c)};
  Point<S> dx{sub(p.x.c, q.x.c)};
  return pairing(ds, dx);
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  S acc{};
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace monokit

#endif
