#ifndef MONOKIT_JSON_CODEC_HPP
#define MONOKIT_JSON_CODEC_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "monokit/convexfn.hpp"
#include "monokit/convexops.hpp"
#include "monokit/gallery/gallery.hpp"
#include "monokit/linalg.hpp"
#include "monokit/monotonicity.hpp"
#include "monokit/norm.hpp"
#include "monokit/region.hpp"
#include "monokit/step1d.hpp"

namespace monokit {

using Json = nlohmann::ordered_json;

// Scalar wire format: the floating backend uses JSON numbers, the exact
// backend uses integers and strings "p/q" (or exact decimals). Non-integer
// JSON numbers are rejected in exact mode rather than silently converted.
template <class S>
struct ScalarCodec;

template <>
struct ScalarCodec<double> {
  static double from(const Json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return scalar_traits<Rational>::to_double(parse_rational(j.get<std::string>()));
    throw InvalidInput(std::string(what) + ": expected a number");
  }
  static Json to(double v) { return v; }
};

template <>
struct ScalarCodec<Rational> {
  static Rational from(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number())
      throw InvalidInput(std::string(what) +
                         ": exact backend takes integers or \"p/q\" strings, not floats");
    throw InvalidInput(std::string(what) + ": expected an exact scalar");
  }
  static Json to(const Rational& v) { return format_rational(v); }
};

template <class S>
std::vector<S> coords_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidInput(std::string(what) + ": expected a nonempty array");
  std::vector<S> out;
  for (const auto& v : j) out.push_back(ScalarCodec<S>::from(v, what));
  return out;
}

template <class S>
Json coords_to_json(const std::vector<S>& c) {
  Json j = Json::array();
  for (const auto& v : c) j.push_back(ScalarCodec<S>::to(v));
  return j;
}

template <class S>
Point<S> point_from_json(const Json& j, const char* what = "point") {
  Point<S> p{coords_from_json<S>(j, what)};
  validate_coords(p.c, what);
  return p;
}

template <class S>
Covector<S> covector_from_json(const Json& j, const char* what = "covector") {
  Covector<S> p{coords_from_json<S>(j, what)};
  validate_coords(p.c, what);
  return p;
}

template <class S>
GraphPair<S> pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("xstar"))
    throw InvalidInput("graph pair: expected {\"x\": [...], \"xstar\": [...]}");
  return GraphPair<S>{point_from_json<S>(j["x"]), covector_from_json<S>(j["xstar"])};
}

template <class S>
Json pair_to_json(const GraphPair<S>& p) {
  Json j;
  j["x"] = coords_to_json(p.x.c);
  j["xstar"] = coords_to_json(p.xstar.c);
  return j;
}

template <class S>
OperatorGraph<S> graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("pairs"))
    throw InvalidInput("operator graph: expected {\"dim\": n, \"pairs\": [...]}");
  OperatorGraph<S> g;
  g.dim = j["dim"].get<int>();
  for (const auto& p : j["pairs"]) g.pairs.push_back(pair_from_json<S>(p));
  g.validate();
  return g;
}

template <class S>
Json graph_to_json(const OperatorGraph<S>& g) {
  Json j;
  j["dim"] = g.dim;
  j["pairs"] = Json::array();
  for (const auto& p : g.pairs) j["pairs"].push_back(pair_to_json(p));
  return j;
}

inline Norm norm_from_json(const Json& j) {
  if (j.is_null()) return Norm::euclidean();
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("norm: expected {\"kind\": ...}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "euclidean") return Norm::euclidean();
  if (kind == "sup") return Norm::sup();
  if (kind == "lp") {
    if (!j.contains("p")) throw InvalidInput("lp norm needs \"p\"");
    return Norm::lp(j["p"].get<double>());
  }
  if (kind == "weighted_l2") {
    if (!j.contains("weights")) throw InvalidInput("weighted_l2 norm needs \"weights\"");
    return Norm::weighted_l2(j["weights"].get<std::vector<double>>());
  }
  throw InvalidInput("unknown norm kind: " + kind);
}

inline Json norm_to_json(const Norm& n) {
  Json j;
  switch (n.kind) {
    case NormKind::Euclidean:
      j["kind"] = "euclidean";
      break;
    case NormKind::Lp:
      j["kind"] = "lp";
      j["p"] = n.p;
      break;
    case NormKind::Sup:
      j["kind"] = "sup";
      break;
    case NormKind::WeightedL2:
      j["kind"] = "weighted_l2";
      j["weights"] = n.weights;
      break;
  }
  return j;
}

template <class S>
ConvexRegion<S> region_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("region: expected {\"kind\": ...}");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "box") {
    auto r = ConvexRegion<S>::box(coords_from_json<S>(j["lo"], "box lo"),
                                  coords_from_json<S>(j["hi"], "box hi"));
    r.validate();
    return r;
  }
  if (kind == "ball") {
    auto r = ConvexRegion<S>::ball(norm_from_json(j.value("norm", Json())),
                                   ScalarCodec<S>::from(j.at("radius"), "ball radius"),
                                   coords_from_json<S>(j.at("center"), "ball center"));
    r.validate();
    return r;
  }
  if (kind == "halfspaces") {
    std::vector<typename ConvexRegion<S>::Halfspace> rows;
    int dim = 0;
    for (const auto& row : j.at("rows")) {
      typename ConvexRegion<S>::Halfspace h;
      h.a = coords_from_json<S>(row.at("a"), "halfspace normal");
      h.b = ScalarCodec<S>::from(row.at("b"), "halfspace offset");
      dim = static_cast<int>(h.a.size());
      rows.push_back(std::move(h));
    }
    auto r = ConvexRegion<S>::halfspaces(dim, std::move(rows));
    r.validate();
    return r;
  }
  throw InvalidInput("unknown region kind: " + kind);
}

template <class S>
Json region_to_json(const ConvexRegion<S>& r) {
  Json j;
  switch (r.kind) {
    case RegionKind::Box:
      j["kind"] = "box";
      j["lo"] = coords_to_json(r.lo);
      j["hi"] = coords_to_json(r.hi);
      break;
    case RegionKind::Ball:
      j["kind"] = "ball";
      j["norm"] = norm_to_json(r.norm);
      j["radius"] = ScalarCodec<S>::to(r.radius);
      j["center"] = coords_to_json(r.center);
      break;
    case RegionKind::Halfspaces: {
      j["kind"] = "halfspaces";
      j["rows"] = Json::array();
      for (const auto& h : r.rows) {
        Json row;
        row["a"] = coords_to_json(h.a);
        row["b"] = ScalarCodec<S>::to(h.b);
        j["rows"].push_back(row);
      }
      break;
    }
  }
  return j;
}

template <class S>
GridShape<S> grid_shape_from_json(const Json& j) {
  GridShape<S> g;
  g.lo = coords_from_json<S>(j.at("lo"), "grid lo");
  g.hi = coords_from_json<S>(j.at("hi"), "grid hi");
  g.steps = j.at("steps").get<std::vector<int>>();
  g.validate();
  return g;
}

template <class S>
Ext<S> ext_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return Ext<S>::plus_inf();
    if (s == "-inf") return Ext<S>::minus_inf();
  }
  return Ext<S>::finite(ScalarCodec<S>::from(j, "value"));
}

template <class S>
Json ext_to_json(const Ext<S>& v) {
  if (v.inf > 0) return "inf";
  if (v.inf < 0) return "-inf";
  return ScalarCodec<S>::to(v.v);
}

template <class S>
ConvexFunction<S> function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("repr"))
    throw InvalidInput("convex function: expected {\"repr\": ...}");
  std::string repr = j["repr"].get<std::string>();
  ConvexFunction<S> f;
  if (repr == "grid") {
    GridShape<S> shape = grid_shape_from_json<S>(j);
    std::vector<Ext<S>> vals;
    for (const auto& v : j.at("values")) vals.push_back(ext_from_json<S>(v));
    f = ConvexFunction<S>::grid_fn(std::move(shape), std::move(vals));
  } else if (repr == "quadratic") {
    Matrix<S> q;
    for (const auto& row : j.at("q")) q.push_back(coords_from_json<S>(row, "quadratic row"));
    f = ConvexFunction<S>::quadratic(std::move(q), coords_from_json<S>(j.at("b"), "linear term"),
                                     ScalarCodec<S>::from(j.value("c", Json(0)), "constant"));
  } else if (repr == "norm") {
    auto b = j.value("scale", Json(1));
    int dim = j.at("dim").get<int>();
    f = ConvexFunction<S>::norm_scaled(norm_from_json(j.value("norm", Json())),
                                       ScalarCodec<S>::from(b, "scale"), dim);
  } else if (repr == "indicator") {
    f = ConvexFunction<S>::indicator(region_from_json<S>(j.at("set")));
  } else if (repr == "support") {
    std::vector<Covector<S>> pts;
    for (const auto& p : j.at("points")) pts.push_back(covector_from_json<S>(p));
    f = ConvexFunction<S>::support(std::move(pts));
  } else if (repr == "affine_shift") {
    f = ConvexFunction<S>::affine_shift(function_from_json<S>(j.at("base")),
                                        point_from_json<S>(j.at("shift_x")),
                                        covector_from_json<S>(j.at("shift_a")),
                                        ScalarCodec<S>::from(j.value("c", Json(0)), "constant"));
  } else if (repr == "sum") {
    std::vector<ConvexFunction<S>> parts;
    for (const auto& p : j.at("parts")) parts.push_back(function_from_json<S>(p));
    f = ConvexFunction<S>::sum(std::move(parts));
  } else {
    throw InvalidInput("unknown function repr: " + repr);
  }
  f.validate();
  return f;
}

template <class S>
Json function_to_json(const ConvexFunction<S>& f) {
  Json j;
  switch (f.kind) {
    case FnKind::Grid: {
      j["repr"] = "grid";
      j["lo"] = coords_to_json(f.grid.lo);
      j["hi"] = coords_to_json(f.grid.hi);
      j["steps"] = f.grid.steps;
      j["values"] = Json::array();
      for (const auto& v : f.values) j["values"].push_back(ext_to_json(v));
      break;
    }
    case FnKind::Quadratic: {
      j["repr"] = "quadratic";
      j["q"] = Json::array();
      for (const auto& row : f.q) j["q"].push_back(coords_to_json(row));
      j["b"] = coords_to_json(f.b);
      j["c"] = ScalarCodec<S>::to(f.c);
      break;
    }
    case FnKind::NormScaled:
      j["repr"] = "norm";
      j["norm"] = norm_to_json(f.norm);
      j["scale"] = ScalarCodec<S>::to(f.scale);
      j["dim"] = f.dim;
      break;
    case FnKind::Indicator:
      j["repr"] = "indicator";
      j["set"] = region_to_json(*f.set);
      break;
    case FnKind::Support: {
      j["repr"] = "support";
      j["points"] = Json::array();
      for (const auto& p : f.support_points) j["points"].push_back(coords_to_json(p.c));
      break;
    }
    case FnKind::AffineShift:
      j["repr"] = "affine_shift";
      j["base"] = function_to_json(*f.base);
      j["shift_x"] = coords_to_json(f.shift_x.c);
      j["shift_a"] = coords_to_json(f.shift_a.c);
      j["c"] = ScalarCodec<S>::to(f.c);
      break;
    case FnKind::Sum: {
      j["repr"] = "sum";
      j["parts"] = Json::array();
      for (const auto& p : f.parts) j["parts"].push_back(function_to_json(*p));
      break;
    }
  }
  return j;
}

template <class S>
StepFunction1D<S> step_from_json(const Json& j) {
  StepFunction1D<S> f;
  if (j.contains("breakpoints"))
    for (const auto& b : j["breakpoints"])
      f.breakpoints.push_back(ScalarCodec<S>::from(b, "breakpoint"));
  for (const auto& r : j.at("regions")) f.region_values.push_back(ScalarCodec<S>::from(r, "region value"));
  if (j.contains("points")) {
    for (const auto& p : j["points"]) {
      if (p.is_null()) {
        f.point_values.push_back(std::nullopt);
      } else if (p.is_array() && p.size() == 2) {
        f.point_values.push_back(std::make_pair(ScalarCodec<S>::from(p[0], "interval lo"),
                                                ScalarCodec<S>::from(p[1], "interval hi")));
      } else {
        f.point_values.push_back(std::make_pair(ScalarCodec<S>::from(p, "point value"),
                                                ScalarCodec<S>::from(p, "point value")));
      }
    }
  } else {
    f.point_values.assign(f.breakpoints.size(), std::nullopt);
  }
  f.validate();
  return f;
}

template <class S>
Json step_to_json(const StepFunction1D<S>& f) {
  Json j;
  j["breakpoints"] = coords_to_json(f.breakpoints);
  j["regions"] = coords_to_json(f.region_values);
  j["points"] = Json::array();
  for (const auto& p : f.point_values) {
    if (!p)
      j["points"].push_back(nullptr);
    else
      j["points"].push_back(Json::array({ScalarCodec<S>::to(p->first), ScalarCodec<S>::to(p->second)}));
  }
  return j;
}

template <class S>
Json certificate_to_json(const Certificate<S>& c) {
  Json j;
  j["verdict"] = c.verdict;
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(pair_to_json(w));
  j["value"] = ScalarCodec<S>::to(c.value);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

template <class S>
Json cycle_report_to_json(const CycleReport<S>& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["cycle"] = r.cycle;
  j["sum"] = ScalarCodec<S>::to(r.sum);
  return j;
}

inline Json gallery_report_to_json(const GalleryReport& r) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass();
  j["claims"] = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["what"] = c.what;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["pass"] = c.pass;
    j["claims"].push_back(cj);
  }
  j["notes"] = r.notes;
  return j;
}

template <class S>
Json reconstruction_to_json(const PotentialReconstruction<S>& r) {
  Json j;
  j["base_index"] = r.base;
  j["node_values"] = coords_to_json(r.node_values);
  j["affine_pieces"] = Json::array();
  for (const auto& [slope, intercept] : r.affine_pieces) {
    Json p;
    p["slope"] = coords_to_json(slope.c);
    p["intercept"] = ScalarCodec<S>::to(intercept);
    j["affine_pieces"].push_back(p);
  }
  return j;
}

}  // namespace monokit

#endif
