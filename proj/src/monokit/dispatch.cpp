#include "monokit/dispatch.hpp"

#include <algorithm>
#include <functional>

#include "monokit/debrunner.hpp"
#include "monokit/duality.hpp"

namespace monokit {

RunConfig RunConfig::from_json(const Json& j) {
  RunConfig cfg;
  if (j.is_null()) return cfg;
  if (j.contains("backend")) {
    std::string b = j["backend"].get<std::string>();
    if (b == "exact")
      cfg.exact = true;
    else if (b != "float")
      throw InvalidInput("backend must be \"float\" or \"exact\"");
  }
  if (cfg.exact && (j.contains("tol_abs") || j.contains("tol_rel")))
    throw InvalidInput("the exact backend rejects tolerance overrides");
  if (j.contains("tol_abs")) cfg.tol.abs = j["tol_abs"].get<double>();
  if (j.contains("tol_rel")) cfg.tol.rel = j["tol_rel"].get<double>();
  cfg.tol.validate();
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  return cfg;
}

namespace {

int verdict_status(bool v) { return v ? 0 : 1; }

template <class S>
DispatchResult run_typed(const std::string& cmd, const Json& in, const RunConfig& cfg) {
  const Tolerance& tol = cfg.tol;

  if (cmd == "check-monotone") {
    auto cert = check_monotone(graph_from_json<S>(in.at("graph")), tol);
    return {verdict_status(cert.verdict), certificate_to_json(cert)};
  }
  if (cmd == "check-cyclic") {
    auto g = graph_from_json<S>(in.at("graph"));
    Json n = in.value("n", Json("full"));
    CycleReport<S> rep = (n.is_string() && n.get<std::string>() == "full")
                             ? check_cyclic(g, tol)
                             : check_n_cyclic(g, n.get<int>(), tol);
    return {verdict_status(rep.verdict), cycle_report_to_json(rep)};
  }
  if (cmd == "related") {
    auto cert = monotonically_related(pair_from_json<S>(in.at("pair")),
                                      graph_from_json<S>(in.at("graph")), tol);
    return {verdict_status(cert.verdict), certificate_to_json(cert)};
  }
  if (cmd == "invert") {
    return {0, graph_to_json(invert(graph_from_json<S>(in.at("graph"))))};
  }
  if (cmd == "sum") {
    auto g = sum_graphs(graph_from_json<S>(in.at("s")), graph_from_json<S>(in.at("t")), tol);
    return {0, graph_to_json(g)};
  }
  if (cmd == "coercivity") {
    auto g = graph_from_json<S>(in.at("graph"));
    Norm n = norm_from_json(in.value("norm", Json()));
    std::vector<S> radii = coords_from_json<S>(in.at("radii"), "radii");
    std::vector<S> thresholds;
    if (in.contains("thresholds"))
      thresholds = coords_from_json<S>(in["thresholds"], "thresholds");
    auto prof = coercivity_profile(g, n, radii, thresholds);
    Json j;
    j["radii"] = coords_to_json(prof.radii);
    j["c_values"] = Json::array();
    for (size_t i = 0; i < prof.c_values.size(); ++i)
      j["c_values"].push_back(prof.attained[i] ? ScalarCodec<S>::to(prof.c_values[i])
                                               : Json("inf"));
    j["thresholds"] = coords_to_json(prof.thresholds);
    j["coercive_on_sample"] = prof.coercive_on_sample;
    return {verdict_status(prof.coercive_on_sample), j};
  }
  if (cmd == "maximalize") {
    auto f = maximalize_1d(step_from_json<S>(in.at("step")));
    return {0, step_to_json(f)};
  }
  if (cmd == "window-related") {
    auto cert = window_related(pair_from_json<S>(in.at("pair")),
                               graph_from_json<S>(in.at("graph")),
                               region_from_json<S>(in.at("window")), tol);
    return {verdict_status(cert.verdict), certificate_to_json(cert)};
  }
  if (cmd == "hull-bound") {
    auto g = graph_from_json<S>(in.at("graph"));
    std::vector<S> w = coords_from_json<S>(in.at("weights"), "weights");
    std::vector<size_t> idx = in.at("idx").get<std::vector<size_t>>();
    auto hb = convex_hull_range_bound(g, w, idx, tol);
    Json j;
    j["x"] = coords_to_json(hb.x.c);
    j["xstar"] = coords_to_json(hb.xstar.c);
    j["bound"] = ScalarCodec<S>::to(hb.bound);
    return {0, j};
  }
  if (cmd == "witness-4-7") {
    auto w = separation_witness(point_from_json<S>(in.at("z")), covector_from_json<S>(in.at("zstar")),
                                point_from_json<S>(in.at("y")), covector_from_json<S>(in.at("ystar")),
                                ScalarCodec<S>::from(in.at("lambda"), "lambda"));
    Json j;
    j["b"] = coords_to_json(w.b.c);
    j["bstar"] = coords_to_json(w.bstar.c);
    j["r"] = ScalarCodec<S>::to(w.r);
    return {0, j};
  }
  if (cmd == "identity-41") {
    auto [lhs, rhs] = quadratic_identity(
        point_from_json<S>(in.at("u")), point_from_json<S>(in.at("v")), point_from_json<S>(in.at("x")),
        covector_from_json<S>(in.at("ustar")), covector_from_json<S>(in.at("vstar")),
        covector_from_json<S>(in.at("xstar")), ScalarCodec<S>::from(in.at("lambda"), "lambda"));
    Json j;
    j["lhs"] = ScalarCodec<S>::to(lhs);
    j["rhs"] = ScalarCodec<S>::to(rhs);
    j["equal"] = scalar_close(lhs, rhs, tol);
    return {0, j};
  }
  if (cmd == "conjugate") {
    auto f = function_from_json<S>(in.at("fn"));
    auto dual = grid_shape_from_json<S>(in.at("dual_grid"));
    return {0, function_to_json(fenchel_conjugate(f, dual))};
  }
  if (cmd == "subgrad-test") {
    auto cert = subgradient_test(function_from_json<S>(in.at("fn")), point_from_json<S>(in.at("x")),
                                 covector_from_json<S>(in.at("xstar")), tol);
    return {verdict_status(cert.verdict), certificate_to_json(cert)};
  }
  if (cmd == "eps-subgrad") {
    auto cert = eps_subdifferential_test(
        function_from_json<S>(in.at("fn")), point_from_json<S>(in.at("x")),
        covector_from_json<S>(in.at("xstar")), ScalarCodec<S>::from(in.at("eps"), "eps"), tol);
    return {verdict_status(cert.verdict), certificate_to_json(cert)};
  }
  if (cmd == "d-plus") {
    auto v = directional_derivative(function_from_json<S>(in.at("fn")),
                                    point_from_json<S>(in.at("x")),
                                    point_from_json<S>(in.at("y")), tol);
    Json j;
    j["value"] = ext_to_json(v);
    return {0, j};
  }
  if (cmd == "reconstruct") {
    auto g = graph_from_json<S>(in.at("graph"));
    size_t base = in.value("base", 0);
    auto res = reconstruct_potential(g, base, tol);
    if (!res.ok) {
      Json j;
      j["cyclic"] = false;
      j["cycle"] = cycle_report_to_json(res.cycle);
      return {1, j};
    }
    return {0, reconstruction_to_json(res.reconstruction)};
  }
  if (cmd == "resolvent") {
    S lambda = ScalarCodec<S>::from(in.at("lambda"), "lambda");
    if (in.contains("step")) {
      S ystar = ScalarCodec<S>::from(in.at("ystar"), "ystar");
      S x = resolve_step(step_from_json<S>(in.at("step")), lambda, ystar);
      Json j;
      j["x"] = Json::array({ScalarCodec<S>::to(x)});
      return {0, j};
    }
    if constexpr (!scalar_traits<S>::is_exact) {
      if (in.contains("fn")) {
        const Json& yj = in.at("ystar");
        Covector<double> ystar = yj.is_array()
                                     ? covector_from_json<double>(yj)
                                     : Covector<double>{{ScalarCodec<double>::from(yj, "ystar")}};
        std::optional<GridShape<double>> shape;
        if (in.contains("grid")) shape = grid_shape_from_json<double>(in["grid"]);
        Point<double> x = resolvent_fn(function_from_json<double>(in.at("fn")),
                                       scalar_traits<S>::to_double(lambda), ystar, shape);
        Json j;
        j["x"] = coords_to_json(x.c);
        return {0, j};
      }
    }
    throw InvalidInput("resolvent needs a \"step\" operator or a \"fn\" (floating backend)");
  }
  if (cmd == "df-extend") {
    auto m = in.contains("M") ? graph_from_json<S>(in.at("M")) : OperatorGraph<S>{};
    auto c = region_from_json<S>(in.at("C"));
    if (m.dim == 0) m.dim = c.dim;
    if (in.contains("x0")) {
      auto u = extend_constant(m, c, point_from_json<S>(in.at("x0")), tol);
      Json j;
      j["xstar"] = coords_to_json(u.c);
      return {0, j};
    }
    if constexpr (!scalar_traits<S>::is_exact) {
      if (in.contains("phi")) {
        PhiOracle phi;
        Json pj = in["phi"];
        if (pj.is_string() && pj == "identity")
          phi = [](const Covector<double>& u) { return Point<double>{u.c}; };
        else if (pj.is_string() && pj == "negate")
          phi = [](const Covector<double>& u) {
            std::vector<double> c(u.c.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = -u.c[i];
            return Point<double>{c};
          };
        else if (pj.is_object() && pj.contains("constant")) {
          Point<double> x0 = point_from_json<double>(pj["constant"]);
          phi = [x0](const Covector<double>&) { return x0; };
        } else {
          throw InvalidInput("phi must be \"identity\", \"negate\" or {\"constant\": [...]}");
        }
        auto res = extend_general(m, c, phi, in.value("tol", 1e-9));
        Json j;
        j["xstar"] = coords_to_json(res.xstar.c);
        j["achieved_min"] = res.achieved_min;
        return {0, j};
      }
    }
    throw InvalidInput("df-extend needs \"x0\" (constant phi) or \"phi\" (floating backend)");
  }
  if (cmd == "gallery") {
    GalleryReport rep = gallery_report(in.at("name").get<std::string>());
    return {verdict_status(rep.pass()), gallery_report_to_json(rep)};
  }
  if (cmd == "gallery-list") {
    Json j;
    j["names"] = gallery_names();
    return {0, j};
  }

  if constexpr (!scalar_traits<S>::is_exact) {
    if (cmd == "br-search") {
      std::optional<GridShape<double>> shape;
      if (in.contains("grid")) shape = grid_shape_from_json<double>(in["grid"]);
      auto res = br_search(function_from_json<double>(in.at("fn")), point_from_json<double>(in.at("x0")),
                           in.at("alpha").get<double>(), in.at("beta").get<double>(), tol, shape);
      Json j;
      j["x"] = coords_to_json(res.x.c);
      j["xstar"] = coords_to_json(res.xstar.c);
      if (!res.note.empty()) j["note"] = res.note;
      return {0, j};
    }
    if (cmd == "descent-witness") {
      std::optional<GridShape<double>> shape;
      if (in.contains("grid")) shape = grid_shape_from_json<double>(in["grid"]);
      auto res = descent_witness(function_from_json<double>(in.at("fn")),
                                 point_from_json<double>(in.at("x")), tol, shape);
      Json j;
      j["z"] = coords_to_json(res.x.c);
      j["zstar"] = coords_to_json(res.xstar.c);
      return {0, j};
    }
    if (cmd == "minty-probe") {
      std::vector<Covector<double>> samples;
      for (const auto& s : in.at("dual_samples")) samples.push_back(covector_from_json<double>(s));
      std::optional<GridShape<double>> shape;
      if (in.contains("grid")) shape = grid_shape_from_json<double>(in["grid"]);
      auto res = maximality_probe(function_from_json<double>(in.at("fn")), samples, tol, shape);
      Json j = certificate_to_json(res.cert);
      j["solutions"] = Json::array();
      for (const auto& p : res.solutions) j["solutions"].push_back(coords_to_json(p.c));
      return {verdict_status(res.cert.verdict), j};
    }
    if (cmd == "dualmap") {
      auto res = duality_map(norm_from_json(in.value("norm", Json())),
                             point_from_json<double>(in.at("x")));
      Json j;
      j["selection"] = coords_to_json(res.selection.c);
      j["single_valued"] = res.single_valued;
      if (!res.face.empty()) {
        j["face"] = Json::array();
        for (const auto& f : res.face) j["face"].push_back(coords_to_json(f.c));
      }
      return {0, j};
    }
    if (cmd == "project") {
      auto res = project(region_from_json<double>(in.at("region")), point_from_json<double>(in.at("x")));
      Json j;
      j["point"] = coords_to_json(res.point.c);
      j["residual"] = res.residual;
      return {0, j};
    }
    if (cmd == "vi-check") {
      std::vector<Point<double>> probes;
      for (const auto& p : in.at("probes")) probes.push_back(point_from_json<double>(p));
      auto cert = projection_vi_check(region_from_json<double>(in.at("region")),
                                      point_from_json<double>(in.at("x")), probes, tol);
      return {verdict_status(cert.verdict), certificate_to_json(cert)};
    }
    if (cmd == "positive-check") {
      Matrix<double> a;
      for (const auto& row : in.at("matrix")) a.push_back(coords_from_json<double>(row, "matrix row"));
      std::vector<Point<double>> samples;
      for (const auto& p : in.at("samples")) samples.push_back(point_from_json<double>(p));
      auto cert = positive_check(a, samples, tol);
      return {verdict_status(cert.verdict), certificate_to_json(cert)};
    }
    if (cmd == "browder") {
      auto res = browder_witness(graph_from_json<double>(in.at("graph")), in.at("r").get<double>(),
                                 norm_from_json(in.value("norm", Json())), in.value("tol", 1e-9));
      Json j;
      j["x"] = coords_to_json(res.witness.x.c);
      j["xstar"] = coords_to_json(res.witness.xstar.c);
      j["achieved_min"] = res.achieved_min;
      return {0, j};
    }
    if (cmd == "kakutani") {
      auto k = region_from_json<double>(in.at("K"));
      Json rj = in.at("R");
      SetMapOracle r;
      if (rj.is_object() && rj.value("kind", "") == "affine_box") {
        Matrix<double> lo_coef, hi_coef;
        for (const auto& row : rj.at("lo_coef")) lo_coef.push_back(row.get<std::vector<double>>());
        for (const auto& row : rj.at("hi_coef")) hi_coef.push_back(row.get<std::vector<double>>());
        std::vector<double> lo0 = rj.at("lo0").get<std::vector<double>>();
        std::vector<double> hi0 = rj.at("hi0").get<std::vector<double>>();
        r = [=](const Point<double>& u) {
          return ConvexRegion<double>::box(add(lo0, mat_vec(lo_coef, u.c)),
                                           add(hi0, mat_vec(hi_coef, u.c)));
        };
      } else if (rj.is_object() && rj.value("kind", "") == "constant") {
        auto image = region_from_json<double>(rj.at("set"));
        r = [image](const Point<double>&) { return image; };
      } else if (rj.is_object() && rj.value("kind", "") == "identity") {
        r = [](const Point<double>& u) { return ConvexRegion<double>::box(u.c, u.c); };
      } else {
        throw InvalidInput("R must be affine_box, constant or identity");
      }
      auto res = kakutani_witness(r, k, in.at("tol").get<double>());
      Json j;
      j["u"] = coords_to_json(res.point.c);
      j["distance"] = res.distance;
      return {0, j};
    }
    if (cmd == "local-bound") {
      Json oj = in.at("op");
      OperatorOracle<double> op;
      if (oj.is_object() && oj.value("kind", "") == "identity")
        op = [](const Point<double>& p) {
          return std::vector<Covector<double>>{Covector<double>{p.c}};
        };
      else if (oj.is_object() && oj.value("kind", "") == "diag") {
        std::vector<double> entries = oj.at("entries").get<std::vector<double>>();
        op = [entries](const Point<double>& p) {
          if (entries.size() != p.c.size())
            throw InvalidInput("diag operator entries do not match the point dimension");
          std::vector<double> c(p.c.size());
          for (size_t i = 0; i < c.size(); ++i) c[i] = entries[i] * p.c[i];
          return std::vector<Covector<double>>{Covector<double>{c}};
        };
      } else if (oj.is_object() && oj.value("kind", "") == "matrix") {
        Matrix<double> a;
        for (const auto& row : oj.at("a")) a.push_back(row.get<std::vector<double>>());
        op = [a](const Point<double>& p) {
          return std::vector<Covector<double>>{Covector<double>{mat_vec(a, p.c)}};
        };
      } else {
        throw InvalidInput("op must be identity, diag or matrix");
      }
      auto values = local_bound_probe(op, point_from_json<double>(in.at("x")),
                                      in.at("radii").get<std::vector<double>>(),
                                      in.value("samples", 64), norm_from_json(in.value("norm", Json())),
                                      in.value("seed", cfg.seed));
      Json j;
      j["values"] = values;
      return {0, j};
    }
  }

  for (const char* float_only :
       {"br-search", "descent-witness", "minty-probe", "dualmap", "project", "vi-check",
        "positive-check", "browder", "kakutani", "local-bound"})
    if (cmd == float_only)
      throw InvalidInput("command '" + cmd + "' requires the floating backend");
  throw InvalidInput("unknown command: " + cmd);
}

}  // namespace

DispatchResult dispatch(const std::string& command, const Json& input, const RunConfig& cfg) {
  if (cfg.exact) return run_typed<Rational>(command, input, cfg);
  return run_typed<double>(command, input, cfg);
}

std::vector<std::string> command_names() {
  return {"check-monotone", "check-cyclic", "related",       "invert",          "sum",
          "coercivity",     "maximalize",   "window-related", "hull-bound",     "witness-4-7",
          "identity-41",    "conjugate",    "subgrad-test",  "eps-subgrad",     "d-plus",
          "br-search",      "descent-witness", "reconstruct", "minty-probe",    "resolvent",
          "dualmap",        "project",      "vi-check",      "positive-check",  "df-extend",
          "browder",        "kakutani",     "local-bound",   "gallery",         "gallery-list"};
}

}  // namespace monokit
