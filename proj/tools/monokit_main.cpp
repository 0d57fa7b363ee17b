// Command-line front end; all computation goes through the C API of the
// shared library.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monokit/monokit.h"

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOpts {
  std::string backend = "float";
  double tol_abs = -1, tol_rel = -1;
  long long seed = 0;
  std::string input_path;   // empty or "-" = stdin
  std::string output_path;  // empty = stdout
  bool table = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

Json scalar_arg(const std::string& s, bool exact) {
  if (!exact) return std::stod(s);
  return s;  // exact backend takes "p/q" strings verbatim
}

Json list_arg(const std::string& csv, bool exact) {
  Json out = Json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scalar_arg(item, exact));
  return out;
}

// lo:hi:steps (1-d) or lo1,lo2:hi1,hi2:s1,s2
Json grid_arg(const std::string& spec, bool exact) {
  auto p1 = spec.find(':');
  auto p2 = spec.rfind(':');
  if (p1 == std::string::npos || p2 == p1)
    throw std::runtime_error("grid spec must be lo:hi:steps");
  Json g;
  g["lo"] = list_arg(spec.substr(0, p1), exact);
  g["hi"] = list_arg(spec.substr(p1 + 1, p2 - p1 - 1), exact);
  g["steps"] = Json::array();
  for (double v : parse_list(spec.substr(p2 + 1))) g["steps"].push_back(static_cast<int>(v));
  return g;
}

Json norm_arg(const std::string& s) {
  Json n;
  if (s == "euclidean" || s.empty()) {
    n["kind"] = "euclidean";
  } else if (s == "sup") {
    n["kind"] = "sup";
  } else if (s.rfind("lp:", 0) == 0) {
    n["kind"] = "lp";
    n["p"] = std::stod(s.substr(3));
  } else {
    throw std::runtime_error("norm must be euclidean, sup or lp:<p>");
  }
  return n;
}

void render_table(const Json& out, std::ostream& os) {
  if (out.contains("claims")) {
    os << "report: " << out.value("name", "") << "  ["
       << (out.value("pass", false) ? "PASS" : "FAIL") << "]\n";
    for (const auto& c : out["claims"])
      os << "  " << (c.value("pass", false) ? "ok   " : "FAIL ") << c.value("what", "")
         << "  expected=" << c.value("expected", "") << "  computed=" << c.value("computed", "")
         << "\n";
    for (const auto& n : out.value("notes", Json::array())) os << "  note: " << n.get<std::string>() << "\n";
    return;
  }
  if (out.contains("verdict")) {
    os << "verdict: " << (out["verdict"].get<bool>() ? "true" : "false") << "\n";
    if (out.contains("value")) os << "value: " << out["value"].dump() << "\n";
    if (out.contains("cycle")) os << "cycle: " << out["cycle"].dump() << "\n";
    if (out.contains("sum")) os << "sum: " << out["sum"].dump() << "\n";
    for (const auto& w : out.value("witnesses", Json::array()))
      os << "witness: x=" << w["x"].dump() << " xstar=" << w["xstar"].dump() << "\n";
    if (out.contains("note")) os << "note: " << out["note"].get<std::string>() << "\n";
    return;
  }
  os << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monokit: checks, certificates and counterexample reports for "
               "finite-dimensional monotone-operator calculus"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--backend", g.backend, "scalar backend: float or exact")
      ->check(CLI::IsMember({"float", "exact"}));
  app.add_option("--tol-abs", g.tol_abs, "absolute tolerance (floating backend)");
  app.add_option("--tol-rel", g.tol_rel, "relative tolerance (floating backend)");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_option("--input", g.input_path, "input JSON file (default stdin)");
  app.add_option("--output", g.output_path, "output file (default stdout)");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "emit JSON (default)");
  app.add_flag("--table", g.table, "emit a human-readable table");

  // Per-command extras merged into the input document.
  struct Extra {
    std::string n = "full";
    std::string lambda, eps, ystar;  // exact-capable: forwarded verbatim in exact mode
    double alpha = 0, beta = 0, r = 1, tol = 1e-6;
    long long base = 0;
    std::string radii, thresholds, weights, idx, dual_grid, grid, norm, constant, phi, name;
    bool has_alpha = false, has_beta = false, has_r = false, has_tol = false, has_base = false;
  };
  auto extra = std::make_shared<Extra>();

  std::vector<std::string> commands = {
      "check-monotone", "check-cyclic", "related",        "invert",         "sum",
      "coercivity",     "maximalize",   "window-related", "hull-bound",     "witness-4-7",
      "identity-41",    "conjugate",    "subgrad-test",   "eps-subgrad",    "d-plus",
      "br-search",      "descent-witness", "reconstruct",  "minty-probe",   "resolvent",
      "dualmap",        "project",      "vi-check",       "positive-check", "df-extend",
      "browder",        "kakutani",     "local-bound",    "gallery",        "gallery-list"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();  // global flags may follow the subcommand
    if (name == "check-cyclic") sub->add_option("--n", extra->n, "cycle length cap or 'full'");
    if (name == "gallery") sub->add_option("name", extra->name, "report name")->required();
    if (name == "coercivity") {
      sub->add_option("--radii", extra->radii, "comma-separated radii");
      sub->add_option("--thresholds", extra->thresholds, "comma-separated thresholds");
      sub->add_option("--norm", extra->norm, "norm: euclidean, sup or lp:<p>");
    }
    if (name == "witness-4-7" || name == "identity-41")
      sub->add_option("--lambda", extra->lambda, "convex weight, scalar or p/q");
    if (name == "br-search") {
      sub->add_option("--alpha", extra->alpha)->each([extra](const std::string&) {
        extra->has_alpha = true;
      });
      sub->add_option("--beta", extra->beta)->each([extra](const std::string&) {
        extra->has_beta = true;
      });
      sub->add_option("--grid", extra->grid, "probe grid lo:hi:steps");
    }
    if (name == "descent-witness" || name == "minty-probe")
      sub->add_option("--grid", extra->grid, "probe grid lo:hi:steps");
    if (name == "eps-subgrad")
      sub->add_option("--eps", extra->eps, "slack, scalar or p/q");
    if (name == "reconstruct")
      sub->add_option("--base", extra->base)->each([extra](const std::string&) {
        extra->has_base = true;
      });
    if (name == "resolvent") {
      sub->add_option("--lambda", extra->lambda, "scalar or p/q");
      sub->add_option("--ystar", extra->ystar, "scalar or p/q");
      sub->add_option("--grid", extra->grid, "probe grid lo:hi:steps");
    }
    if (name == "conjugate") sub->add_option("--dual-grid", extra->dual_grid, "dual grid lo:hi:steps");
    if (name == "hull-bound") {
      sub->add_option("--weights", extra->weights, "comma-separated weights");
      sub->add_option("--idx", extra->idx, "comma-separated node indices");
    }
    if (name == "dualmap") sub->add_option("--norm", extra->norm, "norm: euclidean, sup or lp:<p>");
    if (name == "browder") {
      sub->add_option("--r", extra->r)->each([extra](const std::string&) { extra->has_r = true; });
      sub->add_option("--norm", extra->norm, "norm: euclidean, sup or lp:<p>");
      sub->add_option("--tol", extra->tol)->each([extra](const std::string&) {
        extra->has_tol = true;
      });
    }
    if (name == "kakutani")
      sub->add_option("--tol", extra->tol)->each([extra](const std::string&) {
        extra->has_tol = true;
      });
    if (name == "df-extend") {
      sub->add_option("--constant", extra->constant, "x0 coordinates for constant phi");
      sub->add_option("--phi", extra->phi, "builtin phi: identity or negate");
    }
    if (name == "local-bound") {
      sub->add_option("--radii", extra->radii, "comma-separated radii");
      sub->add_option("--norm", extra->norm, "norm: euclidean, sup or lp:<p>");
    }
  }

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  std::string cmd = sub->get_name();
  bool exact = g.backend == "exact";

  try {
    // Commands that need no input document read none.
    bool needs_input = !(cmd == "gallery" || cmd == "gallery-list");
    Json input = Json::object();
    if (needs_input && !(g.input_path.empty() && ::isatty(0) != 0)) {
      std::string text = read_input(g.input_path);
      if (!text.empty()) {
        try {
          input = Json::parse(text);
        } catch (const Json::parse_error& e) {
          throw std::runtime_error(std::string("malformed JSON: ") + e.what());
        }
      }
    }

    if (cmd == "check-cyclic") {
      if (extra->n == "full")
        input["n"] = "full";
      else
        input["n"] = std::stoi(extra->n);
    }
    if (cmd == "gallery") input["name"] = extra->name;
    if (!extra->radii.empty()) input["radii"] = list_arg(extra->radii, exact);
    if (!extra->thresholds.empty()) input["thresholds"] = list_arg(extra->thresholds, exact);
    if (!extra->weights.empty()) input["weights"] = list_arg(extra->weights, exact);
    if (!extra->idx.empty()) {
      input["idx"] = Json::array();
      for (double v : parse_list(extra->idx)) input["idx"].push_back(static_cast<size_t>(v));
    }
    if (!extra->dual_grid.empty()) input["dual_grid"] = grid_arg(extra->dual_grid, exact);
    if (!extra->grid.empty()) input["grid"] = grid_arg(extra->grid, exact);
    if (!extra->norm.empty()) input["norm"] = norm_arg(extra->norm);
    if (!extra->constant.empty()) input["x0"] = list_arg(extra->constant, exact);
    if (!extra->phi.empty()) input["phi"] = extra->phi;
    if (!extra->lambda.empty()) input["lambda"] = scalar_arg(extra->lambda, exact);
    if (!extra->eps.empty()) input["eps"] = scalar_arg(extra->eps, exact);
    if (!extra->ystar.empty()) input["ystar"] = scalar_arg(extra->ystar, exact);
    if (extra->has_alpha) input["alpha"] = extra->alpha;
    if (extra->has_beta) input["beta"] = extra->beta;
    if (extra->has_r) input["r"] = extra->r;
    if (extra->has_tol) input["tol"] = extra->tol;
    if (extra->has_base) input["base"] = extra->base;
    if (cmd == "kakutani" && !input.contains("tol")) input["tol"] = extra->tol;

    Json config;
    config["backend"] = g.backend;
    if (g.tol_abs >= 0) config["tol_abs"] = g.tol_abs;
    if (g.tol_rel >= 0) config["tol_rel"] = g.tol_rel;
    config["seed"] = g.seed;

    mk_session* session = mk_session_new(config.dump().c_str());
    if (!session) {
      std::cerr << "error: invalid configuration\n";
      return MK_ERROR;
    }
    char* out_buf = nullptr;
    int status = mk_eval(session, cmd.c_str(), input.dump().c_str(), &out_buf);
    std::string out_text = out_buf ? out_buf : "{}";
    mk_buffer_free(out_buf);
    if (status == MK_ERROR) {
      std::cerr << "error: " << mk_last_error(session) << "\n";
      mk_session_free(session);
      return MK_ERROR;
    }
    mk_session_free(session);

    Json out = Json::parse(out_text);
    if (g.table) {
      std::ostringstream os;
      render_table(out, os);
      write_output(g.output_path, os.str());
    } else {
      write_output(g.output_path, out.dump(2) + "\n");
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return MK_ERROR;
  }
}
