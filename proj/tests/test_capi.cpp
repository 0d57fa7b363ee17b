#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "monokit/monokit.h"

namespace {

struct Session {
  mk_session* s;
  explicit Session(const char* cfg = nullptr) : s(mk_session_new(cfg)) {}
  ~Session() { mk_session_free(s); }
};

struct Result {
  int status;
  std::string output;
};

Result eval(mk_session* s, const char* cmd, const std::string& input) {
  char* out = nullptr;
  int status = mk_eval(s, cmd, input.c_str(), &out);
  Result r{status, out ? out : ""};
  mk_buffer_free(out);
  return r;
}

}  // namespace

TEST_CASE("version and command listing") {
  CHECK(std::string(mk_version()) == "0.1.0");
  char* cmds = mk_commands();
  REQUIRE(cmds != nullptr);
  std::string list(cmds);
  mk_buffer_free(cmds);
  CHECK(list.find("check-monotone") != std::string::npos);
  CHECK(list.find("gallery") != std::string::npos);
}

TEST_CASE("check-monotone through the C interface") {
  Session s;
  REQUIRE(s.s != nullptr);
  auto good = eval(s.s, "check-monotone",
                   R"({"graph":{"dim":1,"pairs":[{"x":[0],"xstar":[0]},{"x":[1],"xstar":[1]}]}})");
  CHECK(good.status == MK_OK);
  CHECK(good.output.find("\"verdict\": true") != std::string::npos);

  auto bad = eval(s.s, "check-monotone",
                  R"({"graph":{"dim":1,"pairs":[{"x":[0],"xstar":[1]},{"x":[1],"xstar":[0]}]}})");
  CHECK(bad.status == MK_CHECK_FALSE);
  CHECK(bad.output.find("-1") != std::string::npos);
}

TEST_CASE("exact backend runs the gallery") {
  Session s(R"({"backend":"exact"})");
  REQUIRE(s.s != nullptr);
  auto res = eval(s.s, "gallery", R"({"name":"rotation-2-23"})");
  CHECK(res.status == MK_OK);
  CHECK(res.output.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("error paths: unknown command, malformed json, bad config") {
  Session s;
  auto unknown = eval(s.s, "no-such-op", "{}");
  CHECK(unknown.status == MK_ERROR);
  CHECK(std::string(mk_last_error(s.s)).find("unknown command") != std::string::npos);

  auto malformed = eval(s.s, "check-monotone", "{not json");
  CHECK(malformed.status == MK_ERROR);
  CHECK(std::string(mk_last_error(s.s)).find("malformed JSON") != std::string::npos);

  CHECK(mk_session_new(R"({"backend":"exact","tol_abs":1e-6})") == nullptr);
  CHECK(mk_session_new("{bad") == nullptr);
}

TEST_CASE("exact backend rejects float literals in graph data") {
  Session s(R"({"backend":"exact"})");
  auto res = eval(s.s, "check-monotone",
                  R"({"graph":{"dim":1,"pairs":[{"x":[0.25],"xstar":[1]}]}})");
  CHECK(res.status == MK_ERROR);
  CHECK(std::string(mk_last_error(s.s)).find("exact backend") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  Session s(R"({"backend":"float","seed":7})");
  std::string input =
      R"({"graph":{"dim":2,"pairs":[{"x":[1,1],"xstar":[1,-1]},{"x":[0,1],"xstar":[1,0]},{"x":[1,0],"xstar":[0,-1]}]},"n":3})";
  auto a = eval(s.s, "check-cyclic", input);
  auto b = eval(s.s, "check-cyclic", input);
  CHECK(a.status == MK_CHECK_FALSE);
  CHECK(a.output == b.output);
}

TEST_CASE("outputs round-trip through the documented schemas") {
  Session s;
  auto inv = eval(s.s, "invert",
                  R"({"graph":{"dim":1,"pairs":[{"x":[1],"xstar":[2]}]}})");
  REQUIRE(inv.status == MK_OK);
  // the emitted graph is itself valid input: invert twice = identity
  auto twice = eval(s.s, "invert", std::string("{\"graph\":") + inv.output + "}");
  REQUIRE(twice.status == MK_OK);
  CHECK(twice.output.find("\"pairs\"") != std::string::npos);

  auto conj = eval(s.s, "conjugate",
                   R"({"fn":{"repr":"quadratic","q":[[1]],"b":[0],"c":0},
                       "dual_grid":{"lo":[-2],"hi":[2],"steps":[4]}})");
  REQUIRE(conj.status == MK_OK);
  // conjugate output is a grid function usable as input again
  auto back = eval(s.s, "subgrad-test",
                   std::string("{\"fn\":") + conj.output + R"(,"x":[1],"xstar":[1]})");
  CHECK(back.status == MK_OK);
}

TEST_CASE("resolvent and df-extend round trips") {
  Session s;
  auto r = eval(s.s, "resolvent",
                R"({"step":{"breakpoints":[0],"regions":[0,1],"points":[null]},"lambda":1,"ystar":0.5})");
  CHECK(r.status == MK_OK);
  CHECK(r.output.find("\"x\"") != std::string::npos);

  Session ex(R"({"backend":"exact"})");
  auto d = eval(ex.s, "df-extend",
                R"({"M":{"dim":1,"pairs":[{"x":[-1],"xstar":[-1]},{"x":[1],"xstar":[1]}]},
                    "C":{"kind":"box","lo":[-1],"hi":[1]},"x0":[2]})");
  CHECK(d.status == MK_OK);
  CHECK(d.output.find("\"xstar\"") != std::string::npos);
  CHECK(d.output.find("\"1\"") != std::string::npos);
}
