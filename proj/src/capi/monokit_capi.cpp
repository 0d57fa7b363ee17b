#include "monokit/monokit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "monokit/dispatch.hpp"

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct mk_session {
  monokit::RunConfig cfg;
  std::string last_error;
};

extern "C" {

mk_session* mk_session_new(const char* config_json) {
  try {
    auto* s = new mk_session;
    if (config_json && *config_json)
      s->cfg = monokit::RunConfig::from_json(monokit::Json::parse(config_json));
    return s;
  } catch (...) {
    return nullptr;
  }
}

void mk_session_free(mk_session* s) { delete s; }

int mk_eval(mk_session* s, const char* command, const char* input_json, char** output_json) {
  if (output_json) *output_json = nullptr;
  if (!s) return MK_ERROR;
  s->last_error.clear();
  auto fail = [&](const std::string& message) {
    s->last_error = message;
    if (output_json) {
      monokit::Json err;
      err["error"] = message;
      *output_json = dup_string(err.dump(2));
    }
    return MK_ERROR;
  };
  if (!command) return fail("missing command");
  try {
    monokit::Json input = monokit::Json::object();
    if (input_json && *input_json) input = monokit::Json::parse(input_json);
    monokit::DispatchResult res = monokit::dispatch(command, input, s->cfg);
    if (output_json) *output_json = dup_string(res.output.dump(2));
    return res.status;
  } catch (const monokit::Json::parse_error& e) {
    return fail(std::string("malformed JSON: ") + e.what());
  } catch (const monokit::SearchExhausted& e) {
    return fail(std::string(e.what()) + " (residual " + std::to_string(e.residual) + ")");
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

void mk_buffer_free(char* buf) { std::free(buf); }

const char* mk_last_error(const mk_session* s) { return s ? s->last_error.c_str() : ""; }

char* mk_commands(void) {
  monokit::Json j = monokit::command_names();
  return dup_string(j.dump());
}

const char* mk_version(void) { return "0.1.0"; }

}  // extern "C"
