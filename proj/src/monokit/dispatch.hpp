#ifndef MONOKIT_DISPATCH_HPP
#define MONOKIT_DISPATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "monokit/json_codec.hpp"

namespace monokit {

struct RunConfig {
  bool exact = false;
  Tolerance tol;
  uint64_t seed = 0;

  static RunConfig from_json(const Json& j);
};

struct DispatchResult {
  int status = 0;  // 0 pass/success, 1 verdict false, 2 usage/validation
  Json output;
};

// Runs a named operation on a JSON input document. Throws InvalidInput /
// SearchExhausted for status-2 conditions; the C boundary translates them.
DispatchResult dispatch(const std::string& command, const Json& input, const RunConfig& cfg);

std::vector<std::string> command_names();

}  // namespace monokit

#endif
