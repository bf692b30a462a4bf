#pragma once

#include <string>

#include "deltaspringer/json_io.hpp"

namespace ds {

// Exit-status contract shared by the C API and the CLI: 0 success,
// 1 verification failure, 2 usage error, 3 internal invariant violation
// (with a reproduction payload in the error message).
struct ServiceResult {
  int status = 0;
  std::string output;  // stdout bytes, deterministic for a given request
  std::string error;   // stderr message when status != 0
};

// Evaluates one request of the form {"cmd": "...", ...args}. This is the
// single entry point the shared library exports; every CLI subcommand is
// a thin argv-to-request translation.
ServiceResult eval_request(const std::string& request_json);
ServiceResult eval_request(const json& request);

// Size guard, overridable through the DELTA_SPRINGER_MAX_N variable.
int max_n_cap();

}  // namespace ds
