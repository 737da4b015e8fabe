#pragma once

#include <string>

#include <json.hpp>

namespace decoreq {

/// Outcome of one CLI command. The JSON form is schema-stable:
/// {"command", "status", "elapsed_ms", "details"}; exit code 0 iff ok,
/// 2 for usage/parse errors (set by the driver).
struct Report {
  std::string command;
  bool ok = false;
  double elapsed_ms = 0.0;
  nlohmann::json details = nlohmann::json::object();
  std::string text; // human-readable rendering

  int exit_code() const { return ok ? 0 : 1; }
  nlohmann::json to_json() const;
};

} // namespace decoreq
