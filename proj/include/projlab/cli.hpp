#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "projlab/report.hpp"

// Command-line frontend for the `ps` tool.
namespace projlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Outcome of one command. Serialized with sorted keys, so the JSON is
/// byte-identical across runs apart from "wall_time_ms".
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;
  std::map<std::string, std::uint64_t> nodes;
  /// Headline answer, compared against --expect unless that is pass/fail.
  std::string result;
  bool ok = true;
  nlohmann::json data = nlohmann::json::object();
  double wall_time_ms = 0;

  void add(const PropertyReport& report, const std::string& prefix = "");
  nlohmann::json to_json() const;
};

/// Runs `ps` with argv[0] excluded. Human-readable text goes to `out`,
/// diagnostics and usage to `err`. Exit codes: 0 when the outcome matches
/// the expectation (by default: everything passed), 1 on a property failure
/// or an --expect mismatch, 2 on usage, parse or I/O errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projlab::cli
