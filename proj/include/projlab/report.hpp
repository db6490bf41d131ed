#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace projlab {

/// Pass/fail for one named property. A failure carries the first
/// counterexample found in canonical order, as indices into the carrier
/// the property was checked on, so it can be re-checked independently.
struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string name) : property(std::move(name)) {}

  std::string property;
  bool pass = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

class PropertyReport {
 public:
  void add(Verdict v) { verdicts_.push_back(std::move(v)); }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  /// Throws std::out_of_range when the property was not checked.
  const Verdict& at(const std::string& property) const;
  const Verdict* find(const std::string& property) const;
  bool passes(const std::string& property) const { return at(property).pass; }
  bool all_pass() const;
  std::string summary() const;

 private:
  std::vector<Verdict> verdicts_;
};

/// Record that a backtracking search visited its whole tree.
struct ExhaustionCertificate {
  std::string statement;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  /// Pruning rule -> number of times it cut a branch.
  std::map<std::string, std::uint64_t> prunes;
  bool exhausted = false;
};

}  // namespace projlab
