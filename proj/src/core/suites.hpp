#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/algebra.hpp"

namespace symcone {

struct SuiteConfig {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  long trials = 0;  // 0 -> suite default
  int n = 0;        // matrix size for matrix-land suites, 0 -> default
  int samples = 0;  // lie-span sample count, 0 -> default
  std::optional<Algebra> algebra;
};

struct CheckResult {
  std::string name;
  long trials = 0;
  double max_violation = 0.0;
  bool pass = false;
  std::string note;  // extra key=value details, may be empty
};

struct SuiteReport {
  std::string suite;
  std::string algebra;  // compact description, "-" for matrix-land suites
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<CheckResult> checks;

  double max_violation() const;
  bool pass() const;
  // Deterministic line-oriented text ending in a machine-readable SUMMARY
  // record; identical configs yield byte-identical output.
  std::string render() const;
};

const std::vector<std::string>& suite_names();

// Runs one named suite; StructuralError on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace symcone
