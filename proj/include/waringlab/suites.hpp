#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waringlab/json_io.hpp"

namespace waringlab {

/// Configuration of a randomized verification suite over one theorem label.
struct SuiteConfig {
  std::string theorem;  // main | sylvester-bound | terracini | cb | fermat-plus | penta
  int n_lo = 1;
  int n_hi = 1;
  int trials = 1;
  std::uint64_t seed = 0;
};

struct SuiteFailure {
  int n = 0;
  int trial = 0;
  std::string check;
  Json witness;
};

struct PerN {
  int n = 0;
  int pass = 0;
  int fail = 0;
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<PerN> per_n;
  std::optional<SuiteFailure> first_failure;

  bool all_pass() const {
    for (const auto& p : per_n)
      if (p.fail > 0) return false;
    return true;
  }
  Json to_json() const;
};

/// Runs trials per n; every check inside a trial must pass for the trial to
/// count as a pass. Identical configs give identical results and identical
/// JSON bytes.
SuiteResult run_suite(const SuiteConfig& cfg);

bool is_known_theorem(const std::string& name);

}  // namespace waringlab
