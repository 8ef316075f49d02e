#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncx::verify {

struct Options {
  std::uint64_t seed = 7;
  long trials = 1000;
  long bound = 5;
};

struct SuiteResult {
  std::string suite;
  std::string ring;   // "rational", "quaternion" or "-"
  long trials = 0;    // sampled instances
  long checks = 0;    // individual exact identity evaluations
  long failures = 0;
  std::vector<std::string> counterexamples; // capped, re-parsable values inside

  bool passed() const { return failures == 0; }
};

// Stable suite order; "all" is accepted by run_suite but not listed.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite (one SuiteResult per scalar ring it covers) or, for
// "all", every suite in order. Deterministic for fixed Options.
std::vector<SuiteResult> run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

bool all_passed(const std::vector<SuiteResult>& results);

} // namespace ncx::verify
