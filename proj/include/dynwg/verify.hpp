#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dynwg/json_io.hpp"
#include "dynwg/rep.hpp"

// Verification suites shared by the CLI and the test programs.
namespace dynwg {

struct VerifyConfig {
  LieType algebra{'A', 1};
  std::optional<Weight> hw;
  std::optional<WeylWord> word;  ///< cocycle suite: element to test (default: longest)
  int lambda_max = 8;
  long dim_cap = kDefaultDimCap;
  int word_cap = 32;
  std::uint64_t seed = 0;
  int jobs = 0;  ///< 0: hardware concurrency
  IrrepCache* cache = nullptr;
};

struct CaseResult {
  std::string key;
  bool pass = false;
  json detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;  ///< sorted by key

  bool all_pass() const;
  json to_json() const;
  std::string to_text() const;
};

extern const std::vector<std::string> kSuiteNames;

/// Runs "satake-rank1", "cocycle", "levi" or "rep". Throws InvalidArgument on
/// an unknown suite or missing configuration.
SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg);

/// Runs fn(0..n-1) on a pool of `jobs` threads (0: hardware concurrency).
/// The first exception thrown by any task is rethrown.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

/// Stable 64-bit seed for a case, independent of scheduling.
std::uint64_t case_seed(std::uint64_t seed, const std::string& key);

}  // namespace dynwg
