#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/rational.hpp"

namespace quintic {

struct SuiteOptions {
  long height_bound = 200;
  long precision_bits = 512;
  Integer denominator_bound{"1000000000000"};
  long prime_bound = 500;
  unsigned threads = 0;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Deterministic: depends only on the options, never on timing or threads.
  std::string detail;
};

inline constexpr int kCriteria = 10;

/// Criteria 1..9 are self-contained; 10 reruns 1..9 twice and compares the
/// rendered rows.
CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_reference_suite(const SuiteOptions& opts);
std::string render_report(const std::vector<CriterionResult>& rows);

}  // namespace quintic
