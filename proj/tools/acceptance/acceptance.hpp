#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  /// young, classical, quantum, maps or determinism; used by --only.
  std::string group;
  bool passed = false;
  long cases = 0;
  /// Worst observed value of the criterion's error measure.
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Group names or criterion ids; empty selects everything.
  std::vector<std::string> only;
  /// Worker threads; 0 reads ORLICZ_KIT_THREADS and falls back to 1.
  int threads = 0;
};

/// Number of criteria in the full suite.
inline constexpr int kCriterionCount = 12;

/// Runs the selected criteria. Each criterion draws from its own generator
/// seeded by (seed, id), and results come back ordered by id regardless of
/// the thread count.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// True when `selector` (group name or id) picks criterion `id`.
bool selects(const std::string& selector, int id);

/// Canonical one-line serialization used for the byte-identity check.
std::string canonical(const CriterionResult& r);

/// Fixed-format rendering of a double ("%.6e", "+inf", "nan").
std::string format_double(double v);

}  // namespace orlicz::acceptance
