#include <cstdio>
#include <cstdlib>

#include "acceptance.hpp"

using namespace orlicz::acceptance;

int main() {
  SuiteOptions opts;
  opts.seed = 42;
  bool all = true;
  for (const auto& r : run_suite(opts)) {
    std::printf("%s criterion %2d %-24s measured=%s tol=%s cases=%ld\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), format_double(r.measured).c_str(), format_double(r.tolerance).c_str(), r.cases);
    if (!r.passed || std::getenv("ORLICZ_VERBOSE")) std::printf("     %s\n", r.detail.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
