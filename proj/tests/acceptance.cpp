#include <cstdio>

#include "genuslab/acceptance.hpp"

int main() {
  int failed = 0;
  genuslab::run_acceptance({}, [&](const genuslab::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::printf("%s criterion %d: %s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
  });
  return failed == 0 ? 0 : 1;
}
