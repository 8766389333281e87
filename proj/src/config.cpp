#include "genuslab/config.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace genuslab {

unsigned RunConfig::resolved_threads() const {
  if (thread_count != 0) return thread_count;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

RunConfig RunConfig::from_environment() {
  RunConfig config;
  if (const char* env = std::getenv("GENUSLAB_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long budget = std::strtoull(env, &end, 10);
    if (*end != '\0' || budget == 0) {
      throw std::invalid_argument("GENUSLAB_BUDGET must be a positive integer");
    }
    config.enumeration_budget = budget;
  }
  return config;
}

}  // namespace genuslab
