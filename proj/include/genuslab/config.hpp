#pragma once

#include <cstdint>
#include <string>

namespace genuslab {

enum class OutputFormat { json, text };

struct RunConfig {
  std::uint64_t enumeration_budget = 100'000'000;
  unsigned thread_count = 0;  // 0 = hardware concurrency
  OutputFormat output_format = OutputFormat::json;
  std::uint64_t seed = 20240521;

  unsigned resolved_threads() const;

  /// Defaults, with GENUSLAB_BUDGET applied when set.
  static RunConfig from_environment();
};

}  // namespace genuslab
