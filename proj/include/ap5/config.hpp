#pragma once

#include "ap5/elimination.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ap5 {

/// Run configuration. File syntax is a TOML subset:
///
///   data_dir = "data/newforms"
///   levels = [70, 350, 8960, 44800]
///   output = "report.json"
///   search_box_x = 200
///   search_box_d = 200
///   search_nmax = 13
///   stage2_primes = [11, 13, 17]     # optional, default 11..97
///   [stage3_primes]
///   7 = [29, 43]
///
/// Relative paths are resolved against the config file's directory.
struct RunConfig {
  std::string data_dir;
  std::vector<std::uint64_t> levels = {70, 350, 8960, 44800};
  std::string output = "report.json";
  std::int64_t search_box_x = 200;
  std::int64_t search_box_d = 200;
  unsigned search_nmax = 13;
  PipelineConfig pipeline = PipelineConfig::defaults();
};

/// Throws ConfigError with the line number on malformed input or when a
/// stage-3 prime is not 1 mod its exponent.
[[nodiscard]] RunConfig parse_run_config(const std::string& text, const std::string& base_dir = "");
[[nodiscard]] RunConfig load_run_config(const std::string& path);

}  // namespace ap5
