#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace congaps {

enum class SuiteScale { Small, Full };

struct SuiteOptions {
  SuiteScale scale = SuiteScale::Full;
  std::filesystem::path cache_dir;
  unsigned threads = 1;
};

struct SuiteCheck {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds, at full scale
  nlohmann::ordered_json detail;
};

// Acceptance battery, cheapest checks first. Small scale caps every limit at
// 10^5; full scale uses 10^7.
std::vector<SuiteCheck> run_suite(const SuiteOptions& opts);

// Report without wall-clock fields unless include_timing is set.
nlohmann::ordered_json suite_report_json(const std::vector<SuiteCheck>& checks, SuiteScale scale, bool include_timing);

}  // namespace congaps
