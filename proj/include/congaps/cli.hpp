#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "congaps/arith.hpp"

namespace congaps::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kPrecondition = 2, kIoFailure = 3 };

struct RunConfig {
  std::string command;  // constants | mertens | count | shiu | census | contour | suite
  u64 q = 3;
  u64 a = 1;
  std::optional<double> x;  // X; each command has its own default
  u64 h = 100'000;
  double epsilon = 1.0;
  double y = 1.0;
  double tol = 1e-8;
  std::optional<double> band;  // ratio band for mertens/count
  u64 p0 = 1;
  double c = 1.0;        // c in X^{1 - c / log log X}
  double shiu_C = 1.0;   // Shiu's constant
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  unsigned threads = 1;
  std::string scale = "small";
  std::string mode = "hankel";
  double beta = 0.5;
  std::optional<double> eta;
  std::optional<double> r;
  std::optional<double> T;
  std::optional<double> kappa;
  u64 terms = 20;
  double u_max = 30.0;
  bool list_pairs = false;
};

// Flat "key = value" lines; '#' starts a comment. Unknown keys are rejected.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

// Applies one key to the config; throws DomainError for unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Checks cross-field preconditions for the selected command.
void validate(const RunConfig& cfg);

// Runs one command, writing its report to cfg.out or `fallback`.
int run(const RunConfig& cfg, std::ostream& fallback);

// Parses argv (flags override --config file values) and runs; maps errors to exit codes.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace congaps::cli
