#pragma once

#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

namespace congaps {

// Outcome of one asymptotic comparison. `pass` follows `criterion`:
// Band means ratio within [1 - tol, 1 + tol]; AtLeast means actual >= predicted;
// Report records the numbers without a verdict (pass is true when finite).
struct ComparisonReport {
  enum class Criterion { Band, AtLeast, Report };

  std::string label;
  double actual = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  double tol = 0.0;
  std::map<std::string, double> params;
  bool pass = false;
  Criterion criterion = Criterion::Band;
  std::string note;
};

ComparisonReport compare(std::string label, double actual, double predicted, double tol,
                         std::map<std::string, double> params = {});

nlohmann::ordered_json to_json(const ComparisonReport& r);

// CSV columns: label,actual,predicted,ratio,params,pass. params is a
// semicolon-separated key=value list.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ComparisonReport& r);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

}  // namespace congaps
