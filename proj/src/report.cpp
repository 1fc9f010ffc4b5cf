#include "congaps/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "congaps/error.hpp"

namespace congaps {

ComparisonReport compare(std::string label, double actual, double predicted, double tol,
                         std::map<std::string, double> params) {
  if (predicted == 0.0) throw DomainError("compare: predicted value is zero for '" + label + "'");
  if (!(tol >= 0.0)) throw DomainError("compare: tolerance must be non-negative");
  ComparisonReport r;
  r.label = std::move(label);
  r.actual = actual;
  r.predicted = predicted;
  r.ratio = actual / predicted;
  r.tol = tol;
  r.params = std::move(params);
  r.pass = r.ratio >= 1.0 - tol && r.ratio <= 1.0 + tol;
  return r;
}

nlohmann::ordered_json to_json(const ComparisonReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["actual"] = r.actual;
  j["predicted"] = r.predicted;
  j["ratio"] = r.ratio;
  j["params"] = params;
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv_header(std::ostream& os) { os << "label,actual,predicted,ratio,params,pass\n"; }

void write_csv_row(std::ostream& os, const ComparisonReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += ';';
    params += k + "=" + format_double(v);
  }
  os << csv_escape(r.label) << ',' << format_double(r.actual) << ',' << format_double(r.predicted) << ','
     << format_double(r.ratio) << ',' << csv_escape(params) << ',' << (r.pass ? "true" : "false") << '\n';
}

}  // namespace congaps
