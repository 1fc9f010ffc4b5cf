#include "congaps/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "congaps/asymptotics.hpp"
#include "congaps/census.hpp"
#include "congaps/characters.hpp"
#include "congaps/constants.hpp"
#include "congaps/contour.hpp"
#include "congaps/error.hpp"
#include "congaps/report.hpp"
#include "congaps/shiu.hpp"
#include "congaps/suite.hpp"

namespace congaps::cli {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kCommands = {"constants", "mertens", "count", "shiu", "census", "contour", "suite"};

// Config key -> flag name (without the leading dashes) and help text.
struct KeySpec {
  const char* key;
  const char* flag;
  const char* help;
  bool is_flag = false;
};

const std::vector<KeySpec> kKeys = {
    {"q", "q", "modulus q"},
    {"a", "a", "residue a (coprime to q)"},
    {"x", "x", "limit X"},
    {"h", "h", "Shiu construction size H"},
    {"epsilon", "epsilon", "gap factor epsilon"},
    {"y", "y", "prime cutoff Y for restricted integers"},
    {"tol", "tol", "tolerance for the analytic constants"},
    {"band", "band", "accepted ratio band for mertens/count"},
    {"p0", "p0", "excluded prime p0 (1 or a prime > log H)"},
    {"c", "c", "constant c of the X^{1 - c/loglog X} bound"},
    {"C", "C", "Shiu's constant C"},
    {"format", "format", "json or csv"},
    {"out", "out", "output path (default: stdout)"},
    {"cache_dir", "cache-dir", "prime cache directory (default: $CONGAPS_CACHE_DIR)"},
    {"threads", "threads", "worker thread cap"},
    {"scale", "scale", "suite scale: small or full"},
    {"mode", "mode", "contour mode: hankel, perron or gamma"},
    {"beta", "beta", "Hankel exponent beta, or incomplete-gamma beta"},
    {"eta", "eta", "Hankel slit length eta"},
    {"r", "r", "Hankel circle radius"},
    {"T", "T", "truncation height T"},
    {"kappa", "kappa", "abscissa kappa"},
    {"terms", "terms", "number of unit coefficients in the Perron polynomial"},
    {"u_max", "u-max", "upper limit of the incomplete gamma integral"},
    {"list_pairs", "list-pairs", "census: stream every pair as CSV", true},
};

double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw DomainError("'" + key + "' expects a number, got '" + v + "'");
  }
  if (used != v.size() || !std::isfinite(d)) throw DomainError("'" + key + "' expects a number, got '" + v + "'");
  return d;
}

u64 parse_count(const std::string& key, const std::string& v) {
  const double d = parse_real(key, v);
  if (d < 0 || d != std::floor(d) || d > 9007199254740992.0)
    throw DomainError("'" + key + "' expects a non-negative integer, got '" + v + "'");
  return static_cast<u64>(d);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v.empty()) return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw DomainError("'" + key + "' expects true or false, got '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

u64 integral_x(const RunConfig& cfg, double fallback) {
  const double x = cfg.x.value_or(fallback);
  if (x < 0 || x != std::floor(x)) throw DomainError("X must be a non-negative integer for '" + cfg.command + "'");
  return static_cast<u64>(x);
}

void write_csv_line(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
  os << '\n';
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Scalar fields of a flat JSON object as a header row plus one data row.
void write_flat_csv(std::ostream& os, const json& j) {
  std::vector<std::string> head, row;
  for (const auto& [k, v] : j.items()) {
    if (v.is_structured()) continue;
    head.push_back(k);
    row.push_back(cell(v));
  }
  write_csv_line(os, head);
  write_csv_line(os, row);
}

void emit_report(std::ostream& os, const RunConfig& cfg, const ComparisonReport& r) {
  if (cfg.format == "csv") {
    write_csv_header(os);
    write_csv_row(os, r);
  } else {
    os << to_json(r).dump(2) << '\n';
  }
}

int run_constants(const RunConfig& cfg, std::ostream& os) {
  const auto& b = constants_bundle(cfg.q, cfg.tol);
  std::optional<CharacterTable> table;
  if (cfg.q >= 3) table.emplace(cfg.q);
  if (cfg.format == "csv") {
    write_csv_line(os, {"quantity", "index", "re", "im"});
    write_csv_line(os, {"gamma_euler", "", format_double(b.gamma_euler), "0"});
    write_csv_line(os, {"theta1", "", format_double(b.theta1), "0"});
    write_csv_line(os, {"c_q", "", format_double(b.c_q), "0"});
    write_csv_line(os, {"gamma_recip", "", format_double(b.gamma_recip), "0"});
    write_csv_line(os, {"l_product", "", format_double(b.l_product.real()), format_double(b.l_product.imag())});
    for (const auto& [idx, l] : b.l_values)
      write_csv_line(os, {"l_one", std::to_string(idx), format_double(l.real()), format_double(l.imag())});
    return kOk;
  }
  json j;
  j["q"] = b.q;
  j["phi_q"] = b.phi_q;
  j["tol"] = b.tol;
  j["gamma_euler"] = b.gamma_euler;
  j["theta1"] = b.theta1;
  j["c_q"] = b.c_q;
  j["gamma_recip"] = b.gamma_recip;
  j["l_product"] = {{"re", b.l_product.real()}, {"im", b.l_product.imag()}};
  json ls = json::array();
  for (const auto& [idx, l] : b.l_values) {
    const auto& chi = table->characters()[idx];
    ls.push_back({{"index", idx}, {"order", chi.order()}, {"exponents", chi.exponents()}, {"re", l.real()}, {"im", l.imag()}});
  }
  j["l_values"] = ls;
  os << j.dump(2) << '\n';
  return kOk;
}

int run_mertens(const RunConfig& cfg, std::ostream& os) {
  const u64 X = integral_x(cfg, 1e7);
  const auto table = cached_sieve(X, cfg.cache_dir);
  const auto& b = constants_bundle(cfg.q, cfg.tol);
  auto r = compare("mertens_ap_product", mertens_ap_product(cfg.q, X, table),
                   mertens_prediction(cfg.q, static_cast<double>(X), b), cfg.band.value_or(0.05),
                   {{"q", static_cast<double>(cfg.q)}, {"X", static_cast<double>(X)}});
  emit_report(os, cfg, r);
  return kOk;
}

int run_count(const RunConfig& cfg, std::ostream& os) {
  const u64 X = integral_x(cfg, 1e6);
  const auto table = cached_sieve(X, cfg.cache_dir);
  const auto& b = constants_bundle(cfg.q, cfg.tol);
  const u64 n = count_restricted(X, cfg.q, cfg.y, table);
  auto r = compare("restricted_count", static_cast<double>(n), lemma33_prediction(static_cast<double>(X), cfg.q, cfg.y, b, table),
                   cfg.band.value_or(0.2), {{"q", static_cast<double>(cfg.q)}, {"X", static_cast<double>(X)}, {"Y", cfg.y}});
  emit_report(os, cfg, r);
  return kOk;
}

int run_shiu(const RunConfig& cfg, std::ostream& os) {
  const auto table = cached_sieve(cfg.h, cfg.cache_dir);
  const auto c = build_construction(cfg.h, cfg.q, cfg.a, cfg.p0, table);
  const auto spf = build_spf(cfg.h);
  const auto sets = compute_S_T(c, spf, {.keep_members = false, .threads = cfg.threads});
  const auto j = shiu_report_json(c, sets);
  if (cfg.format == "csv")
    write_flat_csv(os, j);
  else
    os << j.dump(2) << '\n';
  return kOk;
}

int run_census(const RunConfig& cfg, std::ostream& os) {
  const u64 X = integral_x(cfg, 1e7);
  const auto table = cached_sieve(X, cfg.cache_dir);
  if (cfg.list_pairs) {
    write_csv_line(os, {"p_r", "p_next", "gap", "log_p", "q", "a"});
    for_each_congruent_pair(X, cfg.q, cfg.a, cfg.epsilon, table, [&](const CongruentPair& p) {
      write_csv_line(os, {std::to_string(p.p), std::to_string(p.next), std::to_string(p.gap()),
                          format_double(std::log(static_cast<double>(p.p))), std::to_string(cfg.q),
                          std::to_string(cfg.a % cfg.q)});
    });
    return kOk;
  }
  const auto r = find_congruent_pairs(X, cfg.q, cfg.a, cfg.epsilon, table,
                                      {.max_pairs = 100, .thm11_c = cfg.c, .shiu_C = cfg.shiu_C});
  const auto j = census_report_json(r);
  if (cfg.format == "csv")
    write_flat_csv(os, j);
  else
    os << j.dump(2) << '\n';
  return kOk;
}

int run_contour(const RunConfig& cfg, std::ostream& os) {
  json j;
  if (cfg.mode == "hankel") {
    auto p = HankelParams::defaults(cfg.x.value_or(std::exp(20.0)), cfg.beta);
    if (cfg.kappa) p.kappa = *cfg.kappa;
    if (cfg.T) p.T = *cfg.T;
    if (cfg.eta) p.eta = *cfg.eta;
    p.r = cfg.r.value_or(0.5 * std::min(p.eta, p.kappa - 1.0));
    j = to_json(p, hankel_evaluate(p));
  } else if (cfg.mode == "perron") {
    const double X = cfg.x.value_or(10.5);
    const double T = cfg.T.value_or(1e4);
    const double kappa = cfg.kappa.value_or(1.0 + 1.0 / std::log(X));
    const std::vector<double> coeffs(cfg.terms, 1.0);
    j["mode"] = "perron";
    j["inputs"] = {{"X", X}, {"T", T}, {"kappa", kappa}, {"terms", cfg.terms}};
    const auto res = to_json(perron_check(coeffs, X, T, kappa));
    for (const auto& [k, v] : res.items()) j[k] = v;
  } else {
    j["mode"] = "gamma";
    json refl = json::array();
    for (double theta : {1.0 / 6.0, 1.0 / 4.0, 1.0 / 3.0, 0.5})
      refl.push_back({{"theta", theta}, {"residual", gamma_reflection_check(theta)}});
    j["reflection"] = refl;
    const auto ig = incomplete_gamma_check(cfg.beta, cfg.u_max);
    j["incomplete_gamma"] = {{"beta", cfg.beta},
                             {"u_max", cfg.u_max},
                             {"value", ig.value},
                             {"gamma_target", ig.gamma_target},
                             {"deviation", std::abs(ig.value - ig.gamma_target)},
                             {"envelope", ig.envelope}};
  }
  if (cfg.format == "csv") {
    write_csv_line(os, {"field", "value"});
    const auto flat = j.flatten();
    for (const auto& [k, v] : flat.items()) write_csv_line(os, {k, cell(v)});
  } else {
    os << j.dump(2) << '\n';
  }
  return kOk;
}

int run_suite_command(const RunConfig& cfg, std::ostream& os) {
  const auto scale = cfg.scale == "full" ? SuiteScale::Full : SuiteScale::Small;
  const auto checks = run_suite({.scale = scale, .cache_dir = cfg.cache_dir, .threads = cfg.threads});
  const auto j = suite_report_json(checks, scale, true);
  if (cfg.format == "csv") {
    write_csv_line(os, {"id", "name", "pass", "wall_time_ms"});
    for (const auto& c : checks)
      write_csv_line(os, {std::to_string(c.id), c.name, c.pass ? "true" : "false", format_double(c.seconds * 1000.0)});
  } else {
    os << j.dump(2) << '\n';
  }
  return j["all_pass"].get<bool>() ? kOk : kCheckFailed;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot read config file: " + path.string());
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DomainError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "command") {
    if (!kCommands.count(v)) throw DomainError("unknown command '" + v + "'");
    cfg.command = v;
  } else if (key == "q") cfg.q = parse_count(key, v);
  else if (key == "a") cfg.a = parse_count(key, v);
  else if (key == "x") cfg.x = parse_real(key, v);
  else if (key == "h") cfg.h = parse_count(key, v);
  else if (key == "epsilon") cfg.epsilon = parse_real(key, v);
  else if (key == "y") cfg.y = parse_real(key, v);
  else if (key == "tol") cfg.tol = parse_real(key, v);
  else if (key == "band") cfg.band = parse_real(key, v);
  else if (key == "p0") cfg.p0 = parse_count(key, v);
  else if (key == "c") cfg.c = parse_real(key, v);
  else if (key == "C") cfg.shiu_C = parse_real(key, v);
  else if (key == "format") {
    if (v != "json" && v != "csv") throw DomainError("format must be json or csv");
    cfg.format = v;
  } else if (key == "out") cfg.out = v;
  else if (key == "cache_dir") cfg.cache_dir = v;
  else if (key == "threads") {
    const u64 t = parse_count(key, v);
    if (t < 1 || t > 1024) throw DomainError("threads must lie in [1, 1024]");
    cfg.threads = static_cast<unsigned>(t);
  } else if (key == "scale") {
    if (v != "small" && v != "full") throw DomainError("scale must be small or full");
    cfg.scale = v;
  } else if (key == "mode") {
    if (v != "hankel" && v != "perron" && v != "gamma") throw DomainError("mode must be hankel, perron or gamma");
    cfg.mode = v;
  } else if (key == "beta") cfg.beta = parse_real(key, v);
  else if (key == "eta") cfg.eta = parse_real(key, v);
  else if (key == "r") cfg.r = parse_real(key, v);
  else if (key == "T") cfg.T = parse_real(key, v);
  else if (key == "kappa") cfg.kappa = parse_real(key, v);
  else if (key == "terms") cfg.terms = parse_count(key, v);
  else if (key == "u_max") cfg.u_max = parse_real(key, v);
  else if (key == "list_pairs") cfg.list_pairs = parse_bool(key, v);
  else throw DomainError("unknown config key '" + key + "'");
}

void validate(const RunConfig& cfg) {
  if (!kCommands.count(cfg.command)) throw DomainError("no command given");
  const bool needs_coprime = cfg.command == "shiu" || cfg.command == "census";
  if (needs_coprime) {
    if (cfg.q < 3) throw DomainError("q must be >= 3");
    if (gcd(cfg.a % cfg.q, cfg.q) != 1) throw DomainError("a must be coprime to q");
  }
  if ((cfg.command == "mertens" || cfg.command == "count") && cfg.q < 1) throw DomainError("q must be >= 1");
  if (cfg.command == "count" && cfg.q < 3) throw DomainError("count: q must be >= 3");
  if (cfg.command == "census" && !(cfg.epsilon > 0.0)) throw DomainError("epsilon must be > 0");
  if (cfg.command == "count" && !(cfg.y >= 1.0)) throw DomainError("Y must be >= 1");
  if (cfg.command == "contour" && cfg.mode == "perron" && cfg.terms < 1) throw DomainError("terms must be >= 1");
}

int run(const RunConfig& cfg, std::ostream& fallback) {
  validate(cfg);
  std::ofstream file;
  std::ostream* os = &fallback;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file: " + cfg.out);
    os = &file;
  }
  int code = kOk;
  if (cfg.command == "constants") code = run_constants(cfg, *os);
  else if (cfg.command == "mertens") code = run_mertens(cfg, *os);
  else if (cfg.command == "count") code = run_count(cfg, *os);
  else if (cfg.command == "shiu") code = run_shiu(cfg, *os);
  else if (cfg.command == "census") code = run_census(cfg, *os);
  else if (cfg.command == "contour") code = run_contour(cfg, *os);
  else code = run_suite_command(cfg, *os);
  os->flush();
  if (!*os) throw IoError("failed writing report");
  return code;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"congaps: consecutive congruent primes, Mertens products in progressions, and Shiu's construction"};
  app.set_help_flag("--help", "print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);

  std::map<std::string, std::string> given;
  std::map<std::string, CLI::Option*> options;
  for (const auto& k : kKeys) {
    const std::string name = std::string("--") + k.flag;
    if (k.is_flag)
      options[k.key] = app.add_flag(name, k.help);
    else
      options[k.key] = app.add_option(name, given[k.key], k.help);
  }
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file; flags take precedence");
  for (const auto& name : kCommands) app.add_subcommand(name, "run the " + name + " experiment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) {
      for (const auto& [k, v] : read_config_file(config_path)) {
        const bool overridden = options.count(k) && options[k]->count() > 0;
        if (!overridden) apply_setting(cfg, k, v);
      }
      // A config file naming another command does not override the subcommand.
      cfg.command = app.get_subcommands().front()->get_name();
    }
    for (const auto& k : kKeys) {
      if (options[k.key]->count() == 0) continue;
      apply_setting(cfg, k.key, k.is_flag ? "true" : given[k.key]);
    }
    if (cfg.cache_dir.empty()) {
      if (const char* env = std::getenv("CONGAPS_CACHE_DIR")) cfg.cache_dir = env;
    }
    return run(cfg, out);
  } catch (const IoError& e) {
    err << "congaps: I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "congaps: precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "congaps: I/O error: " << e.what() << '\n';
    return kIoFailure;
  }
}

}  // namespace congaps::cli
