#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "congaps/cli.hpp"

namespace fs = std::filesystem;
using congaps::cli::ExitCode;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("congaps_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "congaps");
  args.push_back("--cache-dir");
  args.push_back(scratch().string());
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = congaps::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("census end to end") {
  const auto r = invoke({"census", "--q", "3", "--a", "2", "--x", "100000", "--epsilon", "2"});
  REQUIRE(r.code == ExitCode::kOk);
  const auto j = parse(r.out);
  CHECK(j["X"] == 100000);
  CHECK(j["pair_count"].get<int>() > 0);
  CHECK(j.contains("wall_time_ms"));
}

TEST_CASE("constants end to end") {
  const auto r = invoke({"constants", "--q", "4", "--tol", "1e-8"});
  REQUIRE(r.code == ExitCode::kOk);
  const auto j = parse(r.out);
  CHECK(std::abs(j["l_values"][0]["re"].get<double>() - std::numbers::pi / 4) < 1e-8);
}

TEST_CASE("shiu routing") {
  CHECK(invoke({"shiu", "--h", "1000", "--q", "3", "--a", "1"}).code == ExitCode::kOk);
  CHECK(invoke({"shiu", "--h", "1000", "--q", "3", "--a", "2"}).code == ExitCode::kOk);
  CHECK(invoke({"shiu", "--h", "50", "--q", "3", "--a", "1"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"shiu", "--h", "1000", "--q", "6", "--a", "3"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"shiu", "--h", "100000", "--q", "3", "--a", "1", "--p0", "7"}).code == ExitCode::kPrecondition);
}

TEST_CASE("precondition and I/O exit codes") {
  CHECK(invoke({}).code == ExitCode::kPrecondition);
  CHECK(invoke({"nonsense"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"census", "--x", "100.5"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"census", "--q", "abc"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"census", "--format", "xml"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"census", "--epsilon", "0", "--x", "1000"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"contour", "--mode", "perron", "--x", "10"}).code == ExitCode::kPrecondition);
  CHECK(invoke({"census", "--x", "1000", "--out", (scratch() / "missing" / "r.json").string()}).code ==
        ExitCode::kIoFailure);
  CHECK(invoke({"census", "--config", (scratch() / "absent.cfg").string()}).code == ExitCode::kIoFailure);
}

TEST_CASE("config files") {
  const auto cfg = scratch() / "run.cfg";
  {
    std::ofstream f(cfg);
    f << "# census settings\nq = 5\na=2\nx=20000\nepsilon=1.5\n";
  }
  const auto from_file = invoke({"census", "--config", cfg.string()});
  REQUIRE(from_file.code == ExitCode::kOk);
  CHECK(parse(from_file.out)["q"] == 5);
  CHECK(parse(from_file.out)["epsilon"] == 1.5);

  const auto flag_wins = invoke({"census", "--config", cfg.string(), "--q", "3"});
  REQUIRE(flag_wins.code == ExitCode::kOk);
  CHECK(parse(flag_wins.out)["q"] == 3);
  CHECK(parse(flag_wins.out)["a"] == 2);

  {
    std::ofstream f(cfg);
    f << "q=5\nfoo=1\n";
  }
  CHECK(invoke({"census", "--config", cfg.string()}).code == ExitCode::kPrecondition);
}

TEST_CASE("csv output") {
  const auto r = invoke({"census", "--q", "4", "--a", "3", "--x", "5000", "--list-pairs"});
  REQUIRE(r.code == ExitCode::kOk);
  CHECK(r.out.rfind("p_r,p_next,gap,log_p,q,a\n", 0) == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  const auto c = invoke({"mertens", "--q", "3", "--x", "10000", "--format", "csv"});
  REQUIRE(c.code == ExitCode::kOk);
  CHECK(c.out.rfind("label,actual,predicted,ratio,params,pass\n", 0) == 0);
}

TEST_CASE("report files are deterministic apart from timing") {
  std::vector<std::string> args = {"census", "--q", "3", "--a", "1", "--x", "50000", "--out", ""};
  auto once = [&](const char* name) {
    args.back() = (scratch() / name).string();
    REQUIRE(invoke(args).code == ExitCode::kOk);
    std::ifstream f(args.back());
    auto j = nlohmann::json::parse(f);
    j.erase("wall_time_ms");
    return j.dump();
  };
  CHECK(once("a.json") == once("b.json"));
  for (const auto& mode : {"hankel", "gamma"}) {
    const auto a = invoke({"contour", "--mode", mode});
    const auto b = invoke({"contour", "--mode", mode});
    CHECK(a.out == b.out);
  }
}
