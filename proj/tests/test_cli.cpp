#include "plankcount/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace plankcount;
using namespace plankcount::cli;
using nlohmann::json;

namespace {

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

CommandResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

// Reports are byte-stable except for the measured timing; strip it before
// comparing two runs.
std::string scrub_timing(const std::string& text) {
  json doc = json::parse(text);
  doc.erase("timing_ms");
  return doc.dump(2);
}

}  // namespace

TEST_CASE("parse_args: count in exact mode") {
  const RunSpec spec = parse_args({"count", "--weights", "1,1", "--mode", "exact"});
  CHECK(spec.subcommand == Subcommand::Count);
  CHECK(spec.mode == Mode::Exact);
  REQUIRE(spec.int_weights.size() == 1);
  CHECK(spec.int_weights[0] == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("parse_args: verify with float weights and tolerance") {
  const RunSpec spec = parse_args({"verify", "--weights", "0.6,0.8", "--tol", "1e-9"});
  CHECK(spec.subcommand == Subcommand::Verify);
  CHECK(spec.mode == Mode::Float);
  REQUIRE(spec.float_weights.size() == 1);
  CHECK(spec.float_weights[0] == std::vector<double>{0.6, 0.8});
  CHECK(spec.tol == 1e-9);
}

TEST_CASE("parse_args: family with csv output") {
  const RunSpec spec = parse_args({"family", "--n", "5", "--k", "2", "--format", "csv"});
  CHECK(spec.subcommand == Subcommand::Family);
  CHECK(spec.n == 5);
  CHECK(spec.k_lo == 2);
  CHECK(spec.k_hi == 2);
  CHECK(spec.format == Format::Csv);
}

TEST_CASE("parse_args: usage errors") {
  CHECK_THROWS_AS(parse_args({"count", "--weights", "1,1", "--no-such-flag"}), UsageError);
  CHECK_THROWS_AS(parse_args({"count"}), UsageError);  // missing weight source
  CHECK_THROWS_AS(parse_args({"count", "--weights", "1,x"}), UsageError);
  CHECK_THROWS_AS(parse_args({"count", "--weights", "1.5", "--mode", "exact"}), UsageError);
  CHECK_THROWS_AS(parse_args({"family", "--n", "3", "--k", "4"}), UsageError);
  CHECK_THROWS_AS(parse_args({"sweep"}), UsageError);
  CHECK_THROWS_AS(parse_args({"nonsense"}), UsageError);
}

TEST_CASE("parse_args: PLANKCOUNT_THREADS provides the default for --workers") {
  setenv("PLANKCOUNT_THREADS", "3", 1);
  const RunSpec spec = parse_args({"count", "--weights", "1,1"});
  CHECK(spec.workers == 3);
  unsetenv("PLANKCOUNT_THREADS");
  const RunSpec spec2 = parse_args({"count", "--weights", "1,1", "--workers", "2"});
  CHECK(spec2.workers == 2);
}

TEST_CASE("run_command: exit code 2 on usage error, help exits 0") {
  CHECK(invoke({"count"}).exit_code == kExitUsage);
  CHECK(invoke({"bogus"}).exit_code == kExitUsage);
  const auto help = invoke({"--help"});
  CHECK(help.exit_code == kExitOk);
  CHECK(help.out.find("count") != std::string::npos);
}

TEST_CASE("verify --weights 1,1 --mode exact emits the tight-case report") {
  const auto res = invoke({"verify", "--weights", "1,1", "--mode", "exact"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  CHECK(doc["spec"]["subcommand"] == "verify");
  CHECK(doc["spec"]["mode"] == "exact");
  CHECK(doc["result"]["satisfied"] == 2);
  CHECK(doc["result"]["ratio"] == 0.5);
  CHECK(doc["result"]["pass_tomaszewski"] == true);
  CHECK(doc["result"]["pass_theorem1"] == true);
  CHECK(doc["result"]["pass_lemma1"] == true);
  CHECK(doc["checks"]["antipodal_free"]["pass"] == true);
  CHECK(doc["checks"]["observation2"]["pass"] == true);
  CHECK(doc["checks"]["centroid"]["pass"] == true);
  CHECK(doc["checks"]["identity"]["pass"] == true);
  CHECK(doc.contains("timing_ms"));
}

TEST_CASE("count --weights 1,0,0 is all boundary") {
  const auto res = invoke({"count", "--weights", "1,0,0"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  CHECK(doc["result"]["boundary"] == 8);
  CHECK(doc["result"]["inside"] == 0);
  CHECK(doc["result"]["outside"] == 0);
}

TEST_CASE("halfspace subcommand reports the closed count") {
  const auto res = invoke({"halfspace", "--weights", "1,1,0"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  CHECK(doc["result"]["strict_interior"] == 2);
  CHECK(doc["result"]["closed"] == 2);
}

TEST_CASE("family CSV has the k=2 tight row") {
  const auto res = invoke({"family", "--n", "20", "--k-range", "2:10", "--format", "csv"});
  REQUIRE(res.exit_code == kExitOk);
  std::istringstream lines(res.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "k,satisfied,ratio");
  CHECK(first == "2,524288,0.5");
}

TEST_CASE("CSV and JSON encodings carry identical values") {
  const auto js = invoke({"verify", "--weights", "0.6,0.8"});
  const auto cs = invoke({"verify", "--weights", "0.6,0.8", "--format", "csv"});
  REQUIRE(js.exit_code == kExitOk);
  REQUIRE(cs.exit_code == kExitOk);
  const json doc = json::parse(js.out);

  std::istringstream lines(cs.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::istringstream cells(row);
  std::string cell;
  std::vector<std::string> vals;
  while (std::getline(cells, cell, ',')) vals.push_back(cell);
  REQUIRE(vals.size() == 14);
  CHECK(std::stoi(vals[0]) == doc["result"]["dims"].get<int>());
  CHECK(std::stoull(vals[1]) == doc["result"]["satisfied"].get<std::uint64_t>());
  CHECK(std::stod(vals[3]) == doc["result"]["ratio"].get<double>());
  CHECK(std::stod(vals[4]) == doc["result"]["theorem1_bound"].get<double>());
  CHECK((vals[6] == "true") == doc["result"]["pass_theorem1"].get<bool>());
}

TEST_CASE("reports are byte-stable apart from timing") {
  const std::vector<std::string> args{"sweep", "--n-range", "2:5", "--count", "10",
                                      "--seed", "7", "--checks"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  REQUIRE(first.exit_code == kExitOk);
  CHECK(scrub_timing(first.out) == scrub_timing(second.out));
}

TEST_CASE("sweep reports summary counts and passes") {
  const auto res = invoke({"sweep", "--n", "6", "--count", "25", "--seed", "3", "--checks"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  CHECK(doc["result"]["summary"]["vectors"] == 25);
  CHECK(doc["result"]["summary"]["failures"] == 0);
  CHECK(doc["checks"]["all_pass"] == true);
  CHECK(doc["result"]["rows"].size() == 25);
  CHECK(doc["result"]["rows"][0]["pass_tomaszewski"] == true);
}

TEST_CASE("search subcommand finds the n=2 minimum") {
  const auto res = invoke({"search", "--n", "2", "--restarts", "3", "--steps", "300",
                           "--seed", "11"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  CHECK(doc["result"]["satisfied"] == 2);
  CHECK(doc["result"]["ratio"] == 0.5);
  CHECK(doc["result"]["best"].size() == 2);
}

TEST_CASE("search --mode exact attaches a rational refinement") {
  const auto res = invoke({"search", "--n", "2", "--restarts", "4", "--steps", "400",
                           "--seed", "5", "--mode", "exact"});
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  REQUIRE(doc["result"].contains("exact_refinement"));
  CHECK(doc["result"]["exact_refinement"]["pass_tomaszewski"] == true);
}

TEST_CASE("weights files support comments and multiple vectors") {
  const std::string path = "test_weights_tmp.txt";
  {
    std::ofstream f(path);
    f << "# comment line\n";
    f << "1,0,0\n";
    f << "\n";
    f << "0.6,0.8\n";
  }
  const auto res = invoke({"count", "--weights-file", path});
  std::remove(path.c_str());
  REQUIRE(res.exit_code == kExitOk);
  const json doc = json::parse(res.out);
  REQUIRE(doc["result"].is_array());
  CHECK(doc["result"].size() == 2);
  CHECK(doc["result"][0]["boundary"] == 8);
  CHECK(doc["result"][1]["satisfied"] == 2);
}

TEST_CASE("missing weights file exits 3") {
  const auto res = invoke({"count", "--weights-file", "no_such_file_here.txt"});
  CHECK(res.exit_code == kExitIo);
  CHECK(res.err.find("cannot open") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "test_report_tmp.json";
  const auto res = invoke({"count", "--weights", "1,1", "--out", path});
  REQUIRE(res.exit_code == kExitOk);
  CHECK(res.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json doc;
  f >> doc;
  CHECK(doc["result"]["satisfied"] == 2);
  std::remove(path.c_str());

  const auto bad = invoke({"count", "--weights", "1,1", "--out", "no_dir/x.json"});
  CHECK(bad.exit_code == kExitIo);
}

TEST_CASE("zero weight vector is a usage-class error") {
  const auto res = invoke({"count", "--weights", "0,0"});
  CHECK(res.exit_code == kExitUsage);
}

TEST_CASE("dimension beyond capacity maps to a usage-class error") {
  std::string weights;
  for (int i = 0; i < 40; ++i) weights += (i ? ",1" : "1");
  const auto res = invoke({"count", "--weights", weights, "--mode", "exact"});
  CHECK(res.exit_code == kExitUsage);
}
