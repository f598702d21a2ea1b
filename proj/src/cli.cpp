#include "plankcount/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plankcount/bounds.hpp"
#include "plankcount/engine.hpp"
#include "plankcount/search.hpp"

namespace plankcount::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shortest round-trip decimal representation (<= 17 significant digits).
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) parts.push_back(token);
  return parts;
}

double parse_double_token(const std::string& token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw UsageError("non-numeric weight '" + token + "'");
  }
  return value;
}

std::int64_t parse_int_token(const std::string& token) {
  std::int64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && token.front() == '+') ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw UsageError("exact mode requires integer weights, got '" + token + "'");
  }
  return value;
}

std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw UsageError(flag + " expects lo:hi");
  try {
    const int lo = std::stoi(parts[0]);
    const int hi = std::stoi(parts[1]);
    if (lo < 1 || hi < lo) throw UsageError(flag + " expects 1 <= lo <= hi");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects integer bounds");
  } catch (const std::out_of_range&) {
    throw UsageError(flag + " bounds out of range");
  }
}

void parse_weight_line(const std::string& line, Mode mode, RunSpec& spec) {
  const auto tokens = split(line, ',');
  if (tokens.empty()) throw UsageError("empty weight vector");
  if (mode == Mode::Exact) {
    std::vector<std::int64_t> b;
    b.reserve(tokens.size());
    for (const auto& t : tokens) b.push_back(parse_int_token(t));
    spec.int_weights.push_back(std::move(b));
  } else {
    std::vector<double> w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) w.push_back(parse_double_token(t));
    spec.float_weights.push_back(std::move(w));
  }
}

void load_weights_file(const std::string& path, Mode mode, RunSpec& spec) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open weights file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    // trim whitespace-only and comment lines
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    parse_weight_line(line.substr(first, last - first + 1), mode, spec);
  }
  if (spec.float_weights.empty() && spec.int_weights.empty()) {
    throw UsageError("no weight vectors found in '" + path + "'");
  }
}

struct RawArgs {
  std::string weights;
  std::string weights_file;
  std::string mode = "float";
  std::string format = "json";
  std::string k_range;
  std::string n_range;
  RunSpec spec;
};

void add_common_output(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--format", raw.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", raw.spec.out_path, "Write the report to this file");
}

void add_weight_source(CLI::App* cmd, RawArgs& raw) {
  auto* inline_opt = cmd->add_option("--weights", raw.weights, "Comma-separated weights");
  auto* file_opt = cmd->add_option("--weights-file", raw.weights_file,
                                   "File with one comma-separated vector per line");
  inline_opt->excludes(file_opt);
  file_opt->excludes(inline_opt);
  cmd->add_option("--mode", raw.mode, "Arithmetic mode")->check(CLI::IsMember({"float", "exact"}));
  cmd->add_option("--tol", raw.spec.tol, "Classification band half-width (float mode)");
}

void add_engine_knobs(CLI::App* cmd, RawArgs& raw) {
  cmd->add_option("--workers", raw.spec.workers, "Worker threads")
      ->envname("PLANKCOUNT_THREADS");
  cmd->add_option("--chunk-bits", raw.spec.chunk_bits, "High bits fixed per parallel chunk");
}

Subcommand resolve_subcommand(const CLI::App& app) {
  if (app.got_subcommand("count")) return Subcommand::Count;
  if (app.got_subcommand("halfspace")) return Subcommand::Halfspace;
  if (app.got_subcommand("verify")) return Subcommand::Verify;
  if (app.got_subcommand("search")) return Subcommand::Search;
  if (app.got_subcommand("sweep")) return Subcommand::Sweep;
  return Subcommand::Family;
}

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Count: return "count";
    case Subcommand::Halfspace: return "halfspace";
    case Subcommand::Verify: return "verify";
    case Subcommand::Search: return "search";
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Family: return "family";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Report building
// ---------------------------------------------------------------------------

struct CsvWriter {
  std::ostringstream text;
  void header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) text << (i ? "," : "") << cols[i];
    text << '\n';
  }
  void row(const std::vector<std::string>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) text << (i ? "," : "") << vals[i];
    text << '\n';
  }
};

std::string bool_str(bool v) { return v ? "true" : "false"; }

ordered_json spec_block(const RunSpec& spec) {
  ordered_json j;
  j["subcommand"] = subcommand_name(spec.subcommand);
  j["mode"] = spec.mode == Mode::Exact ? "exact" : "float";
  switch (spec.subcommand) {
    case Subcommand::Count:
    case Subcommand::Halfspace:
    case Subcommand::Verify:
      if (spec.mode == Mode::Exact) {
        j["weights"] = spec.int_weights;
      } else {
        j["weights"] = spec.float_weights;
      }
      j["tol"] = spec.tol;
      j["workers"] = spec.workers;
      j["chunk_bits"] = spec.chunk_bits;
      break;
    case Subcommand::Search:
      j["n"] = spec.n;
      j["seed"] = spec.seed;
      j["restarts"] = spec.restarts;
      j["steps"] = spec.steps;
      j["lambda"] = spec.lambda;
      j["workers"] = spec.workers;
      break;
    case Subcommand::Sweep:
      j["n_lo"] = spec.n_lo;
      j["n_hi"] = spec.n_hi;
      j["count"] = spec.count;
      j["seed"] = spec.seed;
      j["tol"] = spec.tol;
      j["checks"] = spec.checks;
      break;
    case Subcommand::Family:
      j["n"] = spec.n;
      j["k_lo"] = spec.k_lo;
      j["k_hi"] = spec.k_hi;
      break;
  }
  return j;
}

ordered_json plank_json(const PlankCount& c) {
  ordered_json j;
  j["dims"] = c.dims;
  j["tol"] = c.tol;
  j["inside"] = c.inside;
  j["boundary"] = c.boundary;
  j["outside"] = c.outside;
  j["satisfied"] = c.satisfied();
  j["ratio"] = c.ratio();
  return j;
}

ordered_json halfspace_json(const HalfSpaceCount& h) {
  ordered_json j;
  j["dims"] = h.dims;
  j["tol"] = h.tol;
  j["strict_interior"] = h.strict_interior;
  j["boundary"] = h.boundary;
  j["closed"] = h.closed();
  return j;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["dims"] = r.dims;
  j["satisfied"] = r.satisfied;
  j["strict_interior"] = r.strict_interior;
  j["ratio"] = r.ratio;
  j["theorem1_bound"] = r.theorem1_bound;
  j["lemma1_bound"] = r.lemma1_bound;
  j["pass_theorem1"] = r.pass_theorem1;
  j["pass_lemma1"] = r.pass_lemma1;
  j["pass_tomaszewski"] = r.pass_tomaszewski;
  j["all_pass"] = r.all_pass();
  return j;
}

struct VerifyChecks {
  bounds::AntipodalCheck antipodal;
  bounds::Observation2Check observation2;
  CentroidWitness centroid;
  bool identity_pass = false;
};

ordered_json checks_json(const VerifyChecks& c) {
  ordered_json j;
  j["antipodal_free"] = ordered_json{{"pass", c.antipodal.pass}};
  j["observation2"] = ordered_json{{"pass", c.observation2.pass},
                                   {"pair_found", c.observation2.pair_found},
                                   {"axis_coord", c.observation2.axis_coord},
                                   {"strict_interior", c.observation2.strict_interior}};
  j["centroid"] = ordered_json{{"pass", c.centroid.holds()},
                               {"k", c.centroid.k},
                               {"w_norm", c.centroid.w_norm},
                               {"dot", c.centroid.dot},
                               {"w", c.centroid.w}};
  j["identity"] = ordered_json{{"pass", c.identity_pass}};
  return j;
}

bool checks_all_pass(const VerifyChecks& c) {
  return c.antipodal.pass && c.observation2.pass && c.centroid.holds() && c.identity_pass;
}

// Recursively scan for false verdict fields ("pass", "pass_*", "*_pass").
bool any_failed_flag(const ordered_json& j) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_boolean() &&
          (key == "pass" || key.starts_with("pass_") || key.ends_with("_pass"))) {
        if (!value.get<bool>()) return true;
      } else if (any_failed_flag(value)) {
        return true;
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (any_failed_flag(item)) return true;
    }
  }
  return false;
}

engine::EnumConfig enum_config(const RunSpec& spec) {
  engine::EnumConfig cfg;
  cfg.tol = spec.tol;
  cfg.chunk_bits = spec.chunk_bits;
  return cfg;
}

// ---------------------------------------------------------------------------
// Subcommand bodies: fill result/checks JSON and CSV side by side
// ---------------------------------------------------------------------------

void run_count(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  const engine::EnumConfig cfg = enum_config(spec);
  ordered_json rows = ordered_json::array();
  csv.header({"dims", "tol", "inside", "boundary", "outside", "satisfied", "ratio"});
  auto emit = [&](const PlankCount& c) {
    rows.push_back(plank_json(c));
    csv.row({std::to_string(c.dims), format_double(c.tol), std::to_string(c.inside),
             std::to_string(c.boundary), std::to_string(c.outside),
             std::to_string(c.satisfied()), format_double(c.ratio())});
  };
  if (spec.mode == Mode::Exact) {
    for (const auto& raw : spec.int_weights) {
      const IntWeightVector b(raw);
      emit(spec.workers > 1 ? engine::count_parallel(b, cfg, spec.workers)
                            : engine::count_plank_exact(b));
    }
  } else {
    for (const auto& raw : spec.float_weights) {
      const WeightVector u = normalize(raw);
      emit(spec.workers > 1 ? engine::count_parallel(u, cfg, spec.workers)
                            : engine::count_plank_gray(u, cfg));
    }
  }
  doc["result"] = rows.size() == 1 ? rows.front() : rows;
  doc["checks"] = ordered_json::object();
}

void run_halfspace(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  const engine::EnumConfig cfg = enum_config(spec);
  ordered_json rows = ordered_json::array();
  csv.header({"dims", "tol", "strict_interior", "boundary", "closed"});
  auto emit = [&](const HalfSpaceCount& h) {
    rows.push_back(halfspace_json(h));
    csv.row({std::to_string(h.dims), format_double(h.tol), std::to_string(h.strict_interior),
             std::to_string(h.boundary), std::to_string(h.closed())});
  };
  if (spec.mode == Mode::Exact) {
    for (const auto& raw : spec.int_weights) emit(engine::count_halfspace(IntWeightVector(raw)));
  } else {
    for (const auto& raw : spec.float_weights) {
      emit(engine::count_halfspace(normalize(raw), cfg));
    }
  }
  doc["result"] = rows.size() == 1 ? rows.front() : rows;
  doc["checks"] = ordered_json::object();
}

void verify_csv_row(CsvWriter& csv, const BoundReport& r, const VerifyChecks& c) {
  csv.row({std::to_string(r.dims), std::to_string(r.satisfied),
           std::to_string(r.strict_interior), format_double(r.ratio),
           format_double(r.theorem1_bound), format_double(r.lemma1_bound),
           bool_str(r.pass_theorem1), bool_str(r.pass_lemma1), bool_str(r.pass_tomaszewski),
           bool_str(c.antipodal.pass), bool_str(c.observation2.pass),
           bool_str(c.centroid.holds()), bool_str(c.identity_pass),
           bool_str(r.all_pass() && checks_all_pass(c))});
}

void run_verify(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  const engine::EnumConfig cfg = enum_config(spec);
  ordered_json reports = ordered_json::array();
  ordered_json checks = ordered_json::array();
  csv.header({"dims", "satisfied", "strict_interior", "ratio", "theorem1_bound", "lemma1_bound",
              "pass_theorem1", "pass_lemma1", "pass_tomaszewski", "antipodal_pass",
              "observation2_pass", "centroid_pass", "identity_pass", "all_pass"});

  auto emit = [&](const BoundReport& r, VerifyChecks c) {
    c.identity_pass = r.satisfied == (1ull << r.dims) - 2 * r.strict_interior;
    reports.push_back(report_json(r));
    checks.push_back(checks_json(c));
    verify_csv_row(csv, r, c);
  };

  if (spec.mode == Mode::Exact) {
    for (const auto& raw : spec.int_weights) {
      const IntWeightVector b(raw);
      emit(bounds::bound_report(b),
           VerifyChecks{bounds::antipodal_free_check(b), bounds::observation2_check(b),
                        bounds::centroid_witness(b)});
    }
  } else {
    for (const auto& raw : spec.float_weights) {
      const WeightVector u = normalize(raw);
      emit(bounds::bound_report(u, cfg),
           VerifyChecks{bounds::antipodal_free_check(u, cfg), bounds::observation2_check(u, cfg),
                        bounds::centroid_witness(u, cfg)});
    }
  }
  doc["result"] = reports.size() == 1 ? reports.front() : reports;
  doc["checks"] = checks.size() == 1 ? checks.front() : checks;
}

void run_search(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  search::SearchConfig cfg;
  cfg.restarts = spec.restarts;
  cfg.steps_per_restart = spec.steps;
  cfg.slack_weight = spec.lambda;
  cfg.rng_seed = spec.seed;
  cfg.dims = spec.n;
  const SearchResult res = search::search_minimum(spec.n, cfg, spec.workers);

  ordered_json result;
  result["dims"] = spec.n;
  result["satisfied"] = res.satisfied;
  result["ratio"] = res.ratio;
  result["restarts_used"] = res.restarts_used;
  result["rng_seed"] = res.rng_seed;
  result["evaluations"] = res.evaluations;
  result["best"] = res.best.weights();

  std::string best_joined;
  for (std::size_t i = 0; i < res.best.weights().size(); ++i) {
    best_joined += (i ? ";" : "") + format_double(res.best[i]);
  }

  if (spec.mode == Mode::Exact) {
    // Round the candidate to a small-denominator rational direction and
    // re-verify it in exact arithmetic.
    const IntWeightVector b = search::round_rational(res.best, 1000);
    const BoundReport exact = bounds::bound_report(b);
    ordered_json refined;
    refined["weights"] = b.weights();
    refined["satisfied"] = exact.satisfied;
    refined["ratio"] = exact.ratio;
    refined["pass_theorem1"] = exact.pass_theorem1;
    refined["pass_lemma1"] = exact.pass_lemma1;
    refined["pass_tomaszewski"] = exact.pass_tomaszewski;
    result["exact_refinement"] = refined;
  }

  csv.header({"dims", "satisfied", "ratio", "restarts_used", "rng_seed", "evaluations", "best"});
  csv.row({std::to_string(spec.n), std::to_string(res.satisfied), format_double(res.ratio),
           std::to_string(res.restarts_used), std::to_string(res.rng_seed),
           std::to_string(res.evaluations), best_joined});

  doc["result"] = result;
  doc["checks"] = ordered_json::object();
}

void run_sweep(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  const engine::EnumConfig cfg = enum_config(spec);
  ordered_json rows = ordered_json::array();

  std::vector<std::string> cols{"n", "index", "satisfied", "strict_interior", "ratio",
                                "theorem1_bound", "lemma1_bound", "pass_theorem1",
                                "pass_lemma1", "pass_tomaszewski"};
  if (spec.checks) {
    cols.insert(cols.end(),
                {"antipodal_pass", "observation2_pass", "centroid_pass", "identity_pass"});
  }
  csv.header(cols);

  std::uint64_t vectors = 0;
  std::uint64_t failures = 0;
  double min_ratio = 1.0;

  for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
    // One deterministic stream per dimension, derived from the seed.
    search::Rng rng(spec.seed ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull));
    for (int index = 0; index < spec.count; ++index) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      const BoundReport r = bounds::bound_report(u, cfg);
      ++vectors;
      min_ratio = std::min(min_ratio, r.ratio);
      bool row_ok = r.all_pass();

      ordered_json row;
      row["n"] = n;
      row["index"] = index;
      row["satisfied"] = r.satisfied;
      row["strict_interior"] = r.strict_interior;
      row["ratio"] = r.ratio;
      row["theorem1_bound"] = r.theorem1_bound;
      row["lemma1_bound"] = r.lemma1_bound;
      row["pass_theorem1"] = r.pass_theorem1;
      row["pass_lemma1"] = r.pass_lemma1;
      row["pass_tomaszewski"] = r.pass_tomaszewski;

      std::vector<std::string> vals{std::to_string(n), std::to_string(index),
                                    std::to_string(r.satisfied),
                                    std::to_string(r.strict_interior), format_double(r.ratio),
                                    format_double(r.theorem1_bound),
                                    format_double(r.lemma1_bound), bool_str(r.pass_theorem1),
                                    bool_str(r.pass_lemma1), bool_str(r.pass_tomaszewski)};

      if (spec.checks) {
        const auto antip = bounds::antipodal_free_check(u, cfg);
        const auto obs2 = bounds::observation2_check(u, cfg);
        const auto cent = bounds::centroid_witness(u, cfg);
        const bool identity = r.satisfied == (1ull << n) - 2 * r.strict_interior;
        row["antipodal_pass"] = antip.pass;
        row["observation2_pass"] = obs2.pass;
        row["centroid_pass"] = cent.holds();
        row["identity_pass"] = identity;
        row_ok = row_ok && antip.pass && obs2.pass && cent.holds() && identity;
        vals.insert(vals.end(), {bool_str(antip.pass), bool_str(obs2.pass),
                                 bool_str(cent.holds()), bool_str(identity)});
      }

      if (!row_ok) ++failures;
      rows.push_back(std::move(row));
      csv.row(vals);
    }
  }

  ordered_json summary;
  summary["vectors"] = vectors;
  summary["failures"] = failures;
  summary["min_ratio"] = min_ratio;

  doc["result"] = ordered_json{{"rows", rows}, {"summary", summary}};
  doc["checks"] = ordered_json{{"all_pass", failures == 0}};
}

void run_family(const RunSpec& spec, ordered_json& doc, CsvWriter& csv) {
  ordered_json rows = ordered_json::array();
  csv.header({"k", "satisfied", "ratio"});
  for (int k = spec.k_lo; k <= spec.k_hi; ++k) {
    const std::uint64_t satisfied = search::family_count(spec.n, k);
    const double ratio = static_cast<double>(satisfied) / std::ldexp(1.0, spec.n);
    ordered_json row;
    row["k"] = k;
    row["satisfied"] = satisfied;
    row["ratio"] = ratio;
    rows.push_back(std::move(row));
    csv.row({std::to_string(k), std::to_string(satisfied), format_double(ratio)});
  }
  doc["result"] = rows;
  doc["checks"] = ordered_json::object();
}

}  // namespace

RunSpec parse_args(const std::vector<std::string>& args) {
  RawArgs raw;
  CLI::App app{"Count cube vertices inside planks and tangent half-spaces of the unit ball"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Classify all 2^n vertices against the plank");
  add_weight_source(count, raw);
  add_engine_knobs(count, raw);
  add_common_output(count, raw);

  auto* halfspace =
      app.add_subcommand("halfspace", "Classify vertices against the tangent half-space");
  add_weight_source(halfspace, raw);
  add_common_output(halfspace, raw);

  auto* verify = app.add_subcommand(
      "verify", "Evaluate the plank/half-space bounds and the structural checkers");
  add_weight_source(verify, raw);
  add_engine_knobs(verify, raw);
  add_common_output(verify, raw);

  auto* search_cmd =
      app.add_subcommand("search", "Anneal for weight vectors minimizing the plank count");
  search_cmd->add_option("--n", raw.spec.n, "Dimension")->required();
  search_cmd->add_option("--seed", raw.spec.seed, "RNG seed");
  search_cmd->add_option("--restarts", raw.spec.restarts, "Independent annealing restarts");
  search_cmd->add_option("--steps", raw.spec.steps, "Annealing steps per restart");
  search_cmd->add_option("--lambda", raw.spec.lambda, "Slack weight in [0,1)");
  search_cmd->add_option("--mode", raw.mode,
                         "exact additionally re-verifies a rounded candidate exactly")
      ->check(CLI::IsMember({"float", "exact"}));
  add_engine_knobs(search_cmd, raw);
  add_common_output(search_cmd, raw);

  auto* sweep = app.add_subcommand(
      "sweep", "Verify the bounds over random unit vectors for a dimension range");
  sweep->add_option("--n", raw.spec.n, "Single dimension");
  sweep->add_option("--n-range", raw.n_range, "Dimension range lo:hi");
  sweep->add_option("--count", raw.spec.count, "Random vectors per dimension");
  sweep->add_option("--seed", raw.spec.seed, "RNG seed");
  sweep->add_option("--tol", raw.spec.tol, "Classification band half-width");
  sweep->add_flag("--checks", raw.spec.checks, "Run the structural checkers on every vector");
  add_engine_knobs(sweep, raw);
  add_common_output(sweep, raw);

  auto* family =
      app.add_subcommand("family", "Exact counts for k equal weights 1/sqrt(k) in dimension n");
  family->add_option("--n", raw.spec.n, "Dimension")->required();
  family->add_option("--k", raw.spec.k, "Number of equal weights");
  family->add_option("--k-range", raw.k_range, "Range of k values lo:hi");
  add_common_output(family, raw);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequest(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequest(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  RunSpec spec = std::move(raw.spec);
  spec.subcommand = resolve_subcommand(app);
  spec.mode = raw.mode == "exact" ? Mode::Exact : Mode::Float;
  spec.format = raw.format == "csv" ? Format::Csv : Format::Json;

  switch (spec.subcommand) {
    case Subcommand::Count:
    case Subcommand::Halfspace:
    case Subcommand::Verify:
      if (!raw.weights.empty()) {
        parse_weight_line(raw.weights, spec.mode, spec);
      } else if (!raw.weights_file.empty()) {
        load_weights_file(raw.weights_file, spec.mode, spec);
      } else {
        throw UsageError("one of --weights or --weights-file is required");
      }
      break;
    case Subcommand::Search:
      if (spec.n < 1) throw UsageError("--n must be >= 1");
      break;
    case Subcommand::Sweep:
      if (!raw.n_range.empty()) {
        std::tie(spec.n_lo, spec.n_hi) = parse_range(raw.n_range, "--n-range");
      } else if (spec.n >= 1) {
        spec.n_lo = spec.n_hi = spec.n;
      } else {
        throw UsageError("sweep requires --n or --n-range");
      }
      if (spec.count < 1) throw UsageError("--count must be >= 1");
      if (spec.mode == Mode::Exact) throw UsageError("sweep runs in float mode only");
      break;
    case Subcommand::Family:
      if (!raw.k_range.empty()) {
        std::tie(spec.k_lo, spec.k_hi) = parse_range(raw.k_range, "--k-range");
      } else if (spec.k >= 1) {
        spec.k_lo = spec.k_hi = spec.k;
      } else {
        throw UsageError("family requires --k or --k-range");
      }
      if (spec.k_hi > spec.n) throw UsageError("k must not exceed n");
      break;
  }
  return spec;
}

int run(const RunSpec& spec, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();

  ordered_json doc;
  doc["spec"] = spec_block(spec);
  CsvWriter csv;

  switch (spec.subcommand) {
    case Subcommand::Count: run_count(spec, doc, csv); break;
    case Subcommand::Halfspace: run_halfspace(spec, doc, csv); break;
    case Subcommand::Verify: run_verify(spec, doc, csv); break;
    case Subcommand::Search: run_search(spec, doc, csv); break;
    case Subcommand::Sweep: run_sweep(spec, doc, csv); break;
    case Subcommand::Family: run_family(spec, doc, csv); break;
  }

  const auto elapsed = std::chrono::steady_clock::now() - start;
  doc["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  std::string text;
  if (spec.format == Format::Csv) {
    text = csv.text.str();
  } else {
    text = doc.dump(2);
    text += '\n';
  }

  if (!spec.out_path.empty()) {
    std::ofstream file(spec.out_path);
    if (!file) throw IoError("cannot open output file '" + spec.out_path + "'");
    file << text;
    if (!file) throw IoError("failed writing output file '" + spec.out_path + "'");
  } else {
    out << text;
  }

  return any_failed_flag(doc) ? kExitVerifyFailed : kExitOk;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunSpec spec = parse_args(args);
    return run(spec, out);
  } catch (const HelpRequest& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ExactOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace plankcount::cli
