// Acceptance suite: runs every acceptance criterion at full scale and prints
// one pass/fail line per criterion.  Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plankcount/bounds.hpp"
#include "plankcount/cli.hpp"
#include "plankcount/core.hpp"
#include "plankcount/engine.hpp"
#include "plankcount/search.hpp"

using namespace plankcount;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSweepSeed = 0x5eed0001ull;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

search::Rng rng_for(std::uint64_t base, int n) {
  return search::Rng(base ^ (static_cast<std::uint64_t>(n) * 0x9E3779B97F4A7C15ull));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// #1 -- gray, naive, and parallel (chunk_bits in {0,2,4,8}) agree field by
// field on 200 random unit vectors for every n in 1..16, in under 2 minutes.
Outcome criterion1() {
  const auto start = Clock::now();
  for (int n = 1; n <= 16; ++n) {
    auto rng = rng_for(kSweepSeed, n);
    for (int trial = 0; trial < 200; ++trial) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      const PlankCount naive = engine::count_plank_naive(u);
      const PlankCount gray = engine::count_plank_gray(u);
      if (!(gray == naive)) {
        return {false, "gray != naive at n=" + std::to_string(n)};
      }
      for (int cb : {0, 2, 4, 8}) {
        engine::EnumConfig cfg;
        cfg.chunk_bits = cb;
        const PlankCount par = engine::count_parallel(u, cfg, 4);
        if (!(par == naive)) {
          return {false, "parallel(chunk_bits=" + std::to_string(cb) +
                             ") != naive at n=" + std::to_string(n)};
        }
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 120.0) return {false, "took " + std::to_string(secs) + " s (limit 120)"};
  return {true, "3200 vectors x 6 engines"};
}

// #2 -- satisfied/2^n >= 1/2 for 1000 random unit vectors at each n in 2..24,
// with the tolerance band counted as satisfied; zero failures, under 10 min.
Outcome criterion2() {
  const auto start = Clock::now();
  for (int n = 2; n <= 24; ++n) {
    auto rng = rng_for(kSweepSeed, n);
    for (int trial = 0; trial < 1000; ++trial) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      const std::uint64_t satisfied = engine::count_plank_gray(u).satisfied();
      if (satisfied < (1ull << (n - 1))) {
        std::ostringstream os;
        os << "ratio below 1/2 at n=" << n << " trial=" << trial
           << " satisfied=" << satisfied;
        return {false, os.str()};
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 600.0) return {false, "took " + std::to_string(secs) + " s (limit 600)"};
  return {true, "23000 vectors, zero failures"};
}

// #3 -- same sweep, satisfied >= 2^(n-1)/sqrt(n) through the bound code path.
Outcome criterion3() {
  for (int n = 2; n <= 24; ++n) {
    auto rng = rng_for(kSweepSeed, n);
    for (int trial = 0; trial < 1000; ++trial) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      const BoundReport r = bounds::verify_theorem1(u);
      if (!r.pass_theorem1) {
        std::ostringstream os;
        os << "theorem1 bound violated at n=" << n << " trial=" << trial
           << " satisfied=" << r.satisfied << " bound=" << r.theorem1_bound;
        return {false, os.str()};
      }
    }
  }
  return {true, "23000 vectors, zero failures"};
}

// #4 -- strict_interior < (2 - 1/sqrt(n)) 2^(n-2) for 1000 random tangent
// half-spaces at each n in 2..20; zero failures.
Outcome criterion4() {
  for (int n = 2; n <= 20; ++n) {
    auto rng = rng_for(kSweepSeed + 4, n);
    for (int trial = 0; trial < 1000; ++trial) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      const std::uint64_t strict = engine::count_halfspace(u).strict_interior;
      if (!(static_cast<double>(strict) < bounds::lemma1_bound(n))) {
        std::ostringstream os;
        os << "lemma1 bound violated at n=" << n << " trial=" << trial
           << " strict_interior=" << strict;
        return {false, os.str()};
      }
    }
  }
  return {true, "19000 half-spaces, zero failures"};
}

// #5 -- structural invariants on 500 random unit vectors at each n in 2..12:
// antipodal_free_check, observation2_check, centroid inequalities, and the
// identity satisfied = 2^n - 2*strict_interior, all exact.
Outcome criterion5() {
  for (int n = 2; n <= 12; ++n) {
    auto rng = rng_for(kSweepSeed + 5, n);
    for (int trial = 0; trial < 500; ++trial) {
      const WeightVector u = search::sample_unit_vector(n, rng);
      std::ostringstream where;
      where << "n=" << n << " trial=" << trial;
      if (!bounds::antipodal_free_check(u).pass) {
        return {false, "antipodal pair found at " + where.str()};
      }
      if (!bounds::observation2_check(u).pass) {
        return {false, "observation2 failed at " + where.str()};
      }
      if (!bounds::centroid_witness(u).holds()) {
        return {false, "centroid inequality failed at " + where.str()};
      }
      const BoundReport r = bounds::bound_report(u);
      if (r.satisfied != (1ull << n) - 2 * r.strict_interior) {
        return {false, "plank/half-space identity failed at " + where.str()};
      }
    }
  }
  return {true, "5500 vectors x 4 invariants"};
}

// #6 -- exact mode on b=(1,1) zero-padded into n in 2..16 yields satisfied
// exactly 2^(n-1) and ratio exactly 1/2.
Outcome criterion6() {
  for (int n = 2; n <= 16; ++n) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n), 0);
    b[0] = 1;
    b[1] = 1;
    const PlankCount c = engine::count_plank_exact(IntWeightVector(b));
    if (c.satisfied() != (1ull << (n - 1)) || c.ratio() != 0.5) {
      std::ostringstream os;
      os << "tight case broken at n=" << n << " satisfied=" << c.satisfied();
      return {false, os.str()};
    }
  }
  return {true, "satisfied = 2^(n-1), ratio = 1/2 for n in 2..16"};
}

// #7 -- search recovery: for each n in 2..10, 50 restarts x 5000 steps with
// seed 42 return satisfied = 2^(n-1) and a 2-sparse unit vector (two
// coordinates >= 0.70 in magnitude, the rest <= 0.05), under 2 min per n.
Outcome criterion7() {
  for (int n = 2; n <= 10; ++n) {
    const auto start = Clock::now();
    search::SearchConfig cfg;
    cfg.restarts = 50;
    cfg.steps_per_restart = 5000;
    cfg.rng_seed = 42;
    cfg.dims = n;
    const SearchResult res = search::search_minimum(n, cfg);
    const double secs = seconds_since(start);
    std::ostringstream where;
    where << "n=" << n << " (" << secs << " s)";
    if (res.satisfied != (1ull << (n - 1))) {
      return {false, "satisfied=" + std::to_string(res.satisfied) + " at " + where.str()};
    }
    int big = 0, small = 0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::fabs(res.best[i]);
      if (mag >= 0.70) ++big;
      if (mag <= 0.05) ++small;
    }
    if (big != 2 || small != n - 2) {
      std::ostringstream os;
      os << "best vector not 2-sparse at " << where.str() << ": [";
      for (int i = 0; i < n; ++i) os << (i ? ", " : "") << res.best[i];
      os << "]";
      return {false, os.str()};
    }
    if (secs >= 120.0) {
      return {false, "search exceeded 2 min at " + where.str()};
    }
  }
  return {true, "minima and 2-sparse shapes recovered for n in 2..10"};
}

// #8 -- family_count(k, k) equals the enumeration engine's satisfied count on
// (1/sqrt(k),...,1/sqrt(k)) for k in 2..20; minimum ratio exactly 1/2 at k=2.
Outcome criterion8() {
  double min_ratio = 2.0;
  int argmin = 0;
  for (int k = 2; k <= 20; ++k) {
    const std::uint64_t predicted = search::family_count(k, k);
    std::vector<double> w(static_cast<std::size_t>(k), 1.0);
    const std::uint64_t counted = engine::count_plank_gray(normalize(w)).satisfied();
    if (predicted != counted) {
      std::ostringstream os;
      os << "family mismatch at k=" << k << ": formula " << predicted << " vs engine "
         << counted;
      return {false, os.str()};
    }
    const double ratio = static_cast<double>(predicted) / std::ldexp(1.0, k);
    if (ratio < min_ratio) {
      min_ratio = ratio;
      argmin = k;
    }
  }
  if (min_ratio != 0.5 || argmin != 2) {
    std::ostringstream os;
    os << "minimum ratio " << min_ratio << " at k=" << argmin << " (expected 1/2 at k=2)";
    return {false, os.str()};
  }
  return {true, "binomial formula matches enumeration for k in 2..20; min ratio 1/2 at k=2"};
}

// #9 -- performance: single-threaded Gray count at n=28 under 30 s, and
// count_parallel at n=30 with 8 workers at least 3x faster than the serial
// count at n=30 with bit-identical counts.
Outcome criterion9() {
  auto rng = rng_for(kSweepSeed + 9, 28);
  const WeightVector u28 = search::sample_unit_vector(28, rng);
  const auto t0 = Clock::now();
  const PlankCount c28 = engine::count_plank_gray(u28);
  const double serial28 = seconds_since(t0);
  if (c28.total() != (1ull << 28)) return {false, "n=28 count incomplete"};
  if (serial28 >= 30.0) {
    return {false, "n=28 serial took " + std::to_string(serial28) + " s (limit 30)"};
  }

  const WeightVector u30 = search::sample_unit_vector(30, rng);
  const auto t1 = Clock::now();
  const PlankCount serial = engine::count_plank_gray(u30);
  const double serial30 = seconds_since(t1);

  engine::EnumConfig cfg;
  cfg.chunk_bits = 8;
  const auto t2 = Clock::now();
  const PlankCount parallel = engine::count_parallel(u30, cfg, 8);
  const double par30 = seconds_since(t2);

  if (!(parallel == serial)) return {false, "parallel n=30 counts differ from serial"};
  const double speedup = serial30 / par30;
  std::ostringstream os;
  os << "n=28 serial " << serial28 << " s; n=30 serial " << serial30 << " s, 8 workers "
     << par30 << " s, speedup " << speedup << "x";
  if (speedup < 3.0) {
    return {false, os.str() + " (needs >= 3x)"};
  }
  return {true, os.str()};
}

// #10 -- the bound sweeps are re-runnable from the CLI sweep subcommand with
// a fixed seed and produce byte-stable reports (timing_ms excluded, as it
// measures wall time).
Outcome criterion10() {
  const std::vector<std::string> args{"sweep", "--n-range", "2:10",  "--count", "50",
                                      "--seed", "12345",   "--checks"};
  std::ostringstream out1, out2, err;
  const int code1 = cli::run_command(args, out1, err);
  const int code2 = cli::run_command(args, out2, err);
  if (code1 != 0 || code2 != 0) {
    return {false, "sweep exited " + std::to_string(code1) + "/" + std::to_string(code2)};
  }
  auto scrub = [](const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    doc.erase("timing_ms");
    return doc.dump();
  };
  const std::string a = scrub(out1.str());
  if (a != scrub(out2.str())) return {false, "sweep reports differ between runs"};
  nlohmann::json doc = nlohmann::json::parse(out1.str());
  if (doc["result"]["summary"]["failures"] != 0) return {false, "sweep recorded failures"};
  return {true, "sweep (n 2..10, 50 vectors, checks on) byte-stable and all-pass"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "oracle equivalence (gray = naive = parallel)", criterion1},
      {2, "Eq.(1): satisfied ratio >= 1/2", criterion2},
      {3, "Theorem 1: satisfied >= 2^(n-1)/sqrt(n)", criterion3},
      {4, "Lemma 1: strict interior < (2-1/sqrt(n))2^(n-2)", criterion4},
      {5, "structural invariants", criterion5},
      {6, "tight case b=(1,1) padded", criterion6},
      {7, "search recovery", criterion7},
      {8, "family oracle", criterion8},
      {9, "performance", criterion9},
      {10, "CLI sweep byte-stability", criterion10},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    const auto start = Clock::now();
    const Outcome outcome = entry.fn();
    const double secs = seconds_since(start);
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " #" << entry.id << " " << entry.name
              << " (" << secs << " s)";
    if (!outcome.detail.empty()) std::cout << ": " << outcome.detail;
    std::cout << std::endl;
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
  }
  return failures;
}
