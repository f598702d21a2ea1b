#include "plankcount/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <thread>

namespace plankcount::search {

namespace {

constexpr int kSearchMaxDims = 24;

void validate_config(const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw InvalidInput("restarts must be >= 1");
  if (cfg.steps_per_restart < 0) throw InvalidInput("steps_per_restart must be >= 0");
  if (!(cfg.initial_temperature > 0.0)) throw InvalidInput("initial_temperature must be > 0");
  if (!(cfg.cooling > 0.0 && cfg.cooling < 1.0)) throw InvalidInput("cooling must lie in (0,1)");
  if (!(cfg.slack_weight >= 0.0 && cfg.slack_weight < 1.0)) {
    throw InvalidInput("slack_weight must lie in [0,1)");
  }
}

void validate_search_dims(int n) {
  if (n < 1) throw InvalidInput("dimension must be >= 1");
  if (n > kSearchMaxDims) throw CapacityError("search evaluates float counts at n <= 24");
}

struct Eval {
  std::uint64_t satisfied = 0;
  double slack_sum = 0.0;
};

Eval evaluate(const WeightVector& u, const engine::EnumConfig& cfg) {
  const engine::PlankScan scan = engine::scan_plank_slack(u, cfg);
  return {scan.count.satisfied(), scan.slack_sum};
}

double objective_of(const Eval& e, double slack_weight) {
  const double mean =
      e.satisfied == 0 ? 0.0 : e.slack_sum / static_cast<double>(e.satisfied);
  return static_cast<double>(e.satisfied) + slack_weight * mean;
}

// Record preference: fewer satisfied vertices, then larger total slack
// (satisfied vertices sitting deeper inside mark the tighter candidates).
bool record_improves(const Eval& best, const Eval& cand) {
  if (cand.satisfied != best.satisfied) return cand.satisfied < best.satisfied;
  return cand.slack_sum > best.slack_sum;
}

struct RestartOutcome {
  WeightVector best;
  Eval eval;
  std::uint64_t evaluations = 0;
};

// Deterministic count-preserving refinement of the recorded best: hill-climb
// toward the slack maximum of its plateau with shrinking plane rotations.
// The annealing walk hugs the low-slack edge of a plateau, so the raw record
// usually sits a little off the tight candidate it circled.
std::uint64_t polish_record(WeightVector& best, Eval& best_eval,
                            const engine::EnumConfig& ecfg) {
  const int n = best.dims();
  if (n < 2) return 0;
  std::uint64_t evals = 0;
  double step = 0.1;
  while (step >= 1e-4) {
    bool improved = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (double direction : {1.0, -1.0}) {
          const WeightVector cand = givens_perturb(best, i, j, direction * step);
          const Eval cand_eval = evaluate(cand, ecfg);
          ++evals;
          if (record_improves(best_eval, cand_eval)) {
            best = cand;
            best_eval = cand_eval;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return evals;
}

RestartOutcome anneal(const WeightVector& start, const SearchConfig& cfg, Rng& rng) {
  const int n = start.dims();
  const engine::EnumConfig ecfg;

  WeightVector cur = start;
  Eval cur_eval = evaluate(cur, ecfg);
  double cur_obj = objective_of(cur_eval, cfg.slack_weight);
  std::uint64_t evals = 1;

  WeightVector best = cur;
  Eval best_eval = cur_eval;

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double temperature = cfg.initial_temperature;
  for (int step = 1; step <= cfg.steps_per_restart && n >= 2; ++step) {
    std::uniform_int_distribution<int> pick_i(0, n - 1);
    std::uniform_int_distribution<int> pick_j(0, n - 2);
    const int i = pick_i(rng);
    int j = pick_j(rng);
    if (j >= i) ++j;
    const double theta = gauss(rng) * temperature;

    WeightVector cand = givens_perturb(cur, i + 1, j + 1, theta);
    if (step % 1024 == 0) cand = normalize(cand.weights());  // drift control

    const Eval cand_eval = evaluate(cand, ecfg);
    ++evals;
    const double cand_obj = objective_of(cand_eval, cfg.slack_weight);

    if (record_improves(best_eval, cand_eval)) {
      best = cand;
      best_eval = cand_eval;
    }

    const double delta = cand_obj - cur_obj;
    if (delta <= 0.0 || std::exp(-delta / temperature) > unit(rng)) {
      cur = std::move(cand);
      cur_eval = cand_eval;
      cur_obj = cand_obj;
    }
    temperature *= cfg.cooling;
  }

  // Zero steps means no moves at all: return the evaluation of start itself.
  if (cfg.steps_per_restart > 0) evals += polish_record(best, best_eval, ecfg);
  return {normalize(best.weights()), best_eval, evals};
}

}  // namespace

WeightVector sample_unit_vector(int n, Rng& rng) {
  if (n < 1) throw InvalidInput("dimension must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (;;) {
    double norm_sq = 0.0;
    for (double& a : w) {
      a = gauss(rng);
      norm_sq += a * a;
    }
    if (norm_sq > 1e-24) break;  // degenerate draw: resample
  }
  return normalize(std::move(w));
}

WeightVector givens_perturb(const WeightVector& u, int i, int j, double theta) {
  const int n = u.dims();
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidInput("rotation index out of range");
  if (i == j) throw InvalidInput("rotation indices must be distinct");
  std::vector<double> w = u.weights();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double xi = w[i - 1];
  const double xj = w[j - 1];
  w[i - 1] = c * xi - s * xj;
  w[j - 1] = s * xi + c * xj;
  return WeightVector(std::move(w));
}

double objective(const WeightVector& u, double slack_weight, const engine::EnumConfig& cfg) {
  if (!(slack_weight >= 0.0 && slack_weight < 1.0)) {
    throw InvalidInput("slack_weight must lie in [0,1)");
  }
  validate_search_dims(u.dims());
  return objective_of(evaluate(u, cfg), slack_weight);
}

SearchResult local_search(const WeightVector& start, const SearchConfig& cfg, Rng& rng) {
  validate_config(cfg);
  validate_search_dims(start.dims());
  RestartOutcome out = anneal(start, cfg, rng);
  const Eval final_eval = evaluate(out.best, engine::EnumConfig{});
  return SearchResult{out.best,
                      final_eval.satisfied,
                      static_cast<double>(final_eval.satisfied) / std::ldexp(1.0, start.dims()),
                      1,
                      cfg.rng_seed,
                      out.evaluations + 1};
}

SearchResult search_minimum(int n, const SearchConfig& cfg, unsigned workers) {
  validate_config(cfg);
  validate_search_dims(n);

  std::vector<std::optional<RestartOutcome>> outcomes(
      static_cast<std::size_t>(cfg.restarts));

  auto run_restart = [&](int r) {
    Rng rng(cfg.rng_seed ^ static_cast<std::uint64_t>(r));
    const WeightVector start = sample_unit_vector(n, rng);
    outcomes[static_cast<std::size_t>(r)] = anneal(start, cfg, rng);
  };

  if (workers <= 1 || cfg.restarts == 1) {
    for (int r = 0; r < cfg.restarts; ++r) run_restart(r);
  } else {
    std::atomic<int> next{0};
    const unsigned nthreads = std::min<unsigned>(workers, static_cast<unsigned>(cfg.restarts));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (int r = next.fetch_add(1); r < cfg.restarts; r = next.fetch_add(1)) {
          run_restart(r);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Minimum over restarts; ties prefer the larger recorded slack (the
  // tighter candidate), then the lower restart index.
  std::size_t winner = 0;
  std::uint64_t total_evals = outcomes[0]->evaluations;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    total_evals += outcomes[r]->evaluations;
    if (record_improves(outcomes[winner]->eval, outcomes[r]->eval)) winner = r;
  }

  const WeightVector best = outcomes[winner]->best;
  const Eval final_eval = evaluate(best, engine::EnumConfig{});
  return SearchResult{best,
                      final_eval.satisfied,
                      static_cast<double>(final_eval.satisfied) / std::ldexp(1.0, n),
                      cfg.restarts,
                      cfg.rng_seed,
                      total_evals + 1};
}

std::uint64_t family_count(int n, int k) {
  if (n < 1 || n > kMaxDims) throw InvalidInput("n must lie in [1, 63]");
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  std::uint64_t satisfied = 0;
  std::uint64_t binom = 1;  // C(k, 0)
  for (int j = 0; j <= k; ++j) {
    const std::int64_t d = static_cast<std::int64_t>(k) - 2 * j;
    if (d * d <= k) satisfied += binom;
    if (j < k) {
      // 128-bit intermediate: C(63,31) * 32 does not fit 64 bits.
      binom = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(binom) * static_cast<unsigned>(k - j) /
          static_cast<unsigned>(j + 1));
    }
  }
  return satisfied << (n - k);
}

IntWeightVector round_rational(const WeightVector& u, std::int64_t max_denominator) {
  if (max_denominator < 1) throw InvalidInput("max_denominator must be >= 1");
  std::vector<std::int64_t> b(u.weights().size());
  std::int64_t g = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = std::llround(u[i] * static_cast<double>(max_denominator));
    g = std::gcd(g, b[i]);
  }
  if (g == 0) throw InvalidInput("vector rounds to zero at this denominator");
  for (auto& v : b) v /= g;
  return IntWeightVector(std::move(b));
}

}  // namespace plankcount::search
