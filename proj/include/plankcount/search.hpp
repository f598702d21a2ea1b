#pragma once

#include <random>

#include "plankcount/core.hpp"
#include "plankcount/engine.hpp"

// Stochastic search for weight vectors minimizing the plank vertex count
// over the unit sphere, plus the exact binomial evaluation of the k-equal-
// weights family.  The count objective is piecewise constant on the sphere,
// so the search anneals over norm-preserving plane rotations and uses a
// slack term to create descent signal across plateaus.

namespace plankcount::search {

using Rng = std::mt19937_64;

struct SearchConfig {
  int restarts = 50;
  int steps_per_restart = 5000;
  double initial_temperature = 1.0;
  /// Multiplicative temperature factor applied once per step, in (0,1).
  double cooling = 0.999;
  /// Slack weight lambda in [0,1); below 1 the slack term can never
  /// outweigh a unit difference in vertex count.
  double slack_weight = 0.5;
  std::uint64_t rng_seed = 0;
  int dims = 2;
};

/// Isotropic unit vector: independent standard normal coordinates,
/// normalized.  Deterministic for a given generator state.
WeightVector sample_unit_vector(int n, Rng& rng);

/// Rotate coordinates i and j (1-based, distinct) by theta radians; all
/// other coordinates unchanged.  Norm-preserving within 1e-12.
WeightVector givens_perturb(const WeightVector& u, int i, int j, double theta);

/// satisfied(u) + slack_weight * mean over satisfied vertices of (1 - |s|).
double objective(const WeightVector& u, double slack_weight,
                 const engine::EnumConfig& cfg = {});

/// Simulated annealing from `start`: uniform random coordinate pair, theta
/// drawn from a normal with standard deviation equal to the current
/// temperature.  Improving moves are always accepted, worsening moves with
/// probability exp(-delta/T).  Returns the best vector encountered, judged
/// by fewest satisfied vertices with larger slack breaking ties, after a
/// deterministic count-preserving slack ascent that centers the record on
/// the tight candidate of its plateau.  The reported satisfied count is the
/// true (slack-free) count of the returned vector.
SearchResult local_search(const WeightVector& start, const SearchConfig& cfg, Rng& rng);

/// Multi-restart wrapper over local_search.  Restart r runs on seed
/// rng_seed XOR r; the result is the minimum over restarts with ties broken
/// by larger recorded slack and then by lower restart index, so it is
/// independent of worker scheduling.
SearchResult search_minimum(int n, const SearchConfig& cfg, unsigned workers = 1);

/// Exact satisfied count for the vector with k equal weights 1/sqrt(k)
/// embedded in dimension n: sum of C(k,j) over (k-2j)^2 <= k, times 2^(n-k).
std::uint64_t family_count(int n, int k);

/// Round a unit vector to the nearest integer direction with entries
/// |b_i| <= max_denominator, for exact re-verification of candidates.
IntWeightVector round_rational(const WeightVector& u, std::int64_t max_denominator = 1000);

}  // namespace plankcount::search
