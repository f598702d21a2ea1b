#pragma once

#include "plankcount/core.hpp"

// Enumeration of all 2^n sign vertices against the plank |<eps,u>| <= 1 and
// the tangent half-space <eps,u> >= 1, in float and exact integer modes.
// All counting routines are pure; the parallel variant partitions the mask
// space by its top bits and folds chunk results in chunk order, so results
// are independent of worker count and scheduling.

namespace plankcount::engine {

/// Knobs shared by the counting routines.
struct EnumConfig {
  /// Classification band half-width around |s| = 1 (ignored in exact mode).
  double tol = 1e-9;
  /// The Gray-code running sum is recomputed from scratch every this many
  /// steps to cap float drift.  0 disables re-anchoring.
  std::uint64_t reanchor_period = 1ull << 20;
  /// Number of high mask bits fixed per parallel chunk; clamped to [0, n-1].
  int chunk_bits = 8;
};

/// Reference oracle: recompute <eps,u> from scratch for every mask.
/// Limited to n <= 26.
PlankCount count_plank_naive(const WeightVector& u, const EnumConfig& cfg = {});

/// Gray-code engine: visits masks in binary-reflected Gray order, updating
/// the running sum with a single +-2*a_i per step.  Same tol policy and
/// counts as count_plank_naive.
PlankCount count_plank_gray(const WeightVector& u, const EnumConfig& cfg = {});

/// Exact mode: tol = 0, boundary means <eps,b>^2 = ||b||^2 exactly.
/// Limited to n <= 34.
PlankCount count_plank_exact(const IntWeightVector& b);

HalfSpaceCount count_halfspace(const WeightVector& u, const EnumConfig& cfg = {});
HalfSpaceCount count_halfspace(const IntWeightVector& b);

/// Deterministic parallel plank count: equals the serial Gray-code result
/// exactly for any chunk_bits and worker count.
PlankCount count_parallel(const WeightVector& u, const EnumConfig& cfg, unsigned workers);
PlankCount count_parallel(const IntWeightVector& b, const EnumConfig& cfg, unsigned workers);

/// Plank count plus the slack sum over satisfied vertices of (1 - |s|),
/// which the search objective uses as a plateau tie-breaker.
struct PlankScan {
  PlankCount count;
  double slack_sum = 0.0;
};
PlankScan scan_plank_slack(const WeightVector& u, const EnumConfig& cfg = {});

}  // namespace plankcount::engine
