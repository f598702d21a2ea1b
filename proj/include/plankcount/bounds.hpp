#pragma once

#include <optional>
#include <string>
#include <utility>

#include "plankcount/core.hpp"
#include "plankcount/engine.hpp"

// Bound formulas and verdicts for concrete weight vectors, plus checkers for
// the combinatorial structure behind them: the antipodal-free property of a
// tangent half-space's vertex set, the pi-map pairing on a fixed coordinate,
// and the centroid convexity inequalities.

namespace plankcount::bounds {

/// Plank vertex lower bound 2^(n-1) / sqrt(n).
double theorem1_bound(int n);

/// Half-space interior vertex upper bound (2 - 1/sqrt(n)) * 2^(n-2).
double lemma1_bound(int n);

/// Count both the plank and the tangent half-space for u and evaluate all
/// three verdicts.  The verify_* wrappers below return the same report.
BoundReport bound_report(const WeightVector& u, const engine::EnumConfig& cfg = {});
BoundReport bound_report(const IntWeightVector& b);

/// pass_theorem1 = satisfied >= 2^(n-1)/sqrt(n)  (equality passes).
BoundReport verify_theorem1(const WeightVector& u, const engine::EnumConfig& cfg = {});
BoundReport verify_theorem1(const IntWeightVector& b);

/// pass_lemma1 = strict_interior < (2 - 1/sqrt(n)) * 2^(n-2)  (strict).
BoundReport verify_lemma1(const WeightVector& u, const engine::EnumConfig& cfg = {});
BoundReport verify_lemma1(const IntWeightVector& b);

/// pass_tomaszewski = satisfied / 2^n >= 1/2  (equality passes).
BoundReport verify_tomaszewski(const WeightVector& u, const engine::EnumConfig& cfg = {});
BoundReport verify_tomaszewski(const IntWeightVector& b);

/// Keep coordinate `fixed_coord` (1-based), negate all others.  An involution.
SignVertex pi_map(const SignVertex& v, int fixed_coord);

/// PASS when no vertex and its antipode both lie in the closed half-space.
/// This is a theorem for unit normals, so a witness indicates an engine bug.
struct AntipodalCheck {
  bool pass = true;
  std::optional<std::pair<SignVertex, SignVertex>> witness;
};
AntipodalCheck antipodal_free_check(const WeightVector& u, const engine::EnumConfig& cfg = {});
AntipodalCheck antipodal_free_check(const IntWeightVector& b);

/// Scans the closed half-space vertex set for a pair related by pi_map on
/// some fixed coordinate j.  If one exists, u must be (within tolerance, or
/// exactly in exact mode) a signed standard basis vector +-e_j and the open
/// half-space must contain no vertex at all.
struct Observation2Check {
  bool pass = true;
  bool pair_found = false;
  int axis_coord = 0;  // 1-based j of the first pair found, 0 if none
  bool axis_confirmed = false;
  std::uint64_t strict_interior = 0;
  std::string detail;
};
Observation2Check observation2_check(const WeightVector& u, const engine::EnumConfig& cfg = {});
Observation2Check observation2_check(const IntWeightVector& b);

/// Exact coordinate sum w of all vertices in the closed half-space, with the
/// convexity inequalities <w,u> >= k and ||w|| >= k evaluated (exactly in
/// exact mode, with a 1e-9 relative allowance in float mode).
/// Throws EmptyHalfSpace when the closed half-space contains no vertex.
CentroidWitness centroid_witness(const WeightVector& u, const engine::EnumConfig& cfg = {});
CentroidWitness centroid_witness(const IntWeightVector& b);

}  // namespace plankcount::bounds
