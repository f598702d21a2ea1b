#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core domain types for counting cube vertices against planks and tangent
// half-spaces of the unit ball.  Conventions used throughout:
//   - A sign vertex of the cube [-1,1]^n is an n-bit mask; bit i = 0 means
//     coordinate i+1 is +1, bit i = 1 means it is -1.  Mask 0 is the
//     all-plus vertex.
//   - Coordinate indices in public interfaces are 1-based (a_1..a_n);
//     bit indices are 0-based.
//   - Mask arithmetic supports n up to 63.

namespace plankcount {

inline constexpr int kMaxDims = 63;

/// Invalid argument to a library operation (bad weights, out-of-range mask, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested dimension exceeds what the selected engine mode supports.
class CapacityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact-mode arithmetic cannot be guaranteed overflow-free for this input.
class ExactOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A half-space vertex set was empty where a nonempty one is required.
class EmptyHalfSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Int128 = __int128;

/// All-ones mask for dimension n.
inline std::uint64_t full_mask(int n) {
  return (n >= 64) ? ~0ull : ((1ull << n) - 1ull);
}

/// Binary-reflected Gray code of t.
inline std::uint64_t gray_mask(std::uint64_t t) { return t ^ (t >> 1); }

/// Real unit normal of a plank/half-space.  Weights are validated to be
/// finite; unit norm is guaranteed by the normalize() factory, not by the
/// constructor.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);

  int dims() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }

  /// Sum of squared weights.
  double norm_sq() const;

  /// True when |sum a_i^2 - 1| <= tol.
  bool is_normalized(double tol = 1e-12) const;

 private:
  std::vector<double> weights_;
};

/// Scale a weight list to unit Euclidean norm, preserving direction.
/// Throws InvalidInput on an empty list, non-finite entries, or the zero
/// vector.
WeightVector normalize(std::vector<double> weights);

/// Integer weight vector b representing the direction u = b / ||b||.
/// The plank membership test |<eps,u>| <= 1 becomes <eps,b>^2 <= norm_sq,
/// which is decided in exact integer arithmetic.  The constructor rejects
/// inputs whose signed sums could leave the guaranteed-safe 128-bit range.
class IntWeightVector {
 public:
  explicit IntWeightVector(std::vector<std::int64_t> weights);

  int dims() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }

  /// Exact sum of squared weights.
  Int128 norm_sq() const { return norm_sq_; }

  /// The represented unit direction b / ||b|| in doubles.
  WeightVector to_unit() const;

 private:
  std::vector<std::int64_t> weights_;
  Int128 norm_sq_ = 0;
};

/// One vertex of the cube [-1,1]^n encoded as an n-bit mask.
class SignVertex {
 public:
  SignVertex(int dims, std::uint64_t mask);

  int dims() const { return dims_; }
  std::uint64_t mask() const { return mask_; }

  /// Sign of 1-based coordinate: +1 or -1.
  int sign(int coord) const;

  bool operator==(const SignVertex& other) const = default;

 private:
  int dims_;
  std::uint64_t mask_;
};

/// Decode a mask to its +-1 coordinate list (bit i = 0 -> +1 at position i+1).
std::vector<int> vertex_decode(std::uint64_t mask, int n);

/// The negated vertex: mask XOR full_mask(n).
SignVertex antipode(const SignVertex& v);

/// Classification of all 2^n vertices against the plank |<eps,u>| <= 1,
/// with a symmetric tolerance band of half-width tol around the boundary.
struct PlankCount {
  int dims = 0;
  std::uint64_t inside = 0;    // |s| <  1 - tol
  std::uint64_t boundary = 0;  // ||s| - 1| <= tol
  std::uint64_t outside = 0;   // |s| >  1 + tol
  double tol = 0.0;

  std::uint64_t satisfied() const { return inside + boundary; }
  std::uint64_t total() const { return inside + boundary + outside; }
  double ratio() const;

  bool operator==(const PlankCount& other) const = default;
};

/// Classification of vertices against the tangent half-space <x,u> >= 1.
struct HalfSpaceCount {
  int dims = 0;
  std::uint64_t strict_interior = 0;  // s > 1 + tol
  std::uint64_t boundary = 0;         // |s - 1| <= tol
  double tol = 0.0;

  std::uint64_t closed() const { return strict_interior + boundary; }

  bool operator==(const HalfSpaceCount& other) const = default;
};

/// Sum w of all vertices in the closed half-space, with the convexity
/// inequalities <w,u> >= k and ||w|| >= k evaluated on it.
struct CentroidWitness {
  std::vector<std::int64_t> w;
  std::uint64_t k = 0;
  double w_norm = 0.0;
  double dot = 0.0;
  bool norm_ok = false;
  bool dot_ok = false;

  bool holds() const { return norm_ok && dot_ok; }
};

/// Counts plus the bound values and verdicts for one weight vector.
struct BoundReport {
  int dims = 0;
  std::uint64_t satisfied = 0;
  std::uint64_t strict_interior = 0;
  double theorem1_bound = 0.0;
  double lemma1_bound = 0.0;
  double ratio = 0.0;
  bool pass_theorem1 = false;
  bool pass_lemma1 = false;
  bool pass_tomaszewski = false;

  bool all_pass() const { return pass_theorem1 && pass_lemma1 && pass_tomaszewski; }
};

/// Extremal weight vector found by sphere search.
struct SearchResult {
  WeightVector best;
  std::uint64_t satisfied = 0;
  double ratio = 0.0;
  int restarts_used = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t evaluations = 0;
};

}  // namespace plankcount
