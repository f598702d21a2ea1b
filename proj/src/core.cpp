#include "plankcount/core.hpp"

#include <cmath>
#include <limits>

namespace plankcount {

namespace {

void require_dims(int n) {
  if (n < 1) throw InvalidInput("dimension must be >= 1");
  if (n > kMaxDims) throw CapacityError("dimension exceeds 63-bit mask arithmetic");
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("weight vector must be non-empty");
  for (double a : weights_) {
    if (!std::isfinite(a)) throw InvalidInput("weights must be finite");
  }
}

double WeightVector::norm_sq() const {
  double s = 0.0;
  for (double a : weights_) s += a * a;
  return s;
}

bool WeightVector::is_normalized(double tol) const {
  return std::fabs(norm_sq() - 1.0) <= tol;
}

WeightVector normalize(std::vector<double> weights) {
  WeightVector v(std::move(weights));
  const double norm = std::sqrt(v.norm_sq());
  if (norm == 0.0 || !std::isfinite(norm)) {
    throw InvalidInput("cannot normalize the zero vector");
  }
  std::vector<double> scaled = v.weights();
  for (double& a : scaled) a /= norm;
  return WeightVector(std::move(scaled));
}

IntWeightVector::IntWeightVector(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("weight vector must be non-empty");
  bool any_nonzero = false;
  unsigned __int128 abs_sum = 0;
  for (std::int64_t b : weights_) {
    any_nonzero |= (b != 0);
    const unsigned __int128 mag =
        (b < 0) ? -static_cast<unsigned __int128>(b) : static_cast<unsigned __int128>(b);
    abs_sum += mag;
    norm_sq_ += static_cast<Int128>(mag * mag);
  }
  if (!any_nonzero) throw InvalidInput("integer weights must not all be zero");
  // Any signed vertex sum s satisfies |s| <= sum |b_i|; keeping that below
  // 2^62 lets the engine hold s and the +-2*b_i increments in int64 and the
  // squared quantities in a signed 128-bit integer.
  if (abs_sum >= (static_cast<unsigned __int128>(1) << 62)) {
    throw ExactOverflow("sum of |weights| must stay below 2^62 for exact counting");
  }
}

WeightVector IntWeightVector::to_unit() const {
  std::vector<double> w(weights_.begin(), weights_.end());
  return normalize(std::move(w));
}

SignVertex::SignVertex(int dims, std::uint64_t mask) : dims_(dims), mask_(mask) {
  require_dims(dims);
  if (dims < 64 && mask >= (1ull << dims)) {
    throw InvalidInput("vertex mask out of range for dimension");
  }
}

int SignVertex::sign(int coord) const {
  if (coord < 1 || coord > dims_) throw InvalidInput("coordinate index out of range");
  return (mask_ >> (coord - 1)) & 1ull ? -1 : +1;
}

std::vector<int> vertex_decode(std::uint64_t mask, int n) {
  require_dims(n);
  if (n < 64 && mask >= (1ull << n)) throw InvalidInput("vertex mask out of range");
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) signs[i] = (mask >> i) & 1ull ? -1 : +1;
  return signs;
}

SignVertex antipode(const SignVertex& v) {
  return SignVertex(v.dims(), v.mask() ^ full_mask(v.dims()));
}

double PlankCount::ratio() const {
  return static_cast<double>(satisfied()) / std::ldexp(1.0, dims);
}

}  // namespace plankcount
