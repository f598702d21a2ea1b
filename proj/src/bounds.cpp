#include "plankcount/bounds.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "gray_scan.hpp"

namespace plankcount::bounds {

namespace {

using boost::multiprecision::int256_t;

constexpr double kAxisTol = 1e-9;
constexpr double kCentroidRelTol = 1e-9;
constexpr int kExactMaxDims = 34;

void validate_float_input(const WeightVector& u, const engine::EnumConfig& cfg) {
  if (u.dims() > kMaxDims) throw CapacityError("dimension exceeds mask arithmetic");
  if (!(cfg.tol >= 0.0 && cfg.tol < 1.0)) throw InvalidInput("tol must lie in [0, 1)");
  if (!u.is_normalized(1e-9)) throw InvalidInput("weight vector must be normalized");
}

void validate_exact_input(const IntWeightVector& b) {
  if (b.dims() > kExactMaxDims) throw CapacityError("exact mode supports n <= 34");
}

// Smallest int64 value of s = <eps,b> that lies in the closed half-space
// <eps, b/||b||> >= 1, i.e. s >= sqrt(norm_sq).
std::int64_t exact_closed_min(const IntWeightVector& b) {
  const auto norm_sq = static_cast<unsigned __int128>(b.norm_sq());
  const std::uint64_t r = detail::isqrt_u128(norm_sq);
  const bool perfect = static_cast<unsigned __int128>(r) * r == norm_sq;
  return static_cast<std::int64_t>(r) + (perfect ? 0 : 1);
}

BoundReport make_report(int n, std::uint64_t satisfied, std::uint64_t strict_interior) {
  BoundReport r;
  r.dims = n;
  r.satisfied = satisfied;
  r.strict_interior = strict_interior;
  r.theorem1_bound = theorem1_bound(n);
  r.lemma1_bound = lemma1_bound(n);
  r.ratio = static_cast<double>(satisfied) / std::ldexp(1.0, n);
  r.pass_theorem1 = static_cast<double>(satisfied) >= r.theorem1_bound;
  r.pass_lemma1 = static_cast<double>(strict_interior) < r.lemma1_bound;
  r.pass_tomaszewski = satisfied >= (1ull << (n - 1));
  return r;
}

}  // namespace

double theorem1_bound(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  return std::ldexp(1.0, n - 1) / std::sqrt(static_cast<double>(n));
}

double lemma1_bound(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  return (2.0 - 1.0 / std::sqrt(static_cast<double>(n))) * std::ldexp(1.0, n - 2);
}

BoundReport bound_report(const WeightVector& u, const engine::EnumConfig& cfg) {
  const PlankCount plank = engine::count_plank_gray(u, cfg);
  const HalfSpaceCount half = engine::count_halfspace(u, cfg);
  return make_report(u.dims(), plank.satisfied(), half.strict_interior);
}

BoundReport bound_report(const IntWeightVector& b) {
  const PlankCount plank = engine::count_plank_exact(b);
  const HalfSpaceCount half = engine::count_halfspace(b);
  return make_report(b.dims(), plank.satisfied(), half.strict_interior);
}

BoundReport verify_theorem1(const WeightVector& u, const engine::EnumConfig& cfg) {
  return bound_report(u, cfg);
}
BoundReport verify_theorem1(const IntWeightVector& b) { return bound_report(b); }
BoundReport verify_lemma1(const WeightVector& u, const engine::EnumConfig& cfg) {
  return bound_report(u, cfg);
}
BoundReport verify_lemma1(const IntWeightVector& b) { return bound_report(b); }
BoundReport verify_tomaszewski(const WeightVector& u, const engine::EnumConfig& cfg) {
  return bound_report(u, cfg);
}
BoundReport verify_tomaszewski(const IntWeightVector& b) { return bound_report(b); }

SignVertex pi_map(const SignVertex& v, int fixed_coord) {
  if (fixed_coord < 1 || fixed_coord > v.dims()) {
    throw InvalidInput("fixed coordinate out of range");
  }
  const std::uint64_t keep = 1ull << (fixed_coord - 1);
  return SignVertex(v.dims(), v.mask() ^ (full_mask(v.dims()) ^ keep));
}

AntipodalCheck antipodal_free_check(const WeightVector& u, const engine::EnumConfig& cfg) {
  validate_float_input(u, cfg);
  const double lo = 1.0 - cfg.tol;
  AntipodalCheck result;
  const int n = u.dims();
  detail::gray_scan<double, double>(u.weights(), n, 0, cfg.reanchor_period,
                                    [&](std::uint64_t mask, double s) {
                                      if (s >= lo && -s >= lo && !result.witness) {
                                        result.pass = false;
                                        result.witness.emplace(SignVertex(n, mask),
                                                               SignVertex(n, mask ^ full_mask(n)));
                                      }
                                    });
  return result;
}

AntipodalCheck antipodal_free_check(const IntWeightVector& b) {
  validate_exact_input(b);
  const std::int64_t lo = exact_closed_min(b);
  AntipodalCheck result;
  const int n = b.dims();
  detail::gray_scan<std::int64_t, std::int64_t>(
      b.weights(), n, 0, 0, [&](std::uint64_t mask, std::int64_t s) {
        if (s >= lo && -s >= lo && !result.witness) {
          result.pass = false;
          result.witness.emplace(SignVertex(n, mask), SignVertex(n, mask ^ full_mask(n)));
        }
      });
  return result;
}

namespace {

// Shared pi-pair scan: membership of the pi_map partner is decided from the
// current sum alone, since <pi_j(eps), w> = 2*eps_j*w_j - <eps, w>.
template <typename Weight, typename Sum, typename Closed>
int find_pi_pair(const std::vector<Weight>& w, Closed&& closed) {
  const int n = static_cast<int>(w.size());
  int found = 0;
  detail::gray_scan<Weight, Sum>(w, n, 0, 1ull << 20,
                                 [&](std::uint64_t mask, Sum s) {
                                   if (found || !closed(s)) return;
                                   for (int i = 0; i < n; ++i) {
                                     const Sum sign = (mask >> i) & 1ull ? Sum(-1) : Sum(1);
                                     const Sum partner = Sum(2) * sign * Sum(w[i]) - s;
                                     if (closed(partner)) {
                                       found = i + 1;
                                       return;
                                     }
                                   }
                                 });
  return found;
}

Observation2Check finish_observation2(Observation2Check check, bool axis_ok,
                                      std::uint64_t strict_interior) {
  std::ostringstream detail;
  if (!check.pair_found) {
    check.pass = true;
    detail << "no pi-related pair in the closed half-space; vacuously holds";
  } else {
    check.axis_confirmed = axis_ok;
    check.strict_interior = strict_interior;
    check.pass = axis_ok && strict_interior == 0;
    detail << "pi-related pair found at coordinate " << check.axis_coord << "; axis "
           << (axis_ok ? "confirmed" : "NOT confirmed") << "; strict_interior = "
           << strict_interior;
  }
  check.detail = detail.str();
  return check;
}

}  // namespace

Observation2Check observation2_check(const WeightVector& u, const engine::EnumConfig& cfg) {
  validate_float_input(u, cfg);
  const double lo = 1.0 - cfg.tol;
  Observation2Check check;
  check.axis_coord =
      find_pi_pair<double, double>(u.weights(), [lo](double s) { return s >= lo; });
  check.pair_found = check.axis_coord != 0;
  bool axis_ok = false;
  std::uint64_t strict = 0;
  if (check.pair_found) {
    axis_ok = std::fabs(std::fabs(u[check.axis_coord - 1]) - 1.0) <= kAxisTol;
    for (int i = 0; axis_ok && i < u.dims(); ++i) {
      if (i != check.axis_coord - 1 && std::fabs(u[i]) > kAxisTol) axis_ok = false;
    }
    strict = engine::count_halfspace(u, cfg).strict_interior;
  }
  return finish_observation2(std::move(check), axis_ok, strict);
}

Observation2Check observation2_check(const IntWeightVector& b) {
  validate_exact_input(b);
  const std::int64_t lo = exact_closed_min(b);
  Observation2Check check;
  check.axis_coord = find_pi_pair<std::int64_t, std::int64_t>(
      b.weights(), [lo](std::int64_t s) { return s >= lo; });
  check.pair_found = check.axis_coord != 0;
  bool axis_ok = false;
  std::uint64_t strict = 0;
  if (check.pair_found) {
    axis_ok = b[check.axis_coord - 1] != 0;
    for (int i = 0; axis_ok && i < b.dims(); ++i) {
      if (i != check.axis_coord - 1 && b[i] != 0) axis_ok = false;
    }
    strict = engine::count_halfspace(b).strict_interior;
  }
  return finish_observation2(std::move(check), axis_ok, strict);
}

CentroidWitness centroid_witness(const WeightVector& u, const engine::EnumConfig& cfg) {
  validate_float_input(u, cfg);
  const double lo = 1.0 - cfg.tol;
  const int n = u.dims();
  CentroidWitness wit;
  wit.w.assign(static_cast<std::size_t>(n), 0);
  detail::gray_scan<double, double>(u.weights(), n, 0, cfg.reanchor_period,
                                    [&](std::uint64_t mask, double s) {
                                      if (s < lo) return;
                                      ++wit.k;
                                      for (int i = 0; i < n; ++i) {
                                        wit.w[i] += (mask >> i) & 1ull ? -1 : 1;
                                      }
                                    });
  if (wit.k == 0) throw EmptyHalfSpace("closed half-space contains no vertex");

  Int128 norm_sq = 0;
  double dot = 0.0;
  for (int i = 0; i < n; ++i) {
    norm_sq += static_cast<Int128>(wit.w[i]) * wit.w[i];
    dot += static_cast<double>(wit.w[i]) * u[i];
  }
  wit.w_norm = std::sqrt(static_cast<double>(norm_sq));
  wit.dot = dot;
  const double need = static_cast<double>(wit.k) * (1.0 - kCentroidRelTol);
  wit.norm_ok = wit.w_norm >= need;
  wit.dot_ok = wit.dot >= need;
  return wit;
}

CentroidWitness centroid_witness(const IntWeightVector& b) {
  validate_exact_input(b);
  const std::int64_t lo = exact_closed_min(b);
  const int n = b.dims();
  CentroidWitness wit;
  wit.w.assign(static_cast<std::size_t>(n), 0);
  detail::gray_scan<std::int64_t, std::int64_t>(
      b.weights(), n, 0, 0, [&](std::uint64_t mask, std::int64_t s) {
        if (s < lo) return;
        ++wit.k;
        for (int i = 0; i < n; ++i) {
          wit.w[i] += (mask >> i) & 1ull ? -1 : 1;
        }
      });
  if (wit.k == 0) throw EmptyHalfSpace("closed half-space contains no vertex");

  Int128 norm_sq = 0;
  Int128 dot_wb = 0;
  for (int i = 0; i < n; ++i) {
    norm_sq += static_cast<Int128>(wit.w[i]) * wit.w[i];
    dot_wb += static_cast<Int128>(wit.w[i]) * b[i];
  }
  const auto k128 = static_cast<Int128>(wit.k);
  // ||w|| >= k  <=>  sum w_i^2 >= k^2, all in 128-bit.
  wit.norm_ok = norm_sq >= k128 * k128;
  // <w, b/||b||> >= k  <=>  <w,b> >= 0 and <w,b>^2 >= k^2 * norm_sq(b),
  // the squares needing 256-bit headroom.
  const int256_t d{dot_wb};
  const int256_t rhs = int256_t{k128 * k128} * int256_t{b.norm_sq()};
  wit.dot_ok = dot_wb >= 0 && d * d >= rhs;

  wit.w_norm = std::sqrt(static_cast<double>(norm_sq));
  wit.dot = static_cast<double>(dot_wb) / std::sqrt(static_cast<double>(b.norm_sq()));
  return wit;
}

}  // namespace plankcount::bounds
