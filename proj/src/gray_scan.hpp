#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "plankcount/core.hpp"

// Internal Gray-code traversal shared by the engine and the invariant
// checkers.  Not installed.

namespace plankcount::detail {

inline double dot_from_mask(const std::vector<double>& w, std::uint64_t mask) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (mask >> i) & 1ull ? -w[i] : w[i];
  }
  return s;
}

inline std::int64_t dot_from_mask(const std::vector<std::int64_t>& w, std::uint64_t mask) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (mask >> i) & 1ull ? -w[i] : w[i];
  }
  return s;
}

// Visits all masks base | g for g ranging over Gray codes of the low `bits`
// bits, carrying the running sum <eps,w>.  `base` must have the low `bits`
// bits clear.  visit(mask, s) is called once per vertex; the first visit is
// the base mask itself (low bits all +1).  A reanchor_period of 0 disables
// the periodic from-scratch recompute (exact sums never drift).
template <typename Weight, typename Sum, typename Visit>
void gray_scan(const std::vector<Weight>& w, int bits, std::uint64_t base,
               std::uint64_t reanchor_period, Visit&& visit) {
  const std::size_t n = w.size();
  std::vector<Sum> twice(n);
  for (std::size_t i = 0; i < n; ++i) twice[i] = Sum(2) * Sum(w[i]);

  std::uint64_t mask = base;
  Sum s = Sum(dot_from_mask(w, mask));
  visit(mask, s);

  const std::uint64_t total = 1ull << bits;
  std::uint64_t since_anchor = 0;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int j = std::countr_zero(t);
    mask ^= 1ull << j;
    if (reanchor_period != 0 && ++since_anchor == reanchor_period) {
      s = Sum(dot_from_mask(w, mask));
      since_anchor = 0;
    } else {
      s += (mask >> j) & 1ull ? -twice[j] : twice[j];
    }
    visit(mask, s);
  }
}

// floor(sqrt(x)) for nonnegative 128-bit integers.
inline std::uint64_t isqrt_u128(unsigned __int128 x) {
  if (x == 0) return 0;
  auto est = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(x)));
  std::uint64_t r = est > 2 ? est - 2 : 0;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  while (static_cast<unsigned __int128>(r) * r > x) --r;
  return r;
}

}  // namespace plankcount::detail
