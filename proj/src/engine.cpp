#include "plankcount/engine.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "gray_scan.hpp"

namespace plankcount::engine {

namespace {

constexpr int kNaiveMaxDims = 26;
constexpr int kExactMaxDims = 34;

void validate_cfg(const EnumConfig& cfg) {
  if (!(cfg.tol >= 0.0 && cfg.tol < 1.0)) throw InvalidInput("tol must lie in [0, 1)");
}

void validate_float(const WeightVector& u, const EnumConfig& cfg) {
  validate_cfg(cfg);
  if (u.dims() > kMaxDims) throw CapacityError("dimension exceeds mask arithmetic");
  if (!u.is_normalized(1e-9)) throw InvalidInput("weight vector must be normalized");
}

void validate_exact(const IntWeightVector& b) {
  if (b.dims() > kExactMaxDims) throw CapacityError("exact mode supports n <= 34");
}

int clamped_chunk_bits(int chunk_bits, int n) {
  if (chunk_bits < 0) chunk_bits = 0;
  if (chunk_bits > n - 1) chunk_bits = n - 1;
  return chunk_bits;
}

// Per-chunk float plank kernel over the low `bits` bits of `base`.
PlankCount plank_chunk_float(const std::vector<double>& w, int bits, std::uint64_t base,
                             const EnumConfig& cfg) {
  const double lo = 1.0 - cfg.tol;
  const double hi = 1.0 + cfg.tol;
  std::uint64_t in = 0, out = 0;
  detail::gray_scan<double, double>(w, bits, base, cfg.reanchor_period,
                                    [&](std::uint64_t, double s) {
                                      const double as = std::fabs(s);
                                      in += as < lo;
                                      out += as > hi;
                                    });
  PlankCount c;
  c.dims = static_cast<int>(w.size());
  c.inside = in;
  c.outside = out;
  c.boundary = (1ull << bits) - in - out;
  c.tol = cfg.tol;
  return c;
}

// Exact plank kernel.  The running sum stays in int64 (guaranteed by the
// IntWeightVector construction bound); classification compares |s| against
// r = floor(sqrt(norm_sq)) so the loop never squares.
PlankCount plank_chunk_exact(const IntWeightVector& b, int bits, std::uint64_t base) {
  const auto norm_sq = static_cast<unsigned __int128>(b.norm_sq());
  const std::uint64_t r = detail::isqrt_u128(norm_sq);
  const bool perfect = static_cast<unsigned __int128>(r) * r == norm_sq;
  const auto sr = static_cast<std::int64_t>(r);
  std::uint64_t out = 0, bd = 0;
  detail::gray_scan<std::int64_t, std::int64_t>(
      b.weights(), bits, base, 0, [&](std::uint64_t, std::int64_t s) {
        const std::int64_t as = s < 0 ? -s : s;
        out += as > sr;
        bd += (as == sr) & static_cast<std::int64_t>(perfect);
      });
  PlankCount c;
  c.dims = b.dims();
  // |s| == r with r^2 < norm_sq is strictly inside, so inside is the rest.
  c.inside = (1ull << bits) - out - bd;
  c.outside = out;
  c.boundary = bd;
  c.tol = 0.0;
  return c;
}

template <typename Chunk>
PlankCount run_chunked(int n, const EnumConfig& cfg, unsigned workers, Chunk&& chunk_fn) {
  const int tb = clamped_chunk_bits(cfg.chunk_bits, n);
  const int low_bits = n - tb;
  const std::uint64_t chunks = 1ull << tb;
  std::vector<PlankCount> partial(chunks);

  auto worker = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      partial[c] = chunk_fn(low_bits, c << low_bits);
    }
  };

  if (workers <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) partial[c] = chunk_fn(low_bits, c << low_bits);
  } else {
    std::atomic<std::uint64_t> next{0};
    const unsigned nthreads = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, chunks));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker, std::ref(next));
    for (auto& t : pool) t.join();
  }

  // Ordered fold over chunk index keeps the reduction deterministic.
  PlankCount total = partial[0];
  for (std::uint64_t c = 1; c < chunks; ++c) {
    total.inside += partial[c].inside;
    total.boundary += partial[c].boundary;
    total.outside += partial[c].outside;
  }
  return total;
}

}  // namespace

PlankCount count_plank_naive(const WeightVector& u, const EnumConfig& cfg) {
  validate_float(u, cfg);
  if (u.dims() > kNaiveMaxDims) throw CapacityError("naive oracle supports n <= 26");
  const auto& w = u.weights();
  const double lo = 1.0 - cfg.tol;
  const double hi = 1.0 + cfg.tol;
  const std::uint64_t total = 1ull << u.dims();
  std::uint64_t in = 0, out = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const double as = std::fabs(detail::dot_from_mask(w, mask));
    in += as < lo;
    out += as > hi;
  }
  PlankCount c;
  c.dims = u.dims();
  c.inside = in;
  c.outside = out;
  c.boundary = total - in - out;
  c.tol = cfg.tol;
  return c;
}

PlankCount count_plank_gray(const WeightVector& u, const EnumConfig& cfg) {
  validate_float(u, cfg);
  return plank_chunk_float(u.weights(), u.dims(), 0, cfg);
}

PlankCount count_plank_exact(const IntWeightVector& b) {
  validate_exact(b);
  return plank_chunk_exact(b, b.dims(), 0);
}

HalfSpaceCount count_halfspace(const WeightVector& u, const EnumConfig& cfg) {
  validate_float(u, cfg);
  const double lo = 1.0 - cfg.tol;
  const double hi = 1.0 + cfg.tol;
  std::uint64_t strict = 0, bd = 0;
  detail::gray_scan<double, double>(u.weights(), u.dims(), 0, cfg.reanchor_period,
                                    [&](std::uint64_t, double s) {
                                      strict += s > hi;
                                      bd += (s >= lo) & (s <= hi);
                                    });
  HalfSpaceCount h;
  h.dims = u.dims();
  h.strict_interior = strict;
  h.boundary = bd;
  h.tol = cfg.tol;
  return h;
}

HalfSpaceCount count_halfspace(const IntWeightVector& b) {
  validate_exact(b);
  const auto norm_sq = static_cast<unsigned __int128>(b.norm_sq());
  const std::uint64_t r = detail::isqrt_u128(norm_sq);
  const bool perfect = static_cast<unsigned __int128>(r) * r == norm_sq;
  const auto sr = static_cast<std::int64_t>(r);
  std::uint64_t strict = 0, bd = 0;
  detail::gray_scan<std::int64_t, std::int64_t>(
      b.weights(), b.dims(), 0, 0, [&](std::uint64_t, std::int64_t s) {
        strict += s > sr;
        bd += (s == sr) & perfect;
      });
  HalfSpaceCount h;
  h.dims = b.dims();
  h.strict_interior = strict;
  h.boundary = bd;
  h.tol = 0.0;
  return h;
}

PlankCount count_parallel(const WeightVector& u, const EnumConfig& cfg, unsigned workers) {
  validate_float(u, cfg);
  const auto& w = u.weights();
  return run_chunked(u.dims(), cfg, workers, [&](int bits, std::uint64_t base) {
    return plank_chunk_float(w, bits, base, cfg);
  });
}

PlankCount count_parallel(const IntWeightVector& b, const EnumConfig& cfg, unsigned workers) {
  validate_exact(b);
  return run_chunked(b.dims(), cfg, workers, [&](int bits, std::uint64_t base) {
    return plank_chunk_exact(b, bits, base);
  });
}

PlankScan scan_plank_slack(const WeightVector& u, const EnumConfig& cfg) {
  validate_float(u, cfg);
  const double lo = 1.0 - cfg.tol;
  const double hi = 1.0 + cfg.tol;
  std::uint64_t in = 0, out = 0;
  double slack = 0.0;
  detail::gray_scan<double, double>(u.weights(), u.dims(), 0, cfg.reanchor_period,
                                    [&](std::uint64_t, double s) {
                                      const double as = std::fabs(s);
                                      in += as < lo;
                                      out += as > hi;
                                      slack += as <= hi ? 1.0 - as : 0.0;
                                    });
  PlankScan scan;
  scan.count.dims = u.dims();
  scan.count.inside = in;
  scan.count.outside = out;
  scan.count.boundary = (1ull << u.dims()) - in - out;
  scan.count.tol = cfg.tol;
  scan.slack_sum = slack;
  return scan;
}

}  // namespace plankcount::engine
