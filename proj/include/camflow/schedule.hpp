#pragma once

#include <cstdint>
#include <vector>

namespace camflow::schedule {

/// Output range of the quadratic timestep map, in log-noise units.
struct QtsConfig {
  double lo = -3.66;
  double hi = 3.66;

  /// Throws ValidationError unless lo < hi and both are finite.
  void validate() const;
};

/// Maps u in [0, 1] to lo + (hi - lo) * (1 - u^2). Strictly decreasing; biases
/// uniform draws toward the high end of the range. Throws ValidationError
/// for u outside [0, 1].
double qts_map(double u, const QtsConfig& config = {});

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_from_bits(std::uint64_t bits);

/// Draws n values of qts_map(u) with u uniform. The generator is
/// std::mt19937_64 seeded with `seed`, and uniforms come from
/// unit_from_bits, so batches are identical on every platform.
std::vector<double> qts_sample_batch(std::size_t n, std::uint64_t seed,
                                     const QtsConfig& config = {});

/// Analytic CDF of qts_map(U), U ~ Uniform[0, 1].
double qts_cdf(double x, const QtsConfig& config = {});

}  // namespace camflow::schedule
