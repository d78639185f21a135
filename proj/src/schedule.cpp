#include "camflow/schedule.hpp"

#include <cmath>
#include <random>
#include <string>

#include "camflow/error.hpp"

namespace camflow::schedule {

void QtsConfig::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ValidationError("QTS range needs finite lo < hi");
  }
}

double qts_map(double u, const QtsConfig& config) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw ValidationError("qts_map expects u in [0, 1], got " + std::to_string(u));
  }
  return config.lo + (config.hi - config.lo) * (1.0 - u * u);
}

double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<double> qts_sample_batch(std::size_t n, std::uint64_t seed, const QtsConfig& config) {
  config.validate();
  if (n == 0) throw ValidationError("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(qts_map(unit_from_bits(rng()), config));
  return out;
}

double qts_cdf(double x, const QtsConfig& config) {
  // X <= x  <=>  1 - U^2 <= (x - lo) / (hi - lo)  <=>  U >= sqrt(1 - s)
  if (x < config.lo) return 0.0;
  if (x >= config.hi) return 1.0;
  const double s = (x - config.lo) / (config.hi - config.lo);
  return 1.0 - std::sqrt(1.0 - s);
}

}  // namespace camflow::schedule
