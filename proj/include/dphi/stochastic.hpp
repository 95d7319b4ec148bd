#pragma once

// Monte Carlo oracle: for x in [-1, 0], phi(x) is the probability that
// sum_{k>=1} u_k 2^-k <= x + 1 for independent uniform u_k on [0, 1].

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dphi::stochastic {

inline constexpr std::size_t kDefaultDepth = 40;
inline constexpr std::size_t kMinDepth = 8;

/// Counter-based uniform source: the value for (seed, stream, index) is fixed,
/// independent of how many other values were drawn or in which order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t stream, std::uint64_t index) const;
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform(std::uint64_t stream, std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

struct McEstimate {
  double x = 0.0;
  std::size_t samples = 0;
  std::size_t depth = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  std::size_t hits = 0;

  /// Bias from truncating the series after `depth` terms.
  double bias_bound() const;
};

struct McOptions {
  std::size_t samples = 1'000'000;
  std::size_t depth = kDefaultDepth;
  std::uint64_t seed = 0;
  /// Worker threads; results do not depend on this.
  std::size_t streams = 1;
};

/// Estimates phi(x) for x in [-1, 0]. Sample i uses stream i of the
/// counter-based generator, so any split of samples across workers yields a
/// bit-identical result. Throws std::domain_error for x outside [-1, 0].
McEstimate mc_phi(double x, const McOptions& opts);

/// Several estimates from one shared set of samples (common random numbers),
/// which makes the estimates monotone in x.
std::vector<McEstimate> mc_phi_many(std::span<const double> xs, const McOptions& opts);

}  // namespace dphi::stochastic
