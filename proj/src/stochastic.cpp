#include "dphi/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace dphi::stochastic {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void validate(double x, const McOptions& opts) {
  if (!(x >= -1.0 && x <= 0.0)) throw std::domain_error("mc_phi: x must lie in [-1, 0]");
  if (opts.samples == 0) throw std::invalid_argument("mc_phi: samples must be >= 1");
  if (opts.depth < kMinDepth) throw std::invalid_argument("mc_phi: depth must be >= 8");
}

// counts[j] += #{i in [begin, end): S_i <= thresholds[j]}
void count_range(const CounterRng& rng, std::size_t begin, std::size_t end, std::size_t depth,
                 std::span<const double> thresholds, std::vector<std::size_t>& counts) {
  for (std::size_t i = begin; i < end; ++i) {
    double s = 0.0;
    double w = 1.0;
    for (std::size_t k = 0; k < depth; ++k) {
      w *= 0.5;
      s += w * rng.uniform(i, k);
    }
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      if (s <= thresholds[j]) ++counts[j];
    }
  }
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t index) const {
  const std::uint64_t key = mix64(seed_ + kGolden * (stream + 1));
  return mix64(key + kGolden * (index + 1));
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t index) const {
  return (static_cast<double>(bits(stream, index) >> 11) + 0.5) * 0x1.0p-53;
}

double McEstimate::bias_bound() const { return std::ldexp(1.0, -static_cast<int>(depth)); }

std::vector<McEstimate> mc_phi_many(std::span<const double> xs, const McOptions& opts) {
  for (double x : xs) validate(x, opts);
  std::vector<double> thresholds;
  thresholds.reserve(xs.size());
  for (double x : xs) thresholds.push_back(x + 1.0);

  const CounterRng rng(opts.seed);
  const std::size_t workers = std::clamp<std::size_t>(opts.streams, 1, opts.samples);
  std::vector<std::vector<std::size_t>> partial(workers, std::vector<std::size_t>(xs.size(), 0));
  const std::size_t chunk = (opts.samples + workers - 1) / workers;
  if (workers == 1) {
    count_range(rng, 0, opts.samples, opts.depth, thresholds, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(opts.samples, w * chunk);
      const std::size_t end = std::min(opts.samples, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        count_range(rng, begin, end, opts.depth, thresholds, partial[w]);
      });
    }
  }

  std::vector<McEstimate> out;
  out.reserve(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    McEstimate e;
    e.x = xs[j];
    e.samples = opts.samples;
    e.depth = opts.depth;
    e.seed = opts.seed;
    for (const auto& p : partial) e.hits += p[j];
    const double n = static_cast<double>(opts.samples);
    e.estimate = static_cast<double>(e.hits) / n;
    e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / n);
    out.push_back(e);
  }
  return out;
}

McEstimate mc_phi(double x, const McOptions& opts) {
  const double xs[] = {x};
  return mc_phi_many(xs, opts).front();
}

}  // namespace dphi::stochastic
