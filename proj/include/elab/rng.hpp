#pragma once

#include <cstdint>
#include <random>

namespace elab {

// Seedable random stream with a fixed draw algorithm. std::mt19937_64 is
// fully specified by the standard; the distributions are hand-rolled here
// because the standard library ones are implementation-defined, which would
// break cross-platform reproducibility of seeded experiments.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform draw in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Normal draw via Box-Muller; pairs are generated together and the spare
  // is cached, so the engine state advances two steps per pair.
  double normal(double mean, double stddev);

  // Uniform integer in [0, bound), rejection sampled (no modulo bias).
  std::uint64_t bounded(std::uint64_t bound);

  // Derives an independent stream seed from a base seed and a stream index
  // (splitmix64 finalizer over the combined words).
  static std::uint64_t derive(std::uint64_t base, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace elab
