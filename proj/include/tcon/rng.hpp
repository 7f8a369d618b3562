#pragma once

#include <cstdint>
#include <string_view>

namespace tcon {

/// Deterministic splitmix64-based generator. The standard <random>
/// distributions are implementation-defined, so everything that must be
/// reproducible across platforms and runs goes through this class.
/// Streams can be split by key so that per-item randomness is independent
/// of processing order (and therefore of parallelism).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(mix(seed ^ kGolden)) {}

  uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n). n must be > 0.
  uint64_t uniform_int(uint64_t n);

  bool coin() { return (next_u64() & 1u) != 0; }

  /// Derive an independent stream for a sub-task.
  Rng split(uint64_t key) const;
  Rng split(std::string_view key) const;

  static uint64_t hash(std::string_view s);

 private:
  static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static uint64_t mix(uint64_t z);
  uint64_t state_;
};

}  // namespace tcon
