#pragma once

#include <cstdint>
#include <random>

namespace modlat {

/// Child seed for trial `index` of a run seeded with `master`: the first eight
/// bytes (little-endian) of SHA-256(le64(master) || le64(index)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic random source. The stream is mt19937_64 (fully pinned by the
/// C++ standard) and bounded draws use masked rejection sampling, so the
/// output is identical on every conforming platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). `bound` must be nonzero.
  std::uint32_t uniform_below(std::uint32_t bound);
  bool bit() { return (engine_() & 1U) != 0; }

  /// Independent stream for sub-task `index`, derived from the seed alone.
  SeededRng child(std::uint64_t index) const { return SeededRng(derive_seed(seed_, index)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace modlat
