#pragma once

#include <cstdint>
#include <string_view>

namespace meanlab {

/// Counter-based 64-bit generator: output k of a stream is
/// splitmix64_finalize(key + (k + 1) * 0x9E3779B97F4A7C15), the SplitMix64
/// sequence run from state `key`. A stream's key is derived from the seed
/// and a purpose label (FNV-1a), so adding a new purpose never shifts the
/// draws of an existing one. Normals come from Box-Muller, not <random>
/// distributions, so draws are identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view purpose);

  /// Independent child stream; `index` selects e.g. a trial.
  Rng fork(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer uniform in [lo, hi].
  int uniform_int(int lo, int hi);
  double normal();

  std::uint64_t key() const { return key_; }

 private:
  explicit Rng(std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_finalize(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace meanlab
