#include "meanlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace meanlab {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64_finalize(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Rng::Rng(std::uint64_t seed, std::string_view purpose)
    : key_(splitmix64_finalize(seed ^ splitmix64_finalize(fnv1a64(purpose)))) {}

Rng Rng::fork(std::string_view label, std::uint64_t index) const {
  const std::uint64_t k =
      splitmix64_finalize(key_ ^ fnv1a64(label)) + splitmix64_finalize(index + kGolden);
  return Rng(splitmix64_finalize(k));
}

std::uint64_t Rng::next_u64() {
  ++counter_;
  return splitmix64_finalize(key_ + counter_ * kGolden);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

int Rng::uniform_int(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

double Rng::normal() {
  // Box-Muller, first variate only; 1 - u keeps the log argument in (0, 1].
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace meanlab
