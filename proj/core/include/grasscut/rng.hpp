#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "grasscut/types.hpp"

namespace grasscut {

// Generator identity recorded in reports. Bump the suffix whenever the
// sampling recipe below changes, since old seeds would stop reproducing.
inline constexpr std::string_view kRngName = "mt19937_64+splitmix64/v1";

/// SplitMix64 finalizer, used for seeding and stream derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// FNV-1a over a string, used to give each campaign its own stream family.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Seeded generator with platform-independent sampling.
///
/// std::mt19937_64 output is fixed by the standard, but the <random>
/// distributions are not, so uniform and Gaussian draws are implemented here
/// (53-bit mantissa uniforms, Box-Muller normals).
///
/// Stream splitting: the generator for (master seed, tag, index) is seeded with
/// splitmix64(splitmix64(seed ^ fnv1a64(tag)) + index). Independent trials use
/// distinct indices and never share state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  static Rng stream(std::uint64_t master_seed, std::string_view tag, std::uint64_t index);

  double uniform();  // [0, 1)
  double normal();   // standard normal
  Complex complex_normal();  // E|z|^2 = 1
  CMatrix gaussian(Eigen::Index rows, Eigen::Index cols);

  std::uint64_t next_u64() { return engine_(); }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace grasscut
