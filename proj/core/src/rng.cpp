#include "grasscut/rng.hpp"

#include <cmath>
#include <numbers>

namespace grasscut {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotInChart: return "NotInChart";
    case ErrorKind::OutsideOverlap: return "OutsideOverlap";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::AtCutLocus: return "AtCutLocus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

void TolerancePolicy::validate() const {
  if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "rank_tol must lie in (0, 1)");
  }
  if (!(zero_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "zero_tol must be positive");
  }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::stream(std::uint64_t master_seed, std::string_view tag, std::uint64_t index) {
  const std::uint64_t family = splitmix64(master_seed ^ fnv1a64(tag));
  return Rng(splitmix64(family + index));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

CMatrix Rng::gaussian(Eigen::Index rows, Eigen::Index cols) {
  CMatrix out(rows, cols);
  // Row-major fill order is part of the reproducibility contract.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = complex_normal();
  }
  return out;
}

}  // namespace grasscut
