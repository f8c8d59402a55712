#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace grasscut {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class ErrorKind {
  RankDeficient,
  NotInChart,
  OutsideOverlap,
  WrongShape,
  Malformed,
  AtCutLocus,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Numerical thresholds shared by rank decisions and scalar comparisons.
///
/// rank_tol is relative to the largest singular value; zero_tol is absolute.
struct TolerancePolicy {
  double rank_tol = 1e-8;
  double zero_tol = 1e-12;

  /// Throws InvalidArgument unless 0 < rank_tol < 1 and zero_tol > 0.
  void validate() const;
};

}  // namespace grasscut
