#include "grasscut/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "grasscut/coherent.hpp"
#include "grasscut/pluecker.hpp"

namespace grasscut {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_base_point(const Plane& O) {
  if (!plane_equal(O, base_point(O.dim(), O.ambient()), 1e-12)) {
    throw Error(ErrorKind::InvalidArgument, "geodesic maps are anchored at base_point(n, N)");
  }
}

}  // namespace

std::vector<double> principal_angles(const Plane& X, const Plane& Y) {
  if (X.dim() != Y.dim() || X.ambient() != Y.ambient()) {
    throw Error(ErrorKind::WrongShape, "principal_angles: planes have different shapes");
  }
  const CMatrix cross = X.basis() * Y.basis().adjoint();
  Eigen::JacobiSVD<CMatrix> svd(cross);
  const RVector& s = svd.singularValues();  // decreasing
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    angles.push_back(std::acos(std::clamp(s(i), 0.0, 1.0)));
  }
  return angles;
}

Plane exp_geodesic(const Plane& O, const Tangent& B, double t) {
  require_base_point(O);
  const int n = O.dim();
  const int m = O.codim();
  if (B.B.rows() != n || B.B.cols() != m) {
    throw Error(ErrorKind::WrongShape, "tangent block must be n x m");
  }
  Eigen::JacobiSVD<CMatrix> svd(B.B, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const CMatrix& U = svd.matrixU();
  const CMatrix& V = svd.matrixV();
  const RVector st = svd.singularValues() * t;

  const Eigen::VectorXcd cos_minus_one = (st.array().cos() - 1.0).matrix().cast<Complex>();
  const Eigen::VectorXcd sin_st = st.array().sin().matrix().cast<Complex>();

  CMatrix frame(n, n + m);
  frame.leftCols(n) = CMatrix::Identity(n, n) + U * cos_minus_one.asDiagonal() * U.adjoint();
  frame.rightCols(m) = U * sin_st.asDiagonal() * V.adjoint();
  // The frame is orthonormal up to roundoff; re-orthonormalize anyway.
  return plane_new(frame);
}

Tangent log_geodesic(const Plane& O, const Plane& X, double tol) {
  require_base_point(O);
  if (X.dim() != O.dim() || X.ambient() != O.ambient()) {
    throw Error(ErrorKind::WrongShape, "log_geodesic: planes have different shapes");
  }
  const int n = O.dim();
  const int m = O.codim();
  const CMatrix head = X.basis().leftCols(n);

  // Singular values of the leading block are the cosines of the principal angles.
  Eigen::JacobiSVD<CMatrix> head_svd(head);
  const double min_cos = head_svd.singularValues()(n - 1);
  if (std::acos(std::clamp(min_cos, 0.0, 1.0)) >= kHalfPi - tol) {
    throw Error(ErrorKind::AtCutLocus, "plane lies on the cut locus of the base point");
  }

  // Pontrjagin coordinates W = head^{-1} tail have singular values tan(theta).
  const CMatrix W = head.partialPivLu().solve(X.basis().rightCols(m));
  Eigen::JacobiSVD<CMatrix> svd(W, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXcd theta = svd.singularValues().array().atan().matrix().cast<Complex>();
  return {svd.matrixU() * theta.asDiagonal() * svd.matrixV().adjoint()};
}

double cut_time(const Tangent& B) {
  if (B.B.size() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<CMatrix> svd(B.B);
  const double smax = svd.singularValues()(0);
  if (smax == 0.0) return std::numeric_limits<double>::infinity();
  return kHalfPi / smax;
}

CutVerdict cut_locus_member(const Plane& X, const Plane& O, double tol) {
  CutVerdict v;
  v.overlap_magnitude = std::abs(normalized_overlap(O, X));
  v.by_overlap = v.overlap_magnitude < tol;

  v.fs_angle = fs_distance(embed(O), embed(X));
  v.by_distance = std::abs(v.fs_angle - kHalfPi) < tol;

  TolerancePolicy rank_policy;
  rank_policy.rank_tol = tol;
  v.by_rank = intersection_dim(X, ortho_complement(O), rank_policy) >= 1;

  v.max_principal_angle = principal_angles(O, X).back();
  return v;
}

}  // namespace grasscut
