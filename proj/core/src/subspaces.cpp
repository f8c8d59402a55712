#include "grasscut/subspaces.hpp"

#include <algorithm>
#include <string>

namespace grasscut {

namespace {

void check_sigma(const std::vector<int>& sigma, int n, int N) {
  if (static_cast<int>(sigma.size()) != n) {
    throw Error(ErrorKind::InvalidArgument,
                "sigma has " + std::to_string(sigma.size()) + " entries, expected " +
                    std::to_string(n));
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0 || sigma[i] >= N || (i > 0 && sigma[i] <= sigma[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "sigma must be strictly increasing in [0, N)");
    }
  }
}

}  // namespace

CMatrix Plane::projector() const { return basis_.adjoint() * basis_; }

Plane Plane::from_orthonormal(CMatrix rows) { return Plane(std::move(rows)); }

int numerical_rank(const CMatrix& m, double rank_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rank_tol * s(0);
  return static_cast<int>((s.array() > cutoff).count());
}

Plane plane_new(const CMatrix& frame, const TolerancePolicy& tol) {
  tol.validate();
  const auto n = frame.rows();
  const auto N = frame.cols();
  if (n < 1 || N <= n) {
    throw Error(ErrorKind::InvalidArgument,
                "frame must be n x N with 1 <= n < N, got " + std::to_string(n) + " x " +
                    std::to_string(N));
  }
  Eigen::JacobiSVD<CMatrix> svd(frame, Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  if (s(0) == 0.0 || s(n - 1) <= tol.rank_tol * s(0)) {
    throw Error(ErrorKind::RankDeficient,
                "frame has numerical rank " + std::to_string(numerical_rank(frame, tol.rank_tol)) +
                    " < " + std::to_string(n));
  }
  return Plane::from_orthonormal(svd.matrixV().adjoint());
}

Plane base_point(int n, int N) {
  if (n < 1 || N <= n) {
    throw Error(ErrorKind::InvalidArgument, "base_point requires 1 <= n < N");
  }
  return Plane::from_orthonormal(CMatrix::Identity(n, N));
}

Plane ortho_complement(const Plane& X) {
  Eigen::JacobiSVD<CMatrix> svd(X.basis(), Eigen::ComputeFullV);
  return Plane::from_orthonormal(svd.matrixV().rightCols(X.codim()).adjoint());
}

int intersection_dim(const Plane& X, const Plane& W, const TolerancePolicy& tol) {
  if (X.ambient() != W.ambient()) {
    throw Error(ErrorKind::WrongShape, "intersection_dim: ambient dimensions differ");
  }
  const int N = X.ambient();
  CMatrix stacked(X.dim() + W.dim(), N);
  stacked << X.basis(), W.basis();
  const int d = X.dim() + W.dim() - numerical_rank(stacked, tol.rank_tol);
  return std::clamp(d, std::max(0, X.dim() + W.dim() - N), std::min(X.dim(), W.dim()));
}

std::vector<int> complement_columns(const std::vector<int>& sigma, int N) {
  std::vector<int> tau;
  tau.reserve(static_cast<std::size_t>(N) - sigma.size());
  for (int c = 0; c < N; ++c) {
    if (std::find(sigma.begin(), sigma.end(), c) == sigma.end()) tau.push_back(c);
  }
  return tau;
}

CMatrix pontrjagin_frame(const PontrjaginCoords& pc) {
  const int n = static_cast<int>(pc.Z.rows());
  const int N = n + static_cast<int>(pc.Z.cols());
  check_sigma(pc.sigma, n, N);
  const auto tau = complement_columns(pc.sigma, N);
  CMatrix frame = CMatrix::Zero(n, N);
  for (int i = 0; i < n; ++i) {
    frame(i, pc.sigma[static_cast<std::size_t>(i)]) = 1.0;
    for (int a = 0; a < static_cast<int>(tau.size()); ++a) {
      frame(i, tau[static_cast<std::size_t>(a)]) = pc.Z(i, a);
    }
  }
  return frame;
}

Plane pontrjagin_to_plane(const PontrjaginCoords& pc) { return plane_new(pontrjagin_frame(pc)); }

PontrjaginCoords plane_to_pontrjagin(const Plane& X, const std::vector<int>& sigma,
                                     const TolerancePolicy& tol) {
  const int n = X.dim();
  const int N = X.ambient();
  check_sigma(sigma, n, N);
  const auto tau = complement_columns(sigma, N);

  CMatrix block(n, n);
  CMatrix rest(n, N - n);
  for (int j = 0; j < n; ++j) block.col(j) = X.basis().col(sigma[static_cast<std::size_t>(j)]);
  for (int a = 0; a < N - n; ++a) rest.col(a) = X.basis().col(tau[static_cast<std::size_t>(a)]);

  // The basis is orthonormal, so the block's singular values are the cosines
  // of the principal angles to the coordinate plane of sigma and lie in [0, 1].
  Eigen::JacobiSVD<CMatrix> svd(block);
  if (svd.singularValues()(n - 1) <= tol.rank_tol) {
    throw Error(ErrorKind::NotInChart, "plane is outside the chart of the given column set");
  }
  return {sigma, block.partialPivLu().solve(rest)};
}

PontrjaginCoords frame_to_pontrjagin(const CMatrix& frame, const std::vector<int>& sigma,
                                     const TolerancePolicy& tol) {
  return plane_to_pontrjagin(plane_new(frame, tol), sigma, tol);
}

bool plane_equal(const Plane& X, const Plane& Y, double tol) {
  if (X.ambient() != Y.ambient()) {
    throw Error(ErrorKind::WrongShape, "plane_equal: ambient dimensions differ");
  }
  if (X.dim() != Y.dim()) return false;
  return (X.projector() - Y.projector()).cwiseAbs().maxCoeff() < tol;
}

Plane random_plane(int n, int N, Rng& rng) {
  if (n < 1 || N <= n) {
    throw Error(ErrorKind::InvalidArgument, "random_plane requires 1 <= n < N");
  }
  return plane_new(rng.gaussian(n, N));
}

Plane random_plane(int n, int N, std::uint64_t seed) {
  Rng rng(seed);
  return random_plane(n, N, rng);
}

CMatrix random_unitary(int N, Rng& rng) {
  const CMatrix g = rng.gaussian(N, N);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < N; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

}  // namespace grasscut
