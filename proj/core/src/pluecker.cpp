#include "grasscut/pluecker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace grasscut {

namespace {

void require_same_space(const PlueckerPoint& p, const PlueckerPoint& q) {
  if (p.n != q.n || p.N != q.N || p.coords.size() != q.coords.size()) {
    throw Error(ErrorKind::WrongShape, "Plücker points live in different spaces");
  }
}

}  // namespace

long long binomial(int N, int n) {
  if (n < 0 || n > N) return 0;
  long long r = 1;
  for (int i = 1; i <= n; ++i) r = r * (N - n + i) / i;
  return r;
}

std::vector<std::vector<int>> index_sets(int n, int N) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > N) return out;
  out.reserve(static_cast<std::size_t>(binomial(N, n)));
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == N - n + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

int index_set_position(const std::vector<int>& subset, int N) {
  // Standard combinatorial ranking of a lexicographic n-subset.
  const int n = static_cast<int>(subset.size());
  long long rank = 0;
  int prev = -1;
  for (int i = 0; i < n; ++i) {
    const int s = subset[static_cast<std::size_t>(i)];
    if (s <= prev || s >= N) {
      throw Error(ErrorKind::InvalidArgument, "index set must be strictly increasing in [0, N)");
    }
    for (int c = prev + 1; c < s; ++c) rank += binomial(N - c - 1, n - i - 1);
    prev = s;
  }
  return static_cast<int>(rank);
}

PlueckerPoint PlueckerPoint::make(int n, int N, CVector coords) {
  if (n < 1 || N <= n || coords.size() != binomial(N, n)) {
    throw Error(ErrorKind::WrongShape, "coordinate vector length must be binomial(N, n)");
  }
  if (coords.cwiseAbs().maxCoeff() == 0.0) {
    throw Error(ErrorKind::InvalidArgument, "a projective point cannot be the zero vector");
  }
  return {n, N, std::move(coords)};
}

PlueckerPoint PlueckerPoint::normalized_for_display(double zero_tol) const {
  const double scale = coords.cwiseAbs().maxCoeff();
  PlueckerPoint out = *this;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (std::abs(coords(i)) > zero_tol * scale) {
      out.coords /= coords(i);
      break;
    }
  }
  return out;
}

PlueckerPoint embed_frame(const CMatrix& frame) {
  const int n = static_cast<int>(frame.rows());
  const int N = static_cast<int>(frame.cols());
  if (n < 1 || N <= n) throw Error(ErrorKind::WrongShape, "frame must be n x N with n < N");

  const auto sets = index_sets(n, N);
  CVector coords(static_cast<Eigen::Index>(sets.size()));
  CMatrix sub(n, n);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (int j = 0; j < n; ++j) sub.col(j) = frame.col(sets[k][static_cast<std::size_t>(j)]);
    // Direct determinant per minor; shared Laplace expansion would be the
    // faster path if ambient dimensions ever grow past desk scale.
    coords(static_cast<Eigen::Index>(k)) = n == 1 ? sub(0, 0) : sub.partialPivLu().determinant();
  }
  return {n, N, std::move(coords)};
}

PlueckerPoint embed(const Plane& X) { return embed_frame(X.basis()); }

Complex pluecker_inner(const PlueckerPoint& p, const PlueckerPoint& q) {
  require_same_space(p, q);
  return p.coords.dot(q.coords);  // Eigen's dot conjugates the left operand
}

double fs_distance(const PlueckerPoint& p, const PlueckerPoint& q) {
  require_same_space(p, q);
  const CVector u = p.coords.normalized();
  const CVector v = q.coords.normalized();
  const Complex c = u.dot(v);
  const double sin_part = (v - c * u).norm();
  return std::atan2(sin_part, std::abs(c));
}

bool projective_equal(const PlueckerPoint& p, const PlueckerPoint& q, double tol) {
  return fs_distance(p, q) < tol;
}

double quadric_residual_g24(const PlueckerPoint& p) {
  if (p.n != 2 || p.N != 4 || p.coords.size() != 6) {
    throw Error(ErrorKind::WrongShape, "quadric residual is defined on G_2(C^4) only");
  }
  const CVector u = p.coords.normalized();
  return std::abs(u(0) * u(5) - u(1) * u(4) + u(2) * u(3));
}

bool hyperplane_membership(const PlueckerPoint& p, Hyperplane h, double tol) {
  if (h.index < 0 || h.index >= p.coords.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "hyperplane index " + std::to_string(h.index) + " out of range");
  }
  return std::abs(p.coords(h.index)) / p.coords.norm() < tol;
}

}  // namespace grasscut
