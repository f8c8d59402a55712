#pragma once

// Test-only reference computations. Nothing here calls the library's LU, SVD
// or minor routines, so agreement with the library is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "grasscut/types.hpp"

namespace grasscut::oracle {

/// Determinant by the Leibniz permutation sum.
inline Complex leibniz_det(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Complex term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) term *= a(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Plücker coordinates by brute force: enumerate column subsets with a
/// bitmask in increasing numeric order, then sort lexicographically.
inline CVector brute_minors(const CMatrix& frame) {
  const int n = static_cast<int>(frame.rows());
  const int N = static_cast<int>(frame.cols());
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << N); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    std::vector<int> s;
    for (int c = 0; c < N; ++c) {
      if (mask & (1 << c)) s.push_back(c);
    }
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());
  CVector out(static_cast<Eigen::Index>(subsets.size()));
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    CMatrix sub(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sub(i, j) = frame(i, subsets[k][static_cast<std::size_t>(j)]);
    }
    out(static_cast<Eigen::Index>(k)) = leibniz_det(sub);
  }
  return out;
}

/// det[<x_i, y_j>] with the inner product written out as loops.
inline Complex gram_overlap(const CMatrix& x, const CMatrix& y) {
  const auto n = x.rows();
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (Eigen::Index a = 0; a < x.cols(); ++a) s += std::conj(x(i, a)) * y(j, a);
      g(i, j) = s;
    }
  }
  return leibniz_det(g);
}

/// Gram-Schmidt on rows, used instead of the library's SVD orthonormalization.
inline CMatrix gram_schmidt_rows(const CMatrix& frame) {
  CMatrix q = frame;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < i; ++j) {
        Complex c = 0.0;
        for (Eigen::Index a = 0; a < q.cols(); ++a) c += std::conj(q(j, a)) * q(i, a);
        q.row(i) -= c * q.row(j);
      }
    }
    q.row(i) /= q.row(i).norm();
  }
  return q;
}

inline CMatrix projector_of(const CMatrix& frame) {
  const CMatrix q = gram_schmidt_rows(frame);
  return q.adjoint() * q;
}

/// Squared cosines of the principal angles: the n largest eigenvalues of
/// Px Py Px restricted to X, via a Hermitian eigensolver.
inline std::vector<double> cos2_principal(const CMatrix& x_frame, const CMatrix& y_frame) {
  const CMatrix qx = gram_schmidt_rows(x_frame);
  const CMatrix py = projector_of(y_frame);
  const CMatrix m = qx * py * qx.adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (double& v : out) v = std::clamp(v, 0.0, 1.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// dim(X ∩ W) as the number of unit singular values of Px Pw.
inline int intersection_by_projectors(const CMatrix& x_frame, const CMatrix& w_frame,
                                      double threshold = 1e-6) {
  const CMatrix prod = projector_of(x_frame) * projector_of(w_frame);
  Eigen::JacobiSVD<CMatrix> svd(prod);
  return static_cast<int>((svd.singularValues().array() > 1.0 - threshold).count());
}

}  // namespace grasscut::oracle
