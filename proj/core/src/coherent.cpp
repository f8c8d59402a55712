#include "grasscut/coherent.hpp"

#include <cmath>

#include "grasscut/pluecker.hpp"

namespace grasscut {

namespace {

Complex gram_det(const CMatrix& x, const CMatrix& y) {
  // G(i, j) = <x_i, y_j> = sum_a conj(x_ia) y_ja
  const CMatrix g = x.conjugate() * y.transpose();
  return g.rows() == 1 ? g(0, 0) : g.partialPivLu().determinant();
}

}  // namespace

Overlap overlap_frames(const CMatrix& x_frame, const CMatrix& y_frame) {
  if (x_frame.rows() != y_frame.rows() || x_frame.cols() != y_frame.cols()) {
    throw Error(ErrorKind::WrongShape, "overlap: frames have different shapes");
  }
  return {gram_det(x_frame, y_frame), std::sqrt(std::abs(gram_det(x_frame, x_frame))),
          std::sqrt(std::abs(gram_det(y_frame, y_frame)))};
}

Overlap overlap(const Plane& X, const Plane& Y) {
  if (X.dim() != Y.dim() || X.ambient() != Y.ambient()) {
    throw Error(ErrorKind::WrongShape, "overlap: planes have different shapes");
  }
  return {gram_det(X.basis(), Y.basis()), 1.0, 1.0};
}

Complex normalized_overlap(const Plane& X, const Plane& Y) { return overlap(X, Y).normalized(); }

Complex normalized_overlap_frames(const CMatrix& x_frame, const CMatrix& y_frame) {
  return overlap_frames(x_frame, y_frame).normalized();
}

Complex overlap_pontrjagin(const CMatrix& Z, const CMatrix& Zp) {
  if (Z.rows() != Zp.rows() || Z.cols() != Zp.cols()) {
    throw Error(ErrorKind::WrongShape, "overlap_pontrjagin: coordinate blocks differ in shape");
  }
  const auto n = Z.rows();
  const CMatrix m = CMatrix::Identity(n, n) + Z * Zp.adjoint();
  return n == 1 ? m(0, 0) : m.partialPivLu().determinant();
}

bool polar_divisor_member(const Plane& X, const Plane& O, double tol) {
  return std::abs(normalized_overlap(O, X)) < tol;
}

double cauchy_check(const Plane& X, const Plane& Y) {
  const double gram_side = std::abs(normalized_overlap(X, Y));
  const PlueckerPoint px = embed(X);
  const PlueckerPoint py = embed(Y);
  const double embedded_side =
      std::abs(pluecker_inner(px, py)) / (px.coords.norm() * py.coords.norm());
  return std::abs(gram_side - embedded_side);
}

}  // namespace grasscut
