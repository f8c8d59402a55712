#pragma once

#include "grasscut/subspaces.hpp"
#include "grasscut/types.hpp"

namespace grasscut {

/// Unnormalized overlap (e_X, e_Y) of two coherent vectors together with their
/// norms, so that value / (norm_left * norm_right) is frame independent.
struct Overlap {
  Complex value;
  double norm_left = 0.0;
  double norm_right = 0.0;

  [[nodiscard]] Complex normalized() const { return value / (norm_left * norm_right); }
};

// Convention: conjugate-linear in the left frame, linear in the right one, so
// (e_0, e) reads with the fixed state on the left.

/// Gram-determinant overlap det[<x_i, y_j>] of two explicit frames. The norms
/// are the square roots of the self-Gram determinants.
Overlap overlap_frames(const CMatrix& x_frame, const CMatrix& y_frame);

/// Overlap of two planes through their stored orthonormal bases (norms are 1).
Overlap overlap(const Plane& X, const Plane& Y);

Complex normalized_overlap(const Plane& X, const Plane& Y);
Complex normalized_overlap_frames(const CMatrix& x_frame, const CMatrix& y_frame);

/// det(1_n + Z Zpᴴ): the overlap of the coherent vectors of two points of the
/// same Pontrjagin chart. With the convention above this is
/// overlap_frames(frame(Zp), frame(Z)).value.
Complex overlap_pontrjagin(const CMatrix& Z, const CMatrix& Zp);

/// Membership in the polar divisor {X : (e_O, e_X) = 0}, decided on the
/// normalized overlap magnitude.
bool polar_divisor_member(const Plane& X, const Plane& O, double tol = 1e-8);

/// | |normalized_overlap(X, Y)| - |<embed X, embed Y>| / (|.| |.|) |.
///
/// The left side is a Gram determinant in C^N, the right side an inner product
/// in Λ^n C^N built from minors; the two code paths share nothing.
double cauchy_check(const Plane& X, const Plane& Y);

}  // namespace grasscut
