#pragma once

#include <vector>

#include "grasscut/subspaces.hpp"
#include "grasscut/types.hpp"

namespace grasscut {

/// All n-subsets of {0..N-1} in lexicographic order. For (2, 4) this is
/// {01, 02, 03, 12, 13, 23}, i.e. (p12, p13, p14, p23, p24, p34).
std::vector<std::vector<int>> index_sets(int n, int N);

/// Position of a strictly increasing index set within index_sets(n, N).
int index_set_position(const std::vector<int>& subset, int N);

/// Number of n-subsets of an N-set.
long long binomial(int N, int n);

/// A point of the projective space P(Λ^n C^N), stored as an unnormalized
/// coordinate vector indexed by lexicographic n-subsets.
struct PlueckerPoint {
  int n = 0;
  int N = 0;
  CVector coords;

  /// Validates length and non-vanishing. Throws WrongShape / InvalidArgument.
  static PlueckerPoint make(int n, int N, CVector coords);

  /// Copy scaled so the first coordinate with modulus above `zero_tol`
  /// (relative to the max modulus) equals 1. Used for report output.
  [[nodiscard]] PlueckerPoint normalized_for_display(double zero_tol = 1e-12) const;
};

/// H_i: the hyperplane on which homogeneous coordinate i (0-based) vanishes.
struct Hyperplane {
  int index = 0;
};

/// The n x n minors of a frame, in lexicographic column order.
PlueckerPoint embed_frame(const CMatrix& frame);

/// The Plücker embedding of a plane. Changing the frame multiplies every
/// coordinate by the same nonzero scalar.
PlueckerPoint embed(const Plane& X);

/// Fubini-Study angle arccos(|<p,q>| / (|p| |q|)) in [0, pi/2].
///
/// Evaluated as atan2 of the orthogonal and parallel components, which keeps
/// full relative accuracy at both ends of the range.
double fs_distance(const PlueckerPoint& p, const PlueckerPoint& q);

bool projective_equal(const PlueckerPoint& p, const PlueckerPoint& q, double tol = 1e-8);

/// |p12 p34 - p13 p24 + p14 p23| after scaling p to unit norm. G_2(C^4) only.
double quadric_residual_g24(const PlueckerPoint& p);

/// True iff |coords[h.index]| / |p| < tol.
bool hyperplane_membership(const PlueckerPoint& p, Hyperplane h, double tol = 1e-8);

/// Hermitian inner product sum conj(p_S) q_S.
Complex pluecker_inner(const PlueckerPoint& p, const PlueckerPoint& q);

}  // namespace grasscut
