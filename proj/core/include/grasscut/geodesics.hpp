#pragma once

#include <vector>

#include "grasscut/subspaces.hpp"
#include "grasscut/types.hpp"

namespace grasscut {

/// Tangent vector at the base point O, written as the n x m block B of the
/// horizontal space m (the off-diagonal block of u(N)). The singular values
/// of B are the angular speeds of the geodesic t -> exp_geodesic(O, B, t).
struct Tangent {
  CMatrix B;
};

/// Outcome of the three cut-locus criteria for one plane.
struct CutVerdict {
  bool by_overlap = false;   // (e_O, e_X) = 0
  bool by_distance = false;  // Fubini-Study distance of the images equals pi/2
  bool by_rank = false;      // X meets the orthocomplement of O
  double max_principal_angle = 0.0;
  double overlap_magnitude = 0.0;
  double fs_angle = 0.0;

  [[nodiscard]] bool agree() const noexcept {
    return by_overlap == by_distance && by_distance == by_rank;
  }
};

/// Principal angles in nondecreasing order, each in [0, pi/2].
std::vector<double> principal_angles(const Plane& X, const Plane& Y);

/// Geodesic from the base point O with initial velocity B, evaluated at t.
///
/// With B = U S Vᴴ, the result is the row span of
///   [ 1 + U (cos(St) - 1) Uᴴ  |  U sin(St) Vᴴ ]
/// which reduces to [U cos(St) Uᴴ | U sin(St) Vᴴ] when U is square and stays
/// orthonormal when n > m. Throws InvalidArgument unless O is base_point(n, N).
Plane exp_geodesic(const Plane& O, const Tangent& B, double t);

/// Inverse of exp_geodesic on the complement of the cut locus. Throws
/// AtCutLocus when the largest principal angle to O is >= pi/2 - tol.
Tangent log_geodesic(const Plane& O, const Plane& X, double tol = 1e-8);

/// First parameter at which the geodesic meets the cut locus, (pi/2) / s_max.
/// Returns +infinity for B = 0.
double cut_time(const Tangent& B);

/// Evaluates all three cut-locus criteria at the given tolerance.
///
/// The rank criterion uses `tol` as its relative rank threshold so the three
/// tests resolve the critical angle at comparable scales.
CutVerdict cut_locus_member(const Plane& X, const Plane& O, double tol = 1e-8);

}  // namespace grasscut
