#pragma once

#include <cstdint>
#include <vector>

#include "grasscut/rng.hpp"
#include "grasscut/types.hpp"

namespace grasscut {

/// An n-dimensional linear subspace of C^N.
///
/// Frames are row-oriented: the subspace is the row span of an n x N matrix.
/// The stored basis is orthonormal (rows pairwise orthogonal, unit length);
/// the input frame is not retained. Formulas that depend on a particular frame
/// (chart layouts, unnormalized overlaps) take explicit frame matrices instead.
class Plane {
 public:
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  [[nodiscard]] int ambient() const noexcept { return static_cast<int>(basis_.cols()); }
  [[nodiscard]] int codim() const noexcept { return ambient() - dim(); }
  [[nodiscard]] const CMatrix& basis() const noexcept { return basis_; }

  /// Orthogonal projector Bᴴ B onto the subspace (N x N).
  [[nodiscard]] CMatrix projector() const;

  // Trusts that `rows` is already orthonormal. Use plane_new for arbitrary frames.
  static Plane from_orthonormal(CMatrix rows);

 private:
  explicit Plane(CMatrix rows) : basis_(std::move(rows)) {}
  CMatrix basis_;
};

/// Pontrjagin chart coordinates: the plane whose frame has the identity in
/// columns `sigma` and the n x m block Z in the remaining columns, taken in
/// increasing order. Column indices are 0-based.
struct PontrjaginCoords {
  std::vector<int> sigma;
  CMatrix Z;
};

/// Number of singular values above rank_tol times the largest one.
int numerical_rank(const CMatrix& m, double rank_tol);

/// Builds a Plane from the row span of `frame`. Throws RankDeficient.
Plane plane_new(const CMatrix& frame, const TolerancePolicy& tol = {});

/// O = span(e_1, ..., e_n) in C^N.
Plane base_point(int n, int N);

/// The (N - n)-dimensional Hermitian orthocomplement.
Plane ortho_complement(const Plane& X);

/// dim(X ∩ W) via dim X + dim W - rank [X; W].
int intersection_dim(const Plane& X, const Plane& W, const TolerancePolicy& tol = {});

/// The complement of sigma in {0..N-1}, increasing.
std::vector<int> complement_columns(const std::vector<int>& sigma, int N);

/// The explicit chart frame: row i is e_{sigma(i)} + sum_a Z(i, a) e_{tau(a)},
/// where tau = complement_columns(sigma, N).
CMatrix pontrjagin_frame(const PontrjaginCoords& pc);

Plane pontrjagin_to_plane(const PontrjaginCoords& pc);

/// Inverse of pontrjagin_to_plane. Throws NotInChart when the sigma columns of
/// X's basis form a numerically singular block.
PontrjaginCoords plane_to_pontrjagin(const Plane& X, const std::vector<int>& sigma,
                                     const TolerancePolicy& tol = {});

/// Same as plane_to_pontrjagin but starting from any frame of the plane.
PontrjaginCoords frame_to_pontrjagin(const CMatrix& frame, const std::vector<int>& sigma,
                                     const TolerancePolicy& tol = {});

/// Projector comparison in the max-entry norm. Planes of different dimension
/// are never equal; different ambient dimension throws WrongShape.
bool plane_equal(const Plane& X, const Plane& Y, double tol = 1e-8);

/// Haar-distributed plane: complex Gaussian frame, then orthonormalized.
Plane random_plane(int n, int N, std::uint64_t seed);
Plane random_plane(int n, int N, Rng& rng);

/// Unitary matrix from the QR factorization of a complex Gaussian matrix,
/// with the R-diagonal phases removed so the distribution is Haar.
CMatrix random_unitary(int N, Rng& rng);

}  // namespace grasscut
