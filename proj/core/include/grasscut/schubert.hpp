#pragma once

#include <string>
#include <vector>

#include "grasscut/rng.hpp"
#include "grasscut/subspaces.hpp"
#include "grasscut/types.hpp"

namespace grasscut {

/// Schubert symbol ω for G_n(C^{n+m}): 0 <= ω(1) <= ... <= ω(n) <= m.
///
/// Positions are 1-based in the accessors below to match the incidence
/// conditions dim(X ∩ C^{σ(i)}) >= i, where σ(i) = ω(i) + i is a dimension.
class SchubertSymbol {
 public:
  [[nodiscard]] int n() const noexcept { return static_cast<int>(omega_.size()); }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] const std::vector<int>& omega() const noexcept { return omega_; }
  [[nodiscard]] int omega_at(int i) const { return omega_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] int sigma_at(int i) const { return omega_at(i) + i; }
  [[nodiscard]] std::vector<int> sigma() const;

  friend bool operator==(const SchubertSymbol&, const SchubertSymbol&) = default;

 private:
  friend SchubertSymbol symbol_new(std::vector<int> omega, int n, int m);
  SchubertSymbol(std::vector<int> omega, int m) : omega_(std::move(omega)), m_(m) {}

  std::vector<int> omega_;
  int m_ = 0;
};

/// Throws Malformed unless omega has n entries, is nondecreasing, and lies in [0, m].
SchubertSymbol symbol_new(std::vector<int> omega, int n, int m);

/// I_ω without the leading i_0 = 0: the right endpoints of the maximal
/// constant runs of ω. Always ends with n.
std::vector<int> jump_indices(const SchubertSymbol& s);

/// Complete flag C^1 ⊂ C^2 ⊂ ... ⊂ C^N, stored as a unitary N x N matrix
/// whose first k rows span C^k.
class Flag {
 public:
  explicit Flag(CMatrix unitary_rows);

  [[nodiscard]] int ambient() const noexcept { return static_cast<int>(rows_.rows()); }

  /// C^k for 1 <= k < N. The full space C^N is not a proper Plane; use meet_dim.
  [[nodiscard]] Plane level(int k) const;

  /// dim(X ∩ C^k) for 0 <= k <= N.
  [[nodiscard]] int meet_dim(const Plane& X, int k, const TolerancePolicy& tol = {}) const;

  /// Checks dim(C^k ∩ C^{k+1}) = k for every proper level.
  [[nodiscard]] bool nested(const TolerancePolicy& tol = {}) const;

 private:
  CMatrix rows_;
};

/// Flag adapted to the base point: C^k = span(e_{n+1}, ..., e_{n+k}) for k <= m,
/// then C^{m+j} = O^⊥ ⊕ span(e_1, ..., e_j). In particular C^m = O^⊥.
Flag standard_flag_adapted(const Plane& O);

/// X ∈ Z(ω): dim(X ∩ C^{σ(i)}) >= i for every i.
bool variety_member(const Plane& X, const SchubertSymbol& s, const Flag& f,
                    const TolerancePolicy& tol = {});

/// X ∈ Z'(ω): dim(X ∩ C^{σ(i_h)}) = i_h for every jump index i_h.
bool stratum_member(const Plane& X, const SchubertSymbol& s, const Flag& f,
                    const TolerancePolicy& tol = {});

/// ω^p_l = (p - l, ..., p - l, m, ..., m) with l leading entries.
/// Z(ω^p_l) = V^p_l = {X : dim(X ∩ C^p) >= l}.
SchubertSymbol symbol_Vpl(int p, int l, int n, int m);

/// Complex codimension n m - sum ω(i).
int codim(const SchubertSymbol& s);

struct Stratum {
  SchubertSymbol symbol;
  int intersection_dim = 0;  // l: exact dim(X ∩ O^⊥) on this stratum
  std::string description;
};

/// The cut locus of O in G_n(C^{n+m}) as the union of strata W^m_l = Z'(ω^m_l),
/// l = 1..min(n, m). For n = 1 the single entry is V^m_1 ≅ CP^{m-1}.
std::vector<Stratum> cutlocus_stratification(int n, int m);

/// Random plane with dim(X ∩ O^⊥) = l exactly (almost surely), O = base_point.
/// The frame has l Gaussian rows inside O^⊥ and n - l unrestricted Gaussian rows;
/// strata have measure zero, so rejection sampling would never reach them.
CMatrix sample_stratum_frame(int n, int m, int l, Rng& rng);
Plane sample_stratum(int n, int m, int l, Rng& rng);

}  // namespace grasscut
