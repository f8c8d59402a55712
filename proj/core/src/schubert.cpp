#include "grasscut/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace grasscut {

std::vector<int> SchubertSymbol::sigma() const {
  std::vector<int> out(omega_.size());
  for (std::size_t i = 0; i < omega_.size(); ++i) out[i] = omega_[i] + static_cast<int>(i) + 1;
  return out;
}

SchubertSymbol symbol_new(std::vector<int> omega, int n, int m) {
  if (n < 1 || m < 0 || static_cast<int>(omega.size()) != n) {
    throw Error(ErrorKind::Malformed, "symbol must have exactly n >= 1 entries");
  }
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i] < 0 || omega[i] > m) throw Error(ErrorKind::Malformed, "entry outside [0, m]");
    if (i > 0 && omega[i] < omega[i - 1]) throw Error(ErrorKind::Malformed, "symbol not monotone");
  }
  return SchubertSymbol(std::move(omega), m);
}

std::vector<int> jump_indices(const SchubertSymbol& s) {
  std::vector<int> out;
  const int n = s.n();
  for (int i = 1; i < n; ++i) {
    if (s.omega_at(i) < s.omega_at(i + 1)) out.push_back(i);
  }
  out.push_back(n);
  return out;
}

Flag::Flag(CMatrix unitary_rows) : rows_(std::move(unitary_rows)) {
  if (rows_.rows() != rows_.cols() || rows_.rows() < 2) {
    throw Error(ErrorKind::WrongShape, "flag matrix must be square of size >= 2");
  }
  const auto N = rows_.rows();
  if ((rows_ * rows_.adjoint() - CMatrix::Identity(N, N)).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "flag rows must be orthonormal");
  }
}

Plane Flag::level(int k) const {
  if (k < 1 || k >= ambient()) throw Error(ErrorKind::InvalidArgument, "flag level out of range");
  return Plane::from_orthonormal(rows_.topRows(k));
}

int Flag::meet_dim(const Plane& X, int k, const TolerancePolicy& tol) const {
  if (X.ambient() != ambient()) throw Error(ErrorKind::WrongShape, "flag and plane ambient differ");
  if (k <= 0) return 0;
  if (k >= ambient()) return X.dim();
  return intersection_dim(X, level(k), tol);
}

bool Flag::nested(const TolerancePolicy& tol) const {
  for (int k = 1; k + 1 < ambient(); ++k) {
    if (intersection_dim(level(k), level(k + 1), tol) != k) return false;
  }
  return true;
}

Flag standard_flag_adapted(const Plane& O) {
  const int n = O.dim();
  const int N = O.ambient();
  if (!plane_equal(O, base_point(n, N), 1e-12)) {
    throw Error(ErrorKind::InvalidArgument, "standard_flag_adapted expects base_point(n, N)");
  }
  CMatrix rows = CMatrix::Zero(N, N);
  // O^⊥ first, then O, each in coordinate order.
  for (int k = 0; k < N - n; ++k) rows(k, n + k) = 1.0;
  for (int j = 0; j < n; ++j) rows(N - n + j, j) = 1.0;
  return Flag(std::move(rows));
}

bool variety_member(const Plane& X, const SchubertSymbol& s, const Flag& f,
                    const TolerancePolicy& tol) {
  if (X.dim() != s.n() || X.codim() != s.m()) {
    throw Error(ErrorKind::WrongShape, "symbol and plane dimensions differ");
  }
  for (int i = 1; i <= s.n(); ++i) {
    if (f.meet_dim(X, s.sigma_at(i), tol) < i) return false;
  }
  return true;
}

bool stratum_member(const Plane& X, const SchubertSymbol& s, const Flag& f,
                    const TolerancePolicy& tol) {
  if (X.dim() != s.n() || X.codim() != s.m()) {
    throw Error(ErrorKind::WrongShape, "symbol and plane dimensions differ");
  }
  for (int ih : jump_indices(s)) {
    if (f.meet_dim(X, s.sigma_at(ih), tol) != ih) return false;
  }
  return true;
}

SchubertSymbol symbol_Vpl(int p, int l, int n, int m) {
  if (l < 0 || l > std::min(n, p) || p > m) {
    throw Error(ErrorKind::Malformed, "omega^p_l needs 0 <= l <= min(n, p) and p <= m");
  }
  std::vector<int> omega(static_cast<std::size_t>(n), m);
  std::fill_n(omega.begin(), l, p - l);
  return symbol_new(std::move(omega), n, m);
}

int codim(const SchubertSymbol& s) {
  return s.n() * s.m() - std::accumulate(s.omega().begin(), s.omega().end(), 0);
}

std::vector<Stratum> cutlocus_stratification(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "n and m must be positive");
  const auto num = [](int v) { return std::to_string(v); };
  std::vector<Stratum> out;
  if (n == 1) {
    out.push_back({symbol_Vpl(m, 1, n, m), 1, "V^" + num(m) + "_1 = CP^" + num(m - 1)});
    return out;
  }
  const int r = std::min(n, m);
  for (int l = 1; l <= r; ++l) {
    std::string desc = "W^" + num(m) + "_" + num(l) + ": dim(X cap O^perp) = " + num(l);
    if (l == r) {
      desc += n == m ? ", the single point O^perp"
                     : ", isomorphic to G_" + num(r) + "(C^" + num(std::max(m, n)) + ")";
    }
    out.push_back({symbol_Vpl(m, l, n, m), l, std::move(desc)});
  }
  return out;
}

CMatrix sample_stratum_frame(int n, int m, int l, Rng& rng) {
  if (n < 1 || m < 1 || l < 0 || l > std::min(n, m)) {
    throw Error(ErrorKind::InvalidArgument, "stratum sample needs 0 <= l <= min(n, m)");
  }
  CMatrix frame = rng.gaussian(n, n + m);
  frame.topLeftCorner(l, n).setZero();
  return frame;
}

Plane sample_stratum(int n, int m, int l, Rng& rng) {
  return plane_new(sample_stratum_frame(n, m, l, rng));
}

}  // namespace grasscut
