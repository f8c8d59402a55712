#include "grasscut/atlas_g24.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "grasscut/coherent.hpp"
#include "grasscut/rng.hpp"

namespace grasscut::g24 {

namespace {

std::vector<int> sigma_of(ChartId id) {
  const auto cols = chart_columns(id);
  return {cols[0], cols[1]};
}

// One entry of a chart frame: a constant or a single coordinate variable.
struct Entry {
  double constant = 0.0;
  int var = -1;
};

std::array<std::array<Entry, 4>, 2> symbolic_frame(ChartId id) {
  std::array<std::array<Entry, 4>, 2> f{};
  const auto cols = chart_columns(id);
  const auto free = complement_columns({cols[0], cols[1]}, 4);
  for (int r = 0; r < 2; ++r) {
    f[r][cols[r]] = {1.0, -1};
    f[r][free[0]] = {0.0, 2 * r};
    f[r][free[1]] = {0.0, 2 * r + 1};
  }
  return f;
}

// Product of two entries as a monomial (or nothing when it is zero).
std::optional<Monomial> multiply(const Entry& x, const Entry& y, double sign) {
  Monomial mono;
  mono.coeff = sign;
  for (const Entry* e : {&x, &y}) {
    if (e->var >= 0) {
      ++mono.exponent[e->var];
    } else {
      mono.coeff *= e->constant;
    }
  }
  if (mono.coeff == 0.0) return std::nullopt;
  return mono;
}

}  // namespace

std::array<int, 2> chart_columns(ChartId id) {
  switch (id) {
    case ChartId::V1: return {0, 1};
    case ChartId::V2: return {0, 2};
    case ChartId::V3: return {0, 3};
    case ChartId::V4: return {1, 2};
    case ChartId::V5: return {1, 3};
    case ChartId::V6: return {2, 3};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown chart");
}

std::string chart_name(ChartId id) { return "V" + std::to_string(static_cast<int>(id) + 1); }

char chart_letter(ChartId id) { return static_cast<char>('a' + static_cast<int>(id)); }

Complex Polynomial::evaluate(const std::array<Complex, 4>& c) const {
  Complex total = 0.0;
  for (const auto& t : terms) {
    Complex v = t.coeff;
    for (int k = 0; k < 4; ++k) {
      for (int e = 0; e < t.exponent[k]; ++e) v *= c[k];
    }
    total += v;
  }
  return total;
}

bool Polynomial::is_constant() const {
  return std::all_of(terms.begin(), terms.end(), [](const Monomial& t) {
    return std::all_of(t.exponent.begin(), t.exponent.end(), [](int e) { return e == 0; });
  });
}

std::string Polynomial::to_string(char letter) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const double mag = std::abs(t.coeff);
    os << (t.coeff < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::string body;
    for (int k = 0; k < 4; ++k) {
      for (int e = 0; e < t.exponent[k]; ++e) {
        if (!body.empty()) body += "*";
        body += letter + std::to_string(k + 1);
      }
    }
    if (body.empty()) {
      os << mag;
    } else {
      if (mag != 1.0) os << mag << "*";
      os << body;
    }
    first = false;
  }
  return os.str();
}

CMatrix chart_frame_matrix(const ChartCoords& cc) {
  CMatrix Z(2, 2);
  Z << cc.c[0], cc.c[1], cc.c[2], cc.c[3];
  return pontrjagin_frame({sigma_of(cc.chart), Z});
}

Plane chart_frame(const ChartCoords& cc) { return plane_new(chart_frame_matrix(cc)); }

ChartCoords to_chart(const Plane& X, ChartId chart, const TolerancePolicy& tol) {
  if (X.dim() != 2 || X.ambient() != 4) throw Error(ErrorKind::WrongShape, "expected G_2(C^4)");
  const PontrjaginCoords pc = plane_to_pontrjagin(X, sigma_of(chart), tol);
  return {chart, {pc.Z(0, 0), pc.Z(0, 1), pc.Z(1, 0), pc.Z(1, 1)}};
}

Polynomial chart_minor_polynomial(ChartId chart, std::array<int, 2> cols) {
  const auto f = symbolic_frame(chart);
  // det = f[0][c0] f[1][c1] - f[0][c1] f[1][c0], with like terms merged.
  std::map<std::array<int, 4>, double> acc;
  for (const auto& [x, y, sign] : {std::tuple{f[0][cols[0]], f[1][cols[1]], 1.0},
                                   std::tuple{f[0][cols[1]], f[1][cols[0]], -1.0}}) {
    if (auto mono = multiply(x, y, sign)) acc[mono->exponent] += mono->coeff;
  }
  Polynomial p;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (it->second != 0.0) p.terms.push_back({it->second, it->first});
  }
  return p;
}

Polynomial transition_condition(ChartId source, ChartId target) {
  return chart_minor_polynomial(source, chart_columns(target));
}

ChartCoords transition(const ChartCoords& cc, ChartId target, const TolerancePolicy& tol) {
  if (cc.chart == target) return cc;
  const Complex condition = transition_condition(cc.chart, target).evaluate(cc.c);
  if (std::abs(condition) <= tol.zero_tol) {
    throw Error(ErrorKind::OutsideOverlap, chart_name(cc.chart) + " -> " + chart_name(target) +
                                               " requires " +
                                               transition_condition(cc.chart, target)
                                                   .to_string(chart_letter(cc.chart)) +
                                               " != 0");
  }
  const CMatrix frame = chart_frame_matrix(cc);
  const auto cols = chart_columns(target);
  const auto free = complement_columns({cols[0], cols[1]}, 4);
  CMatrix block(2, 2);
  CMatrix rest(2, 2);
  for (int j = 0; j < 2; ++j) {
    block.col(j) = frame.col(cols[j]);
    rest.col(j) = frame.col(free[static_cast<std::size_t>(j)]);
  }
  const CMatrix Z = block.inverse() * rest;
  return {target, {Z(0, 0), Z(0, 1), Z(1, 0), Z(1, 1)}};
}

PlueckerPoint pluecker_from_chart(const ChartCoords& cc) {
  const auto& c = cc.c;
  CVector p(6);
  switch (cc.chart) {
    case ChartId::V1:
      p << 1.0, c[2], c[3], -c[0], -c[1], c[0] * c[3] - c[1] * c[2];
      return {2, 4, p};
    case ChartId::V6:
      p << c[0] * c[3] - c[2] * c[1], -c[2], c[0], -c[3], c[1], 1.0;
      return {2, 4, p};
    default:
      return embed_frame(chart_frame_matrix(cc));
  }
}

std::vector<Polynomial> polar_divisor_local(ChartId chart) {
  Polynomial p12 = chart_minor_polynomial(chart, {0, 1});
  if (p12.is_constant() && !p12.terms.empty()) return {};
  return {std::move(p12)};
}

bool divisor_local_member(const ChartCoords& cc, double tol) {
  const auto eqs = polar_divisor_local(cc.chart);
  if (eqs.empty()) return false;
  return std::all_of(eqs.begin(), eqs.end(),
                     [&](const Polynomial& p) { return std::abs(p.evaluate(cc.c)) < tol; });
}

PlueckerPoint vertex_point() {
  CVector p = CVector::Zero(6);
  p(5) = 1.0;
  return {2, 4, p};
}

ConeAnalysis cone_analysis(const PlueckerPoint& p, double tol) {
  if (p.n != 2 || p.N != 4 || p.coords.size() != 6) {
    throw Error(ErrorKind::WrongShape, "cone analysis is defined on G_2(C^4) only");
  }
  const double norm = p.coords.norm();
  const auto& q = p.coords;
  ConeAnalysis out;
  out.on_hyperplane = std::abs(q(0)) / norm < tol;
  out.on_quadric = std::abs(q(2) * q(3) - q(1) * q(4)) / (norm * norm) < tol;
  out.is_vertex = projective_equal(p, vertex_point(), tol);
  return out;
}

std::array<Complex, 4> v6_quadric_gradient(const std::array<Complex, 4>& f) {
  return {f[3], -f[2], -f[1], f[0]};
}

BertiniReport bertini_witness(std::uint64_t seed, int samples) {
  BertiniReport rep;
  rep.seed = seed;
  rep.samples = samples;

  const Plane O = base_point(2, 4);
  const Plane vertex = chart_frame({ChartId::V6, {}});
  rep.vertex_in_polar_divisor = polar_divisor_member(vertex, O);
  rep.vertex_is_ortho_complement = plane_equal(vertex, ortho_complement(O));
  rep.vertex_gradient = v6_quadric_gradient({0.0, 0.0, 0.0, 0.0});
  rep.vertex_gradient_vanishes = std::all_of(rep.vertex_gradient.begin(), rep.vertex_gradient.end(),
                                             [](Complex z) { return z == 0.0; });
  rep.gradient_at_ones = v6_quadric_gradient({1.0, 1.0, 1.0, 1.0});

  // Section sum_S c_S p_S(f) = 0 restricted to V6, where
  // p(f) = (f1 f4 - f2 f3, -f3, f1, -f4, f2, 1). It is linear in f4.
  Rng rng(seed);
  auto& c = rep.section_coefficients;
  for (auto& ci : c) ci = rng.complex_normal();

  // The only point of V6 where all four partials vanish; the section is
  // smooth there iff it does not pass through it.
  if (std::abs(c[0]) > 0.0) {
    const Complex f1 = c[3] / c[0], f2 = -c[1] / c[0], f3 = c[4] / c[0], f4 = -c[2] / c[0];
    rep.critical_point_value = std::abs(c[0] * (f1 * f4 - f2 * f3) - c[1] * f3 + c[2] * f1 -
                                        c[3] * f4 + c[4] * f2 + c[5]);
  }

  rep.min_section_gradient_norm = std::numeric_limits<double>::infinity();
  int accepted = 0;
  while (accepted < samples) {
    const Complex f1 = rng.complex_normal();
    const Complex f2 = rng.complex_normal();
    const Complex f3 = rng.complex_normal();
    const Complex slope = c[0] * f1 - c[3];
    if (std::abs(slope) < 1e-6) continue;
    const Complex rest = -c[0] * f2 * f3 - c[1] * f3 + c[2] * f1 + c[4] * f2 + c[5];
    const Complex f4 = -rest / slope;

    const Complex h = c[0] * (f1 * f4 - f2 * f3) - c[1] * f3 + c[2] * f1 - c[3] * f4 +
                      c[4] * f2 + c[5];
    const std::array<Complex, 4> grad = {c[0] * f4 + c[2], -c[0] * f3 + c[4],
                                         -c[0] * f2 - c[1], c[0] * f1 - c[3]};
    double gnorm = 0.0;
    for (Complex g : grad) gnorm += std::norm(g);
    gnorm = std::sqrt(gnorm);

    const double scale = 1.0 + std::abs(f4);
    rep.max_section_residual = std::max(rep.max_section_residual, std::abs(h) / scale);
    rep.min_section_gradient_norm = std::min(rep.min_section_gradient_norm, gnorm);
    if (gnorm < 1e-8) ++rep.singular_section_points;
    ++accepted;
  }
  return rep;
}

}  // namespace grasscut::g24
