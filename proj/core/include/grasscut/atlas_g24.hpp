#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grasscut/pluecker.hpp"
#include "grasscut/subspaces.hpp"
#include "grasscut/types.hpp"

namespace grasscut::g24 {

// The six Pontrjagin charts of G_2(C^4). Chart k has the identity in the
// column pair listed below; the four free entries are read row by row.
enum class ChartId { V1, V2, V3, V4, V5, V6 };

inline constexpr std::array<ChartId, 6> kAllCharts = {ChartId::V1, ChartId::V2, ChartId::V3,
                                                      ChartId::V4, ChartId::V5, ChartId::V6};

/// 0-based identity columns: V1 {0,1}, V2 {0,2}, V3 {0,3}, V4 {1,2}, V5 {1,3}, V6 {2,3}.
std::array<int, 2> chart_columns(ChartId id);
std::string chart_name(ChartId id);
/// Coordinate letter used for the chart: a..f.
char chart_letter(ChartId id);

struct ChartCoords {
  ChartId chart = ChartId::V1;
  std::array<Complex, 4> c{};
};

/// Polynomial in the four chart coordinates with degree <= 2.
struct Monomial {
  double coeff = 0.0;
  std::array<int, 4> exponent{};
};

struct Polynomial {
  std::vector<Monomial> terms;

  [[nodiscard]] Complex evaluate(const std::array<Complex, 4>& c) const;
  [[nodiscard]] bool is_constant() const;
  /// e.g. "b1*b4 - b2*b3".
  [[nodiscard]] std::string to_string(char letter) const;
};

/// The 2 x 4 chart frame with the identity in the chart's columns.
CMatrix chart_frame_matrix(const ChartCoords& cc);
Plane chart_frame(const ChartCoords& cc);

/// Chart coordinates of X. Throws NotInChart when the chart's 2 x 2 column block is singular.
ChartCoords to_chart(const Plane& X, ChartId chart, const TolerancePolicy& tol = {});

/// The 2 x 2 minor of a chart frame on `cols`, expanded symbolically.
Polynomial chart_minor_polynomial(ChartId chart, std::array<int, 2> cols);

/// Non-vanishing condition for passing from `source` to `target`: the minor of
/// the source frame on the target's identity columns.
Polynomial transition_condition(ChartId source, ChartId target);

/// Change of chart. Self-transition is the identity. Throws OutsideOverlap when
/// |transition_condition| <= tol.zero_tol.
ChartCoords transition(const ChartCoords& cc, ChartId target, const TolerancePolicy& tol = {});

/// Plücker coordinates (p12, p13, p14, p23, p24, p34) of the chart frame. V1 and
/// V6 use their closed forms; V2..V5 are minors of the frame.
PlueckerPoint pluecker_from_chart(const ChartCoords& cc);

/// Local equations of the polar divisor of O = span(e1, e2) in one chart:
/// the p12 minor, or an empty list when it is a nonzero constant (chart V1).
std::vector<Polynomial> polar_divisor_local(ChartId chart);

/// True iff the chart has local equations and all vanish below tol.
bool divisor_local_member(const ChartCoords& cc, double tol = 1e-8);

/// The point (0,0,0,0,0,1), image of span(e3, e4).
PlueckerPoint vertex_point();

struct ConeAnalysis {
  bool on_hyperplane = false;  // p12 = 0
  bool on_quadric = false;     // p14 p23 - p13 p24 = 0
  bool is_vertex = false;      // projectively (0,0,0,0,0,1)
};

ConeAnalysis cone_analysis(const PlueckerPoint& p, double tol = 1e-8);

/// Gradient (f4, -f3, -f2, f1) of the V6 equation f1 f4 - f2 f3.
std::array<Complex, 4> v6_quadric_gradient(const std::array<Complex, 4>& f);

/// Singularity witness contrasting the polar divisor with a general hyperplane section.
struct BertiniReport {
  bool vertex_in_polar_divisor = false;
  bool vertex_is_ortho_complement = false;
  std::array<Complex, 4> vertex_gradient{};
  bool vertex_gradient_vanishes = false;
  std::array<Complex, 4> gradient_at_ones{};

  std::uint64_t seed = 0;
  int samples = 0;
  std::array<Complex, 6> section_coefficients{};
  // |h| at the unique zero of the section's gradient in V6; nonzero means the
  // section has no singular point in the chart.
  double critical_point_value = 0.0;
  double min_section_gradient_norm = 0.0;
  double max_section_residual = 0.0;
  int singular_section_points = 0;
};

/// Samples `samples` points of a random hyperplane section inside chart V6 and
/// records how close its gradient comes to vanishing.
BertiniReport bertini_witness(std::uint64_t seed = 20240607, int samples = 10000);

}  // namespace grasscut::g24
