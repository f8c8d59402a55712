// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Usage: acceptance_tests [path-to-grasscut]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "grasscut/atlas_g24.hpp"
#include "grasscut/coherent.hpp"
#include "grasscut/geodesics.hpp"
#include "grasscut/harness.hpp"
#include "grasscut/pluecker.hpp"
#include "grasscut/schubert.hpp"
#include "grasscut/subspaces.hpp"

using namespace grasscut;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Pinned tolerances and budgets.
constexpr double kCpnResidualTol = 1e-8;
constexpr double kCpnBudgetSeconds = 5.0;
constexpr double kCutTol = 1e-8;
constexpr double kCutBand = 10.0 * kCutTol;
constexpr double kEquivalenceBudgetSeconds = 20.0;
constexpr double kCauchyTol = 1e-9;
constexpr double kLocalFormRelTol = 1e-9;
constexpr double kQuadricTol = 1e-10;
constexpr double kMembershipTol = 1e-8;
constexpr double kRoundTripTol = 1e-8;
constexpr double kCutHitTol = 1e-6;
constexpr double kMonotoneSlack = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// sin of the largest principal angle, stable near zero.
double projector_gap(const Plane& X, const Plane& Y) {
  const CMatrix d = X.projector() - Y.projector();
  return d.jacobiSvd().singularValues()(0);
}

bool all_three(const CutVerdict& v) { return v.by_overlap && v.by_distance && v.by_rank; }
bool none_of_three(const CutVerdict& v) { return !v.by_overlap && !v.by_distance && !v.by_rank; }

Outcome ac1_cpn() {
  const auto start = Clock::now();
  Outcome out;
  int wrong = 0;
  double worst = 0.0;
  for (int m : {2, 4}) {
    Rng rng = Rng::stream(101, "ac1", static_cast<std::uint64_t>(m));
    const Plane O = base_point(1, m + 1);
    for (int k = 0; k < 500; ++k) {
      // Constructed point of H_1: first homogeneous coordinate zero.
      CMatrix h = rng.gaussian(1, m + 1);
      h(0, 0) = 0.0;
      const Plane H = plane_new(h);
      const CutVerdict v = cut_locus_member(H, O, kCpnResidualTol);
      worst = std::max({worst, v.overlap_magnitude, std::abs(v.fs_angle - kHalfPi)});
      if (!all_three(v) || !hyperplane_membership(embed(H), Hyperplane{0}, kCpnResidualTol)) ++wrong;

      const Plane G = random_plane(1, m + 1, rng);
      const CutVerdict g = cut_locus_member(G, O, kCpnResidualTol);
      if (!none_of_three(g) || hyperplane_membership(embed(G), Hyperplane{0}, kCpnResidualTol)) ++wrong;
    }
  }
  const double elapsed = seconds_since(start);
  out.pass = wrong == 0 && worst < kCpnResidualTol && elapsed < kCpnBudgetSeconds;
  out.detail = fmt("misclassified=%d max_residual=%.3g time=%.3fs", wrong, worst, elapsed);
  return out;
}

Outcome ac2_theorem() {
  const auto start = Clock::now();
  int disagreements = 0;
  int in_band = 0;
  int misclassified = 0;
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
    Rng rng = Rng::stream(202, "ac2", static_cast<std::uint64_t>(10 * n + m));
    const Plane O = base_point(n, n + m);
    const auto judge = [&](const Plane& X, bool expect_member) {
      const CutVerdict v = cut_locus_member(X, O, kCutTol);
      if (!v.agree()) {
        if (std::abs(v.max_principal_angle - kHalfPi) <= kCutBand) {
          ++in_band;
        } else {
          ++disagreements;
        }
      } else if (v.by_rank != expect_member) {
        ++misclassified;
      }
    };
    for (int k = 0; k < 1000; ++k) judge(random_plane(n, n + m, rng), false);
    for (int k = 0; k < 1000; ++k) {
      const int l = 1 + k % std::min(n, m);
      judge(sample_stratum(n, m, l, rng), true);
    }
  }
  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = disagreements == 0 && misclassified == 0 && elapsed < kEquivalenceBudgetSeconds;
  out.detail = fmt("disagreements=%d in_band=%d misclassified=%d time=%.3fs", disagreements, in_band,
                   misclassified, elapsed);
  return out;
}

Outcome ac3_cauchy() {
  double worst_abs = 0.0;
  double worst_rel = 0.0;
  for (auto [n, m] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{2, 3}}) {
    Rng rng = Rng::stream(303, "ac3", static_cast<std::uint64_t>(10 * n + m));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < 1000; ++k) {
      const Plane X = random_plane(n, n + m, rng);
      const Plane Y = random_plane(n, n + m, rng);
      const Complex gram = overlap(X, Y).value;
      const Complex embedded = pluecker_inner(embed(X), embed(Y));
      worst_abs = std::max(worst_abs, std::abs(gram - embedded));

      const CMatrix Z = rng.gaussian(n, m);
      const CMatrix Zp = rng.gaussian(n, m);
      const Complex local = overlap_pontrjagin(Z, Zp);
      const Complex global =
          overlap_frames(pontrjagin_frame({sigma, Zp}), pontrjagin_frame({sigma, Z})).value;
      worst_rel = std::max(worst_rel, std::abs(local - global) / std::abs(global));
    }
  }
  Outcome out;
  out.pass = worst_abs < kCauchyTol && worst_rel < kLocalFormRelTol;
  out.detail = fmt("max_abs=%.3g max_local_rel=%.3g", worst_abs, worst_rel);
  return out;
}

Outcome ac4_g24() {
  using namespace grasscut::g24;
  Rng rng = Rng::stream(404, "ac4", 0);
  const Plane O = base_point(2, 4);
  const Plane perp = ortho_complement(O);
  std::vector<std::string> failures;
  double worst_quadric = 0.0;
  const auto note = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  const auto quadric = [&](const CMatrix& frame) {
    worst_quadric = std::max(worst_quadric, quadric_residual_g24(embed_frame(frame)));
  };
  const auto random_cc = [&](ChartId id) {
    ChartCoords cc{id, {}};
    for (auto& z : cc.c) z = rng.complex_normal();
    return cc;
  };

  // V1 misses the polar divisor.
  int v1_hits = 0;
  for (int k = 0; k < 10000; ++k) {
    ChartCoords cc{ChartId::V1, {}};
    const double scale = std::pow(10.0, -3.0 + 6.0 * rng.uniform());
    for (auto& z : cc.c) z = scale * rng.complex_normal();
    const CMatrix f = chart_frame_matrix(cc);
    quadric(f);
    if (polar_divisor_member(plane_new(f), O, kMembershipTol)) ++v1_hits;
  }
  note(v1_hits == 0, "V1 meets polar divisor");

  // V2: b3 = 0 iff in the polar divisor, checked in both directions.
  int v2_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    ChartCoords on = random_cc(ChartId::V2);
    on.c[2] = 0.0;
    const CMatrix f_on = chart_frame_matrix(on);
    quadric(f_on);
    if (!polar_divisor_member(plane_new(f_on), O, kMembershipTol)) ++v2_bad;

    const ChartCoords off = random_cc(ChartId::V2);
    if (polar_divisor_member(chart_frame(off), O, kMembershipTol)) ++v2_bad;

    const Plane member = sample_stratum(2, 2, 1, rng);
    try {
      const ChartCoords local = to_chart(member, ChartId::V2);
      if (std::abs(local.c[2]) > kMembershipTol * (1.0 + std::abs(local.c[0]) + std::abs(local.c[3]))) {
        ++v2_bad;
      }
    } catch (const Error&) {
      // Outside V2 altogether; says nothing about the local equation.
    }
  }
  note(v2_bad == 0, "V2 local equation");

  // V6: f1 f4 - f2 f3 = 0 iff in the polar divisor.
  int v6_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    ChartCoords on = random_cc(ChartId::V6);
    on.c[3] = on.c[1] * on.c[2] / on.c[0];
    const CMatrix f_on = chart_frame_matrix(on);
    quadric(f_on);
    if (!polar_divisor_member(plane_new(f_on), O, kMembershipTol)) ++v6_bad;
    if (!divisor_local_member(on, kMembershipTol)) ++v6_bad;

    const ChartCoords off = random_cc(ChartId::V6);
    if (polar_divisor_member(chart_frame(off), O, kMembershipTol)) ++v6_bad;

    const Plane member = sample_stratum(2, 2, 1, rng);
    const ChartCoords local = to_chart(member, ChartId::V6);
    const auto& f = local.c;
    const double scale = 1.0 + std::abs(f[0] * f[3]) + std::abs(f[1] * f[2]);
    if (std::abs(f[0] * f[3] - f[1] * f[2]) > kMembershipTol * scale) ++v6_bad;
  }
  note(v6_bad == 0, "V6 local equation");

  // Generic embedded points.
  for (int k = 0; k < 1000; ++k) quadric(random_plane(2, 4, rng).basis());
  note(worst_quadric < kQuadricTol, "quadric residual");

  // The vertex: gradient vanishes there and nowhere else on the cone samples.
  const auto grad0 = v6_quadric_gradient({0.0, 0.0, 0.0, 0.0});
  bool vertex_ok = std::all_of(grad0.begin(), grad0.end(), [](Complex z) { return z == 0.0; });
  const Plane vertex_plane = chart_frame({ChartId::V6, {}});
  vertex_ok = vertex_ok && plane_equal(vertex_plane, perp) &&
              projective_equal(embed(vertex_plane), vertex_point()) &&
              cone_analysis(embed(vertex_plane)).is_vertex;
  for (int k = 0; k < 1000; ++k) {
    ChartCoords on = random_cc(ChartId::V6);
    on.c[3] = on.c[1] * on.c[2] / on.c[0];
    double g = 0.0;
    for (Complex z : v6_quadric_gradient(on.c)) g += std::norm(z);
    if (g == 0.0) vertex_ok = false;
  }
  note(vertex_ok, "vertex");

  // Decomposition into W^2_1 and the vertex, on samples of each intersection dimension.
  int decomposition_bad = 0;
  for (int k = 0; k < 999; ++k) {
    const int l = k % 3;
    const Plane X = sample_stratum(2, 2, l, rng);
    const bool in_sigma0 = polar_divisor_member(X, O, kMembershipTol);
    const int dim = intersection_dim(X, perp);
    const bool in_w21 = dim == 1;
    const bool is_vertex = plane_equal(X, perp);
    const bool ok = dim == l && in_sigma0 == (l >= 1) && (!in_sigma0 || (in_w21 != is_vertex));
    if (!ok) ++decomposition_bad;
  }
  note(decomposition_bad == 0, "decomposition");

  Outcome out;
  out.pass = failures.empty();
  std::ostringstream os;
  os << fmt("v1_hits=%d v2_bad=%d v6_bad=%d max_quadric=%.3g decomposition_bad=%d", v1_hits, v2_bad,
            v6_bad, worst_quadric, decomposition_bad);
  for (const auto& f : failures) os << " [" << f << "]";
  out.detail = os.str();
  return out;
}

Outcome ac5_wong() {
  int wrong = 0;
  int samples = 0;
  bool codim_ok = true;
  for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}}) {
    Rng rng = Rng::stream(505, "ac5", static_cast<std::uint64_t>(10 * n + m));
    const Plane O = base_point(n, n + m);
    const Flag flag = standard_flag_adapted(O);
    const auto strata = cutlocus_stratification(n, m);
    codim_ok = codim_ok && codim(symbol_Vpl(m, 1, n, m)) == 1;
    for (int l = 0; l <= std::min(n, m); ++l) {
      for (int k = 0; k < 200; ++k) {
        const Plane X = sample_stratum(n, m, l, rng);
        int hits = 0;
        bool right = false;
        for (const auto& s : strata) {
          if (stratum_member(X, s.symbol, flag)) {
            ++hits;
            right = s.intersection_dim == l;
          }
        }
        // l = 0 is the complement of the cut locus and belongs to no stratum.
        const bool ok = l == 0 ? hits == 0 : (hits == 1 && right);
        if (!ok) ++wrong;
        ++samples;
      }
    }
  }
  Outcome out;
  out.pass = wrong == 0 && codim_ok;
  out.detail = fmt("samples=%d misplaced=%d codim_top_is_1=%s", samples, wrong, codim_ok ? "yes" : "no");
  return out;
}

Outcome ac6_geodesics() {
  Rng rng = Rng::stream(606, "ac6", 0);
  const std::vector<std::pair<int, int>> shapes = {{1, 3}, {2, 2}, {2, 3}, {3, 2}};
  double worst_round_trip = 0.0;
  int round_trips = 0;
  while (round_trips < 1000) {
    const auto [n, m] = shapes[static_cast<std::size_t>(round_trips) % shapes.size()];
    const Plane O = base_point(n, n + m);
    const Plane X = random_plane(n, n + m, rng);
    if (cut_locus_member(X, O, kCutTol).by_rank) continue;
    const Plane back = exp_geodesic(O, log_geodesic(O, X), 1.0);
    worst_round_trip = std::max(worst_round_trip, projector_gap(back, X));
    ++round_trips;
  }

  double worst_hit = 0.0;
  int non_monotone = 0;
  for (int k = 0; k < 100; ++k) {
    const auto [n, m] = shapes[static_cast<std::size_t>(k) % shapes.size()];
    const Plane O = base_point(n, n + m);
    const Tangent B{rng.gaussian(n, m)};
    const double tc = cut_time(B);
    worst_hit = std::max(worst_hit,
                         std::abs(principal_angles(O, exp_geodesic(O, B, tc)).back() - kHalfPi));
    const auto po = embed(O);
    double prev = 0.0;
    for (int j = 1; j <= 100; ++j) {
      const double d = fs_distance(po, embed(exp_geodesic(O, B, tc * j / 100.0)));
      if (d < prev - kMonotoneSlack) ++non_monotone;
      prev = d;
    }
  }
  Outcome out;
  out.pass = worst_round_trip < kRoundTripTol && worst_hit < kCutHitTol && non_monotone == 0;
  out.detail = fmt("round_trip_max=%.3g cut_hit_max=%.3g non_monotone=%d", worst_round_trip, worst_hit,
                   non_monotone);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome ac7_determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    // No binary given: exercise the same code path in-process.
    CampaignConfig cfg;
    cfg.campaign = Campaign::All;
    cfg.seed = 42;
    const std::string a = render_report(run_campaign(cfg), ReportFormat::Json);
    const std::string b = render_report(run_campaign(cfg), ReportFormat::Json);
    out.pass = a == b;
    out.detail = fmt("in-process bytes=%zu identical=%s", a.size(), out.pass ? "yes" : "no");
    return out;
  }
  const auto dir = std::filesystem::temp_directory_path() / "grasscut_acceptance";
  std::filesystem::create_directories(dir);
  const auto first = dir / "run1.json";
  const auto second = dir / "run2.json";
  int status = 0;
  for (const auto& path : {first, second}) {
    const std::string cmd = "\"" + cli + "\" all --seed 42 --out \"" + path.string() + "\" 2>/dev/null";
    status |= std::system(cmd.c_str());
  }
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  out.pass = status == 0 && !a.empty() && a == b;
  out.detail = fmt("cli bytes=%zu identical=%s exit_status=%d", a.size(), a == b ? "yes" : "no", status);
  std::filesystem::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "cpn-cut-locus", ac1_cpn},
      {"AC2", "polar-divisor-equals-cut-locus", ac2_theorem},
      {"AC3", "cauchy-formula", ac3_cauchy},
      {"AC4", "g24-worked-example", ac4_g24},
      {"AC5", "wong-stratification", ac5_wong},
      {"AC6", "geodesic-consistency", ac6_geodesics},
      {"AC7", "determinism", [&] { return ac7_determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
