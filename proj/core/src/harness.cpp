#include "grasscut/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "grasscut/atlas_g24.hpp"
#include "grasscut/coherent.hpp"
#include "grasscut/geodesics.hpp"
#include "grasscut/pluecker.hpp"
#include "grasscut/rng.hpp"
#include "grasscut/schubert.hpp"
#include "grasscut/subspaces.hpp"

#ifndef GRASSCUT_VERSION
#define GRASSCUT_VERSION "0.0.0"
#endif

namespace grasscut {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Fixed acceptance thresholds; `tol` from the config only drives membership.
constexpr double kIdentityTol = 1e-9;   // Cauchy formula, angle/overlap link, chart images
constexpr double kRoundTripTol = 1e-8;  // exp(log X) and cocycle coordinates
constexpr double kQuadricTol = 1e-10;   // Plücker relation on embedded points
constexpr double kBandWidth = 10.0;     // agreement band is kBandWidth * tol around pi/2

struct Shape {
  Campaign campaign;
  int n;
  int m;
};

struct TrialContext {
  Campaign campaign;
  int n;
  int m;
  double tol;
  std::uint64_t seed;
  std::string tag;  // stream family, also the record's campaign label
};

std::string digest(std::initializer_list<const CMatrix*> inputs) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const CMatrix* m : inputs) {
    for (Eigen::Index j = 0; j < m->cols(); ++j) {
      for (Eigen::Index i = 0; i < m->rows(); ++i) {
        for (double part : {(*m)(i, j).real(), (*m)(i, j).imag()}) {
          unsigned char bytes[sizeof(double)];
          std::memcpy(bytes, &part, sizeof(double));
          for (unsigned char b : bytes) {
            h ^= b;
            h *= 0x100000001B3ULL;
          }
        }
      }
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CheckRecord record(const TrialContext& ctx, std::string id, std::uint64_t trial, std::string dig,
                   double residual, double magnitude, Verdict verdict) {
  return {ctx.tag, std::move(id), ctx.n,    ctx.m,  trial,
          std::move(dig), residual, magnitude, verdict};
}

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

double product_of_cosines(const Plane& X, const Plane& Y) {
  double p = 1.0;
  for (double a : principal_angles(X, Y)) p *= std::cos(a);
  return p;
}

// Three-criterion judgement. Disagreements inside the band around pi/2 are
// numerical ties and are reported as skipped.
Verdict judge_cut(const CutVerdict& v, std::optional<bool> expected, bool extra_ok,
                  double residual, double tol) {
  const bool ok = v.agree() && (!expected || v.by_rank == *expected) && extra_ok &&
                  residual < kIdentityTol;
  if (ok) return Verdict::Pass;
  if (std::abs(v.max_principal_angle - kHalfPi) <= kBandWidth * tol) return Verdict::Skipped;
  return Verdict::Fail;
}

CheckRecord cut_record(const TrialContext& ctx, std::string id, std::uint64_t trial,
                       const CMatrix& frame, const Plane& O, std::optional<bool> expected,
                       bool also_hyperplane = false) {
  const Plane X = plane_new(frame);
  const CutVerdict v = cut_locus_member(X, O, ctx.tol);
  const double residual = std::abs(v.overlap_magnitude - product_of_cosines(O, X));
  bool extra_ok = true;
  if (also_hyperplane) {
    extra_ok = hyperplane_membership(embed(X), Hyperplane{0}, ctx.tol) == v.by_rank;
  }
  return record(ctx, std::move(id), trial, digest({&frame}), residual, v.overlap_magnitude,
                judge_cut(v, expected, extra_ok, residual, ctx.tol));
}

// --- campaigns -------------------------------------------------------------

std::vector<CheckRecord> cpn_trial(const TrialContext& ctx, std::uint64_t trial) {
  Rng rng = Rng::stream(ctx.seed, ctx.tag, trial);
  const Plane O = base_point(1, 1 + ctx.m);
  std::vector<CheckRecord> out;
  const CMatrix on_h1 = sample_stratum_frame(1, ctx.m, 1, rng);
  out.push_back(cut_record(ctx, "cpn.hyperplane", trial, on_h1, O, true, true));
  const CMatrix generic = rng.gaussian(1, 1 + ctx.m);
  out.push_back(cut_record(ctx, "cpn.generic", trial, generic, O, false, true));
  return out;
}

std::vector<CheckRecord> polar_trial(const TrialContext& ctx, std::uint64_t trial) {
  Rng rng = Rng::stream(ctx.seed, ctx.tag, trial);
  const int n = ctx.n;
  const int m = ctx.m;
  const Plane O = base_point(n, n + m);
  std::vector<CheckRecord> out;

  const CMatrix generic = rng.gaussian(n, n + m);
  out.push_back(cut_record(ctx, "cut.random", trial, generic, O, std::nullopt));

  const int l = 1 + static_cast<int>(trial % static_cast<std::uint64_t>(std::min(n, m)));
  const CMatrix member = sample_stratum_frame(n, m, l, rng);
  out.push_back(cut_record(ctx, "cut.sigma0.l" + std::to_string(l), trial, member, O, true));

  // exp(log X) = X on the complement of the cut locus.
  const Plane X = plane_new(generic);
  const auto angles = principal_angles(O, X);
  if (angles.back() >= kHalfPi - kBandWidth * ctx.tol) {
    out.push_back(record(ctx, "geo.exp_log", trial, digest({&generic}), 0.0, angles.back(),
                         Verdict::Skipped));
  } else {
    const Tangent B = log_geodesic(O, X, ctx.tol);
    const Plane back = exp_geodesic(O, B, 1.0);
    double residual = (back.projector() - X.projector()).cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<CMatrix> svd(B.B);
    for (std::size_t i = 0; i < angles.size() && i < static_cast<std::size_t>(svd.singularValues().size()); ++i) {
      residual = std::max(residual,
                          std::abs(svd.singularValues()(static_cast<Eigen::Index>(i)) -
                                   angles[angles.size() - 1 - i]));
    }
    out.push_back(record(ctx, "geo.exp_log", trial, digest({&generic}), residual, angles.back(),
                         pass_if(residual < kRoundTripTol)));
  }
  return out;
}

std::vector<CheckRecord> cauchy_trial(const TrialContext& ctx, std::uint64_t trial) {
  Rng rng = Rng::stream(ctx.seed, ctx.tag, trial);
  const int n = ctx.n;
  const int m = ctx.m;
  std::vector<CheckRecord> out;

  const CMatrix xf = rng.gaussian(n, n + m);
  const CMatrix yf = rng.gaussian(n, n + m);
  const Plane X = plane_new(xf);
  const Plane Y = plane_new(yf);
  const double residual = cauchy_check(X, Y);
  out.push_back(record(ctx, "cauchy.embedded", trial, digest({&xf, &yf}), residual,
                       std::abs(normalized_overlap(X, Y)), pass_if(residual < kIdentityTol)));

  const auto sets = index_sets(n, n + m);
  const auto& sigma = sets[static_cast<std::size_t>(rng.next_u64() % sets.size())];
  const CMatrix Z = rng.gaussian(n, m);
  const CMatrix Zp = rng.gaussian(n, m);
  const Complex local = overlap_pontrjagin(Z, Zp);
  const Complex gram = overlap_frames(pontrjagin_frame({sigma, Zp}), pontrjagin_frame({sigma, Z})).value;
  const double rel = std::abs(local - gram) / std::abs(gram);
  out.push_back(record(ctx, "cauchy.local_form", trial, digest({&Z, &Zp}), rel, std::abs(gram),
                       pass_if(rel < kIdentityTol)));
  return out;
}

std::vector<CheckRecord> wong_trial(const TrialContext& ctx, std::uint64_t trial) {
  Rng rng = Rng::stream(ctx.seed, ctx.tag, trial);
  const int n = ctx.n;
  const int m = ctx.m;
  const Plane O = base_point(n, n + m);
  const Flag flag = standard_flag_adapted(O);
  const auto strata = cutlocus_stratification(n, m);
  const SchubertSymbol top = symbol_Vpl(m, 1, n, m);
  std::vector<CheckRecord> out;

  if (trial == 0) {
    const int c = codim(top);
    out.push_back(record(ctx, "wong.codim", trial, "", std::abs(c - 1.0), c, pass_if(c == 1)));
  }

  for (int l = 1; l <= std::min(n, m); ++l) {
    const CMatrix frame = sample_stratum_frame(n, m, l, rng);
    const Plane X = plane_new(frame);
    int hits = 0;
    int hit_l = 0;
    for (const auto& s : strata) {
      if (stratum_member(X, s.symbol, flag)) {
        ++hits;
        hit_l = s.intersection_dim;
      }
    }
    const CutVerdict v = cut_locus_member(X, O, ctx.tol);
    const bool ok = hits == 1 && hit_l == l && variety_member(X, top, flag) && v.by_rank &&
                    v.by_overlap;
    out.push_back(record(ctx, "wong.stratum.l" + std::to_string(l), trial, digest({&frame}),
                         v.overlap_magnitude, hits, pass_if(ok)));
  }

  const CMatrix frame = rng.gaussian(n, n + m);
  const Plane X = plane_new(frame);
  int hits = 0;
  for (const auto& s : strata) hits += stratum_member(X, s.symbol, flag) ? 1 : 0;
  const bool in_variety = variety_member(X, top, flag);
  const CutVerdict v = cut_locus_member(X, O, ctx.tol);
  out.push_back(record(ctx, "wong.generic", trial, digest({&frame}),
                       in_variety == v.by_rank ? 0.0 : 1.0, v.overlap_magnitude,
                       pass_if(hits == 0 && !in_variety && !v.by_rank)));
  return out;
}

// Puts chart coordinates on the local polar-divisor equation.
g24::ChartCoords onto_divisor(g24::ChartCoords cc) {
  const auto eqs = g24::polar_divisor_local(cc.chart);
  const auto& terms = eqs.front().terms;
  if (terms.size() == 1) {
    for (int k = 0; k < 4; ++k) {
      if (terms.front().exponent[static_cast<std::size_t>(k)] == 1) cc.c[static_cast<std::size_t>(k)] = 0.0;
    }
  } else {
    cc.c[3] = cc.c[1] * cc.c[2] / cc.c[0];  // f1 f4 = f2 f3
  }
  return cc;
}

CMatrix coords_matrix(const g24::ChartCoords& cc) {
  CMatrix c(1, 4);
  c << cc.c[0], cc.c[1], cc.c[2], cc.c[3];
  return c;
}

std::vector<CheckRecord> atlas_trial(const TrialContext& ctx, std::uint64_t trial) {
  using namespace g24;
  Rng rng = Rng::stream(ctx.seed, ctx.tag, trial);
  const Plane O = base_point(2, 4);
  const CMatrix o_frame = CMatrix::Identity(2, 4);
  const Flag flag = standard_flag_adapted(O);
  const SchubertSymbol w21 = symbol_Vpl(2, 1, 2, 2);
  std::vector<CheckRecord> out;

  if (trial == 0) {
    const ConeAnalysis cone = cone_analysis(vertex_point(), ctx.tol);
    const Plane vertex_plane = chart_frame({ChartId::V6, {}});
    const bool ok = cone.on_hyperplane && cone.on_quadric && cone.is_vertex &&
                    plane_equal(vertex_plane, ortho_complement(O)) &&
                    polar_divisor_member(vertex_plane, O, ctx.tol) &&
                    projective_equal(embed(vertex_plane), vertex_point(), kIdentityTol);
    out.push_back(record(ctx, "atlas.vertex", trial, "", 0.0,
                         std::abs(normalized_overlap(O, vertex_plane)), pass_if(ok)));

    const BertiniReport b = bertini_witness(rng.next_u64(), 10000);
    const bool smooth = b.vertex_gradient_vanishes && b.vertex_in_polar_divisor &&
                        b.critical_point_value > 1e-6 && b.singular_section_points == 0 &&
                        b.max_section_residual < kIdentityTol;
    out.push_back(record(ctx, "atlas.bertini", trial, "", b.max_section_residual,
                         b.critical_point_value, pass_if(smooth)));
  }

  // V1 never meets the polar divisor: the unnormalized overlap is identically 1.
  {
    ChartCoords cc{ChartId::V1, {}};
    for (auto& z : cc.c) {
      const double r = 10.0 * std::sqrt(rng.uniform());
      const double phi = 2.0 * std::numbers::pi * rng.uniform();
      z = std::polar(r, phi);
    }
    const CMatrix frame = chart_frame_matrix(cc);
    const Complex ov = overlap_frames(o_frame, frame).value;
    const bool ok = !polar_divisor_member(chart_frame(cc), O, ctx.tol) && !divisor_local_member(cc, ctx.tol);
    const CMatrix cm = coords_matrix(cc);
    out.push_back(record(ctx, "atlas.v1_disjoint", trial, digest({&cm}), std::abs(ov - 1.0),
                         std::abs(normalized_overlap_frames(o_frame, frame)),
                         pass_if(ok && std::abs(ov - 1.0) < 1e-12)));
  }

  // Local equations in V2..V6 against the global overlap criterion.
  for (ChartId id : {ChartId::V2, ChartId::V3, ChartId::V4, ChartId::V5, ChartId::V6}) {
    ChartCoords generic{id, {}};
    for (auto& z : generic.c) z = rng.complex_normal();
    for (const bool on : {true, false}) {
      const ChartCoords cc = on ? onto_divisor(generic) : generic;
      const Plane X = chart_frame(cc);
      const PlueckerPoint p = pluecker_from_chart(cc);
      const bool global = polar_divisor_member(X, O, ctx.tol);
      const bool local = divisor_local_member(cc, ctx.tol);
      const bool h1 = hyperplane_membership(p, Hyperplane{0}, ctx.tol);
      bool ok = global == on && local == on && h1 == on;
      if (on) {
        const ConeAnalysis cone = cone_analysis(p, ctx.tol);
        ok = ok && cone.on_hyperplane && cone.on_quadric && !cone.is_vertex;
      }
      const double local_value = std::abs(polar_divisor_local(id).front().evaluate(cc.c));
      const double residual = std::abs(local_value - std::abs(p.coords(0)));
      const CMatrix cm = coords_matrix(cc);
      out.push_back(record(ctx, "atlas." + chart_name(id) + (on ? ".on" : ".off"), trial,
                           digest({&cm}), residual, std::abs(normalized_overlap(O, X)),
                           pass_if(ok && residual < kIdentityTol)));
    }
  }

  // Embedded points satisfy the Plücker quadric; every chart images the same point.
  {
    const CMatrix frame = rng.gaussian(2, 4);
    const Plane X = plane_new(frame);
    const PlueckerPoint px = embed(X);
    const double q = quadric_residual_g24(px);
    out.push_back(record(ctx, "atlas.quadric", trial, digest({&frame}), q, q,
                         pass_if(q < kQuadricTol)));

    double worst = 0.0;
    int charts_hit = 0;
    bool frames_ok = true;
    for (ChartId id : kAllCharts) {
      try {
        const ChartCoords cc = to_chart(X, id);
        ++charts_hit;
        worst = std::max(worst, fs_distance(pluecker_from_chart(cc), px));
        frames_ok = frames_ok && plane_equal(chart_frame(cc), X, kRoundTripTol);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInChart) throw;
      }
    }
    out.push_back(record(ctx, "atlas.charts", trial, digest({&frame}), worst, charts_hit,
                         pass_if(charts_hit >= 1 && frames_ok && worst < kIdentityTol)));

    const auto pick = [&rng] { return kAllCharts[static_cast<std::size_t>(rng.next_u64() % 6)]; };
    const ChartId i = pick();
    const ChartId j = pick();
    const ChartId k = pick();
    try {
      const ChartCoords ci = to_chart(X, i);
      const ChartCoords via = transition(transition(ci, j), k);
      const ChartCoords direct = transition(ci, k);
      double diff = 0.0;
      double scale = 1.0;
      for (std::size_t s = 0; s < 4; ++s) {
        diff = std::max(diff, std::abs(via.c[s] - direct.c[s]));
        scale = std::max(scale, std::abs(direct.c[s]));
      }
      const double residual = diff / scale;
      out.push_back(record(ctx, "atlas.cocycle." + chart_name(i) + chart_name(j) + chart_name(k),
                           trial, digest({&frame}), residual, scale,
                           pass_if(residual < kRoundTripTol)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInChart && e.kind() != ErrorKind::OutsideOverlap) throw;
      out.push_back(record(ctx, "atlas.cocycle", trial, digest({&frame}), 0.0, 0.0,
                           Verdict::Skipped));
    }
  }

  // Σ0 = W^2_1 ⊔ {vertex}, on samples of each intersection dimension.
  {
    const int l = static_cast<int>(trial % 3);
    const CMatrix frame = sample_stratum_frame(2, 2, l, rng);
    const Plane X = plane_new(frame);
    const bool in_sigma0 = polar_divisor_member(X, O, ctx.tol);
    const bool in_w21 = stratum_member(X, w21, flag);
    const bool vertex = cone_analysis(embed(X), ctx.tol).is_vertex;
    const bool ok = in_sigma0 == (in_w21 != vertex) && in_sigma0 == (l >= 1) &&
                    in_w21 == (l == 1) && vertex == (l == 2);
    out.push_back(record(ctx, "atlas.decomposition.l" + std::to_string(l), trial,
                         digest({&frame}), l >= 1 ? std::abs(normalized_overlap(O, X)) : 0.0,
                         std::abs(normalized_overlap(O, X)), pass_if(ok)));
  }
  return out;
}

using TrialFn = std::vector<CheckRecord> (*)(const TrialContext&, std::uint64_t);

TrialFn trial_function(Campaign c) {
  switch (c) {
    case Campaign::Cpn: return cpn_trial;
    case Campaign::PolarVsCutlocus: return polar_trial;
    case Campaign::Cauchy: return cauchy_trial;
    case Campaign::Wong: return wong_trial;
    case Campaign::Atlas: return atlas_trial;
    case Campaign::All: break;
  }
  throw Error(ErrorKind::ConfigError, "no trial function for this campaign");
}

std::vector<Shape> expand(const CampaignConfig& cfg) {
  if (cfg.campaign != Campaign::All) return {{cfg.campaign, cfg.n, cfg.m}};
  static constexpr std::pair<int, int> kSizes[] = {{1, 2}, {1, 4}, {2, 2}, {2, 3}};
  std::vector<Shape> out = {{Campaign::Cpn, 1, 2}, {Campaign::Cpn, 1, 4}};
  for (Campaign c : {Campaign::PolarVsCutlocus, Campaign::Cauchy, Campaign::Wong}) {
    for (auto [n, m] : kSizes) out.push_back({c, n, m});
  }
  out.push_back({Campaign::Atlas, 2, 2});
  return out;
}

std::vector<CheckRecord> run_shape(const Shape& shape, const CampaignConfig& cfg) {
  TrialContext ctx{shape.campaign, shape.n, shape.m, cfg.tol, cfg.seed,
                   std::string(campaign_name(shape.campaign)) + "/n" + std::to_string(shape.n) +
                       "/m" + std::to_string(shape.m)};
  const TrialFn fn = trial_function(shape.campaign);
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<CheckRecord>> per_trial(trials);

  const int workers = std::clamp(cfg.threads, 1, static_cast<int>(std::max<std::size_t>(trials, 1)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) per_trial[t] = fn(ctx, t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < trials; t = next++) {
            try {
              per_trial[t] = fn(ctx, t);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<CheckRecord> out;
  for (auto& recs : per_trial) {
    std::move(recs.begin(), recs.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

std::string_view campaign_name(Campaign c) noexcept {
  switch (c) {
    case Campaign::Cpn: return "cpn";
    case Campaign::PolarVsCutlocus: return "polar-vs-cutlocus";
    case Campaign::Cauchy: return "cauchy";
    case Campaign::Wong: return "wong";
    case Campaign::Atlas: return "atlas";
    case Campaign::All: return "all";
  }
  return "unknown";
}

std::optional<Campaign> parse_campaign(std::string_view name) noexcept {
  for (Campaign c : {Campaign::Cpn, Campaign::PolarVsCutlocus, Campaign::Cauchy, Campaign::Wong,
                     Campaign::Atlas, Campaign::All}) {
    if (campaign_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view format_name(ReportFormat f) noexcept {
  return f == ReportFormat::Json ? "json" : "csv";
}

std::optional<ReportFormat> parse_format(std::string_view name) noexcept {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

double default_tolerance() {
  const char* env = std::getenv("GRASSCUT_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return kBuiltinDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0 && v < 1e-2)) {
    throw Error(ErrorKind::ConfigError,
                std::string("GRASSCUT_DEFAULT_TOL must be a number in (0, 1e-2), got '") + env + "'");
  }
  return v;
}

CampaignConfig CampaignConfig::normalized() const {
  CampaignConfig c = *this;
  if (c.campaign == Campaign::Cpn) c.n = 1;
  if (c.campaign == Campaign::Atlas) c.n = c.m = 2;
  if (c.trials < 1) throw Error(ErrorKind::ConfigError, "trials must be at least 1");
  if (!(c.tol > 0.0 && c.tol < 1e-2)) throw Error(ErrorKind::ConfigError, "tol must lie in (0, 1e-2)");
  if (c.campaign != Campaign::All) {
    if (c.n < 1 || c.m < 1) throw Error(ErrorKind::ConfigError, "n and m must be at least 1");
    if (c.n + c.m > kMaxAmbientDim) {
      throw Error(ErrorKind::ConfigError,
                  "ambient dimension n + m must not exceed " + std::to_string(kMaxAmbientDim));
    }
  }
  if (c.threads < 1) c.threads = 1;
  return c;
}

Aggregate aggregate_records(const std::vector<CheckRecord>& records) {
  Aggregate a;
  a.total = records.size();
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::Pass: ++a.pass; break;
      case Verdict::Fail: ++a.fail; break;
      case Verdict::Skipped: ++a.skipped; break;
    }
    a.max_residual = std::max(a.max_residual, r.residual);
  }
  return a;
}

Report run_campaign(const CampaignConfig& cfg) {
  const CampaignConfig c = cfg.normalized();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.config = c;
  report.tool_version = tool_version();
  for (const Shape& shape : expand(c)) {
    auto recs = run_shape(shape, c);
    std::move(recs.begin(), recs.end(), std::back_inserter(report.records));
  }
  report.aggregate = aggregate_records(report.records);
  report.aggregate.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

int exit_code(const Report& r) noexcept { return r.aggregate.fail == 0 ? 0 : 1; }

std::string tool_version() { return std::string("grasscut ") + GRASSCUT_VERSION; }

}  // namespace grasscut
