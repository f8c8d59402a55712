#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grasscut/types.hpp"

namespace grasscut {

enum class Campaign { Cpn, PolarVsCutlocus, Cauchy, Wong, Atlas, All };
enum class ReportFormat { Json, Csv };
enum class Verdict { Pass, Fail, Skipped };

std::string_view campaign_name(Campaign c) noexcept;
std::optional<Campaign> parse_campaign(std::string_view name) noexcept;
std::string_view format_name(ReportFormat f) noexcept;
std::optional<ReportFormat> parse_format(std::string_view name) noexcept;
std::string_view verdict_name(Verdict v) noexcept;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kBuiltinDefaultTol = 1e-8;
inline constexpr int kMaxAmbientDim = 12;

/// Default tolerance: GRASSCUT_DEFAULT_TOL when set and parseable, else 1e-8.
/// Throws ConfigError when the variable is set to something unusable.
double default_tolerance();

struct CampaignConfig {
  Campaign campaign = Campaign::All;
  int n = 2;
  int m = 2;
  int trials = 1000;
  std::uint64_t seed = 42;
  double tol = kBuiltinDefaultTol;
  ReportFormat format = ReportFormat::Json;
  std::string out_path;  // empty: stdout
  int threads = 1;
  bool include_timing = false;  // wall time breaks byte-for-byte reproducibility

  /// Applies the forced shapes (cpn: n = 1; atlas: n = m = 2) and validates.
  /// Throws ConfigError.
  [[nodiscard]] CampaignConfig normalized() const;
};

struct CheckRecord {
  std::string campaign;
  std::string check_id;
  int n = 0;
  int m = 0;
  std::uint64_t trial = 0;
  std::string inputs_digest;
  double residual = 0.0;   // deviation from the identity under test
  double magnitude = 0.0;  // raw thresholded quantity, kept for offline audits
  Verdict verdict = Verdict::Pass;
};

struct Aggregate {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  double max_residual = 0.0;
  double wall_time_seconds = 0.0;
};

struct Report {
  CampaignConfig config;
  std::vector<CheckRecord> records;
  Aggregate aggregate;
  std::string tool_version;
};

/// Recomputes the aggregate from the records (wall time is left untouched).
Aggregate aggregate_records(const std::vector<CheckRecord>& records);

/// Runs a campaign. Output depends only on (campaign, n, m, trials, seed, tol);
/// thread count never changes the records. Throws ConfigError.
Report run_campaign(const CampaignConfig& cfg);

/// The exact bytes emit_report writes.
std::string render_report(const Report& r, ReportFormat format);

/// Writes the report to `path`, or stdout when path is empty or "-". Throws IoError.
void emit_report(const Report& r, ReportFormat format, const std::string& path);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const Report& r) noexcept;

std::string tool_version();

}  // namespace grasscut
