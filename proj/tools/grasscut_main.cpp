// grasscut: randomized verification campaigns for the polar divisor / cut locus
// identity on complex projective spaces and Grassmannians.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 configuration or I/O error.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "grasscut/harness.hpp"

int main(int argc, char** argv) {
  using namespace grasscut;

  CLI::App app{"Verify that the polar divisor of a coherent state equals the cut locus"};
  app.set_version_flag("--version", tool_version());

  std::string campaign = "all";
  CampaignConfig cfg;
  std::string format = "json";
  std::optional<double> tol;
  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  app.add_option("campaign", campaign, "cpn | polar-vs-cutlocus | cauchy | wong | atlas | all")
      ->required();
  app.add_option("--n", cfg.n, "Plane dimension n (forced to 1 for cpn)");
  app.add_option("--m", cfg.m, "Codimension m (ambient dimension is n + m)");
  app.add_option("--trials", cfg.trials, "Trials per campaign");
  app.add_option("--seed", cfg.seed, "Master seed (u64)");
  app.add_option("--tol", tol, "Membership tolerance (default 1e-8 or GRASSCUT_DEFAULT_TOL)");
  app.add_option("--format", format, "Report format: json | csv");
  app.add_option("--out", cfg.out_path, "Report path (stdout when omitted)");
  app.add_option("--threads", cfg.threads, "Worker threads; never changes the report");
  app.add_flag("--timing", cfg.include_timing, "Include wall time in the JSON aggregate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto parsed = parse_campaign(campaign);
    if (!parsed) throw Error(ErrorKind::ConfigError, "unknown campaign '" + campaign + "'");
    const auto fmt = parse_format(format);
    if (!fmt) throw Error(ErrorKind::ConfigError, "unknown format '" + format + "'");
    cfg.campaign = *parsed;
    cfg.format = *fmt;
    cfg.tol = tol ? *tol : default_tolerance();

    const Report report = run_campaign(cfg);
    emit_report(report, cfg.format, cfg.out_path);

    const auto& a = report.aggregate;
    std::cerr << campaign_name(cfg.campaign) << ": " << a.pass << " pass, " << a.fail << " fail, "
              << a.skipped << " skipped, max residual " << a.max_residual << ", "
              << a.wall_time_seconds << " s\n";
    return exit_code(report);
  } catch (const Error& e) {
    std::cerr << "grasscut: " << e.what() << '\n';
    if (e.kind() == ErrorKind::ConfigError || e.kind() == ErrorKind::IoError) return 2;
    return 1;
  }
}
