#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "grasscut/harness.hpp"
#include "grasscut/rng.hpp"

namespace grasscut {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_json(const Report& r) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = r.tool_version;
  doc["rng"] = std::string(kRngName);

  // Output destination and thread count are deliberately not echoed: they do
  // not influence the records.
  ordered_json cfg;
  cfg["campaign"] = std::string(campaign_name(r.config.campaign));
  cfg["n"] = r.config.n;
  cfg["m"] = r.config.m;
  cfg["trials"] = r.config.trials;
  cfg["seed"] = r.config.seed;
  cfg["tol"] = r.config.tol;
  doc["config"] = std::move(cfg);

  ordered_json agg;
  agg["total"] = r.aggregate.total;
  agg["pass"] = r.aggregate.pass;
  agg["fail"] = r.aggregate.fail;
  agg["skipped"] = r.aggregate.skipped;
  agg["max_residual"] = r.aggregate.max_residual;
  if (r.config.include_timing) agg["wall_time_seconds"] = r.aggregate.wall_time_seconds;
  doc["aggregate"] = std::move(agg);

  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json j;
    j["campaign"] = rec.campaign;
    j["check"] = rec.check_id;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["trial"] = rec.trial;
    j["inputs_digest"] = rec.inputs_digest;
    j["residual"] = rec.residual;
    j["magnitude"] = rec.magnitude;
    j["verdict"] = std::string(verdict_name(rec.verdict));
    records.push_back(std::move(j));
  }
  doc["records"] = std::move(records);
  return doc.dump(1) + "\n";
}

std::string render_csv(const Report& r) {
  std::string out = "campaign,check,n,m,trial,inputs_digest,residual,magnitude,verdict\n";
  for (const auto& rec : r.records) {
    out += rec.campaign + ',' + rec.check_id + ',' + std::to_string(rec.n) + ',' +
           std::to_string(rec.m) + ',' + std::to_string(rec.trial) + ',' + rec.inputs_digest +
           ',' + number(rec.residual) + ',' + number(rec.magnitude) + ',' +
           std::string(verdict_name(rec.verdict)) + '\n';
  }
  return out;
}

}  // namespace

std::string render_report(const Report& r, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(r) : render_csv(r);
}

void emit_report(const Report& r, ReportFormat format, const std::string& path) {
  const std::string bytes = render_report(r, format);
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::IoError, "failed writing report to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) throw Error(ErrorKind::IoError, "failed writing report to '" + path + "'");
}

}  // namespace grasscut
