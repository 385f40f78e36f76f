#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetamoments/gamma.hpp"
#include "zetamoments/json_io.hpp"
#include "zetamoments/lemma_audit.hpp"
#include "zetamoments/zeros.hpp"

namespace zm {

struct CampaignConfig {
  double t_max = 1000.0;
  std::vector<double> k_list;
  std::vector<int> ell_list;
  std::vector<Complex> alpha_list;
  XPolicy x_policy = XPolicy::tau_squared_log;
  double x_explicit = 0.0;
  std::uint64_t seed = 1;
  int lemma_samples = 64;
  int cauchy_samples = 64;
  double continuous_step = 0.01;
  std::string output_dir;  // informational; writing is left to the caller
};

// k in {1, 2}, ell in {1, 2}, alpha in {1/log T, -1/log T, i/log T}.
CampaignConfig default_campaign(double t_max);

// Throws ErrorCode::precondition naming the first offending entry.
void validate_campaign(const CampaignConfig& c);

struct AuditOutcome {
  std::string audit_name;
  double fitted_constant = 0.0;
  double max_violation = 0.0;  // 0 when the inequality holds with constant 1
  long sample_count = 0;
  std::string notes;
  Json metrics = Json::object();
};

// Runs every audit for the configuration. A failing audit yields an outcome
// with a note instead of aborting. `cache` may be null (a sweep is run) or
// must cover t_max.
std::vector<AuditOutcome> run_campaign(const CampaignConfig& config, const ZeroCache* cache = nullptr);

Json campaign_report(const CampaignConfig& config, const std::vector<AuditOutcome>& outcomes, long zeros_used);
std::string campaign_report_string(const CampaignConfig& config, const std::vector<AuditOutcome>& outcomes,
                                   long zeros_used);

struct ReportDiffEntry {
  std::string audit_name;
  std::string field;
  double a = 0.0;
  double b = 0.0;
  double rel_diff = 0.0;
  bool drift = false;
};

struct GrowthRow {
  std::string audit_name;
  double t_a = 0.0;
  double t_b = 0.0;
  double ratio_a = 0.0;
  double ratio_b = 0.0;
  // log(ratio_b / ratio_a) / log(log t_b / log t_a)
  double exponent = 0.0;
};

struct ReportDiff {
  std::vector<ReportDiffEntry> entries;  // differing fields only
  std::vector<std::string> only_in_a;
  std::vector<std::string> only_in_b;
  std::vector<GrowthRow> growth;  // J_k rows, when the heights differ
  bool empty() const { return entries.empty() && only_in_a.empty() && only_in_b.empty(); }
};

constexpr double report_drift_tolerance = 1e-9;

// Throws ErrorCode::schema for malformed reports or mismatched versions.
Json parse_report(const std::string& text);
ReportDiff compare_reports(const std::string& text_a, const std::string& text_b);
ReportDiff compare_report_files(const std::string& path_a, const std::string& path_b);
Json to_json(const ReportDiff& d);

}  // namespace zm
