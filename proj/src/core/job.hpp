#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/estimator.hpp"
#include "core/mc_study.hpp"
#include "core/types.hpp"

namespace dynnet {

// One run request: mode plus the full run configuration, as parsed from the
// flat job JSON (config file keys and CLI flags share this layout).
struct JobSpec {
  std::string mode;  // estimate | mc-study | test
  std::string input;
  std::string dgp = "II";
  int n_sims = 1;
  int length = 1000;  // simulated panel length (mc-study)
  bool annualize = false;
  bool logvol_zero_mean = false;
  double noise_scale = 1.0;
  std::string bands_text;  // period syntax, e.g. "1:5,5:inf"; empty = default
  std::vector<int> tracking_times;
  RunConfig run;
};

JobSpec parse_job(const nlohmann::json& doc);

// Fully defaulted, key-sorted echo of the job; hashed into the manifest.
nlohmann::json canonical_job_json(const JobSpec& spec);

// Executes the job and writes its artifacts under out_dir (created if
// needed); nothing is written until all computation succeeded. Returns the
// machine-readable run summary.
nlohmann::json run_job(const JobSpec& spec, const std::string& out_dir);

// Report renderers (exposed for tests).
std::string render_connectedness_csv(const EstimationResult& result, const std::string& hash);
std::string render_tests_csv(const EstimationResult& result, const std::string& hash);
std::string render_probabilities_csv(const EstimationResult& result, const std::string& hash);
nlohmann::json study_report_json(const StudyReport& report, const std::string& hash);

}  // namespace dynnet
