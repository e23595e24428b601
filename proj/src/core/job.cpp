#include "core/job.hpp"

#include <filesystem>
#include <set>
#include <sstream>

#include "core/bands.hpp"
#include "core/errors.hpp"
#include "core/manifest.hpp"
#include "core/numfmt.hpp"
#include "core/panel_io.hpp"

namespace dynnet {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "mode",      "input",      "dgp",
      "sims",      "length",     "annualize",
      "logvol_zero_mean",        "noise_scale",
      "bands",     "tracking_times",
      "lags",      "truncation", "bandwidth",
      "bandwidth_scale",         "draws",
      "shrinkage", "first_lag_prior_mean",
      "seed",      "workers",    "times"};
  return keys;
}

template <typename T>
T get_or(const nlohmann::json& doc, const std::string& key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

}  // namespace

JobSpec parse_job(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("job config must be a JSON object");
  for (const auto& item : doc.items())
    if (!known_keys().count(item.key()))
      throw ConfigError("unknown config key '" + item.key() + "'");

  JobSpec spec;
  spec.mode = get_or<std::string>(doc, "mode", "");
  if (spec.mode != "estimate" && spec.mode != "mc-study" && spec.mode != "test")
    throw ConfigError("mode must be one of estimate, mc-study, test (got '" + spec.mode +
                      "')");
  spec.input = get_or<std::string>(doc, "input", "");
  spec.dgp = get_or<std::string>(doc, "dgp", spec.dgp);
  spec.n_sims = get_or<int>(doc, "sims", spec.n_sims);
  spec.length = get_or<int>(doc, "length", spec.length);
  spec.annualize = get_or<bool>(doc, "annualize", spec.annualize);
  spec.logvol_zero_mean = get_or<bool>(doc, "logvol_zero_mean", spec.logvol_zero_mean);
  spec.noise_scale = get_or<double>(doc, "noise_scale", spec.noise_scale);
  spec.bands_text = get_or<std::string>(doc, "bands", spec.bands_text);
  spec.tracking_times = get_or<std::vector<int>>(doc, "tracking_times", {});

  spec.run.lag_order = get_or<int>(doc, "lags", spec.run.lag_order);
  spec.run.truncation = get_or<int>(doc, "truncation", spec.run.truncation);
  spec.run.bandwidth = get_or<double>(doc, "bandwidth", spec.run.bandwidth);
  spec.run.bandwidth_scale = get_or<double>(doc, "bandwidth_scale", spec.run.bandwidth_scale);
  spec.run.n_draws = get_or<int>(doc, "draws", spec.run.n_draws);
  spec.run.shrinkage = get_or<double>(doc, "shrinkage", spec.run.shrinkage);
  spec.run.first_lag_prior_mean =
      get_or<double>(doc, "first_lag_prior_mean", spec.run.first_lag_prior_mean);
  spec.run.seed = get_or<std::uint64_t>(doc, "seed", spec.run.seed);
  spec.run.workers = get_or<int>(doc, "workers", spec.run.workers);
  spec.run.time_grid = get_or<std::vector<int>>(doc, "times", {});

  if (spec.run.lag_order < 1) throw ConfigError("lags must be at least 1");
  if (spec.run.truncation < 2) throw ConfigError("truncation must be at least 2");
  if (spec.run.bandwidth <= 0) throw ConfigError("bandwidth must be positive");
  if (spec.run.bandwidth_scale <= 0) throw ConfigError("bandwidth_scale must be positive");
  if (spec.run.n_draws < 1) throw ConfigError("draws must be positive");
  if (spec.run.shrinkage <= 0) throw ConfigError("shrinkage must be positive");
  if (spec.n_sims < 1) throw ConfigError("sims must be at least 1");
  if (spec.noise_scale < 0) throw ConfigError("noise_scale must be nonnegative");

  if (!spec.bands_text.empty()) spec.run.bands = parse_band_specs(spec.bands_text);

  if (spec.mode == "mc-study") {
    parse_dgp_id(spec.dgp);  // validate before any compute
  } else if (spec.input.empty()) {
    throw ConfigError("mode " + spec.mode + " requires an input panel path");
  }
  return spec;
}

nlohmann::json canonical_job_json(const JobSpec& spec) {
  nlohmann::json j;
  j["mode"] = spec.mode;
  j["input"] = spec.input;
  j["dgp"] = spec.dgp;
  j["sims"] = spec.n_sims;
  j["length"] = spec.length;
  j["annualize"] = spec.annualize;
  j["logvol_zero_mean"] = spec.logvol_zero_mean;
  j["noise_scale"] = spec.noise_scale;
  j["bands"] = spec.bands_text;
  j["tracking_times"] = spec.tracking_times;
  j["lags"] = spec.run.lag_order;
  j["truncation"] = spec.run.truncation;
  j["bandwidth"] = spec.run.bandwidth;
  j["bandwidth_scale"] = spec.run.bandwidth_scale;
  j["draws"] = spec.run.n_draws;
  j["shrinkage"] = spec.run.shrinkage;
  j["first_lag_prior_mean"] = spec.run.first_lag_prior_mean;
  j["seed"] = spec.run.seed;
  j["workers"] = spec.run.workers;
  j["times"] = spec.run.time_grid;
  return j;
}

namespace {

void append_summary_row(std::ostringstream& out, const std::string& time,
                        const std::string& band, const std::string& measure,
                        const std::string& node, const PosteriorSummary& s) {
  out << time << ',' << band << ',' << measure << ',' << node << ','
      << format_double(s.median) << ',' << format_double(s.q025) << ','
      << format_double(s.q975) << '\n';
}

}  // namespace

std::string render_connectedness_csv(const EstimationResult& result,
                                     const std::string& hash) {
  std::ostringstream out;
  out << "# manifest_hash=" << hash << '\n';
  out << "time,band,measure,node,median,q025,q975\n";
  const int N = static_cast<int>(result.node_names.size());
  for (const auto& point : result.points) {
    for (std::size_t b = 0; b < point.bands.size(); ++b) {
      const std::string& band = result.partition.bands[b].name;
      const auto& m = point.bands[b];
      append_summary_row(out, point.time_label, band, "total", "", m.total);
      for (int i = 0; i < N; ++i)
        append_summary_row(out, point.time_label, band, "from", result.node_names[i],
                           m.from[i]);
      for (int i = 0; i < N; ++i)
        append_summary_row(out, point.time_label, band, "to", result.node_names[i], m.to[i]);
      for (int i = 0; i < N; ++i)
        append_summary_row(out, point.time_label, band, "net", result.node_names[i],
                           m.net[i]);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j) continue;
          append_summary_row(out, point.time_label, band, "pairwise",
                             result.node_names[i] + ">" + result.node_names[j],
                             m.pairwise[i][j]);
        }
    }
  }
  return out.str();
}

std::string render_tests_csv(const EstimationResult& result, const std::string& hash) {
  std::ostringstream out;
  out << "# manifest_hash=" << hash << '\n';
  out << "time,band_a,band_b,statistic,nse,reject_5pct,prob_a_gt_b\n";
  for (const auto& point : result.points) {
    for (const auto& test : point.tests) {
      out << point.time_label << ',' << result.partition.bands[test.band_a].name << ','
          << result.partition.bands[test.band_b].name << ','
          << format_double(test.wald.statistic) << ',' << format_double(test.wald.nse)
          << ','
          << (test.wald.degenerate ? "degenerate" : (test.wald.reject_5pct ? "true" : "false"))
          << ',' << format_double(test.prob_a_gt_b) << '\n';
    }
  }
  return out.str();
}

std::string render_probabilities_csv(const EstimationResult& result,
                                     const std::string& hash) {
  std::ostringstream out;
  out << "# manifest_hash=" << hash << '\n';
  out << "time,band_a,band_b,prob_a_gt_b\n";
  for (const auto& point : result.points)
    for (const auto& test : point.tests)
      out << point.time_label << ',' << result.partition.bands[test.band_a].name << ','
          << result.partition.bands[test.band_b].name << ','
          << format_double(test.prob_a_gt_b) << '\n';
  return out.str();
}

nlohmann::json study_report_json(const StudyReport& report, const std::string& hash) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["manifest_hash"] = hash;
  j["dgp"] = report.dgp;
  j["sims"] = report.n_sims;
  j["bands"] = report.band_names;
  j["regenerations"] = report.regenerations;
  j["unstable_draws"] = report.unstable_draws;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : report.table) {
    nlohmann::json r;
    r["u"] = row.u;
    r["fitted"] = row.fitted;
    r["true_fraction"] = row.true_fraction;
    r["per_sim_fitted"] = row.per_sim_fitted;
    table.push_back(std::move(r));
  }
  j["probability_table"] = std::move(table);
  if (!report.tracking_times.empty()) {
    nlohmann::json tracking;
    tracking["times"] = report.tracking_times;
    nlohmann::json bands = nlohmann::json::array();
    for (const auto& band : report.tracking) {
      nlohmann::json b;
      b["name"] = band.name;
      b["true_median"] = band.true_median;
      b["median"] = band.median;
      b["q025"] = band.q025;
      b["q975"] = band.q975;
      b["coverage"] = band.coverage;
      bands.push_back(std::move(b));
    }
    tracking["bands"] = std::move(bands);
    j["tracking"] = std::move(tracking);
  }
  return j;
}

nlohmann::json run_job(const JobSpec& spec, const std::string& out_dir) {
  const nlohmann::json canonical = canonical_job_json(spec);
  const std::string hash = manifest_hash(canonical);

  struct Pending {
    std::string name;
    std::string content;
  };
  std::vector<Pending> files;
  nlohmann::json summary;
  summary["mode"] = spec.mode;
  summary["manifest_hash"] = hash;

  if (spec.mode == "mc-study") {
    DgpConfig dgp;
    dgp.id = parse_dgp_id(spec.dgp);
    dgp.length = spec.length;
    dgp.seed = spec.run.seed;
    dgp.errors = default_error_family(dgp.id);
    dgp.zero_mean_logvol = spec.logvol_zero_mean;
    dgp.noise_scale = spec.noise_scale;
    StudyOptions options;
    options.n_sims = spec.n_sims;
    options.table_times = spec.run.time_grid.empty() ? std::vector<int>{400, 650, 1000}
                                                     : spec.run.time_grid;
    options.tracking_times = spec.tracking_times;
    const StudyReport report = run_mc_study(dgp, spec.run, options);
    files.push_back({"study_report.json", study_report_json(report, hash).dump(2) + "\n"});
    nlohmann::json table = nlohmann::json::array();
    for (const auto& row : report.table) {
      nlohmann::json r;
      r["u"] = row.u;
      r["fitted"] = row.fitted;
      r["true_fraction"] = row.true_fraction;
      table.push_back(std::move(r));
    }
    summary["dgp"] = report.dgp;
    summary["probability_table"] = std::move(table);
    summary["regenerations"] = report.regenerations;
  } else {
    TimeSeriesPanel panel = load_panel(spec.input);
    if (spec.annualize) panel = annualize_rv(panel);
    const EstimationResult result = run_estimation(panel, spec.run);
    if (spec.mode == "estimate")
      files.push_back({"connectedness.csv", render_connectedness_csv(result, hash)});
    files.push_back({"tests.csv", render_tests_csv(result, hash)});
    files.push_back({"probabilities.csv", render_probabilities_csv(result, hash)});
    summary["time_points"] = result.points.size();
    summary["bands"] = result.partition.bands.size();
    summary["unstable_draws"] = result.unstable_draws;
  }

  std::vector<std::string> names;
  for (const auto& f : files) names.push_back(f.name);
  names.push_back("manifest.json");
  const nlohmann::json manifest = build_manifest(canonical, names);

  std::filesystem::create_directories(out_dir);
  for (const auto& f : files)
    write_text_file((std::filesystem::path(out_dir) / f.name).string(), f.content);
  write_text_file((std::filesystem::path(out_dir) / "manifest.json").string(),
                  manifest.dump(2) + "\n");

  summary["out_dir"] = out_dir;
  summary["outputs"] = names;
  summary["status"] = "ok";
  return summary;
}

}  // namespace dynnet
