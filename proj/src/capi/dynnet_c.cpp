#include "dynnet/dynnet.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/estimator.hpp"
#include "core/job.hpp"
#include "core/panel_io.hpp"
#include "core/types.hpp"

using namespace dynnet;

struct dynnet_panel {
  TimeSeriesPanel panel;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dynnet_status capture_error() {
  try {
    throw;
  } catch (const ConfigError& e) {
    g_last_error = e.what();
    return DYNNET_CONFIG_ERROR;
  } catch (const DataError& e) {
    g_last_error = e.what();
    return DYNNET_DATA_ERROR;
  } catch (const NumericError& e) {
    g_last_error = e.what();
    return DYNNET_NUMERIC_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DYNNET_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return DYNNET_INTERNAL_ERROR;
  }
}

RunConfig run_config_from_json(const nlohmann::json& doc) {
  // Reuse the job parser for validation; wrap the run keys in a test job.
  nlohmann::json job = doc;
  job["mode"] = "test";
  job["input"] = "<memory>";
  return parse_job(job).run;
}

}  // namespace

extern "C" {

const char* dynnet_version(void) { return "1.0.0"; }

const char* dynnet_last_error(void) { return g_last_error.c_str(); }

void dynnet_string_free(char* s) { std::free(s); }

dynnet_status dynnet_panel_load(const char* path, dynnet_panel** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return DYNNET_CONFIG_ERROR;
  }
  *out = nullptr;
  try {
    auto holder = new dynnet_panel{load_panel(path)};
    *out = holder;
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

dynnet_status dynnet_panel_create(const double* values, int64_t rows, int64_t cols,
                                  const char* const* time_labels,
                                  const char* const* series_names, dynnet_panel** out) {
  if (!values || !out) {
    g_last_error = "null argument";
    return DYNNET_CONFIG_ERROR;
  }
  *out = nullptr;
  try {
    TimeSeriesPanel panel;
    if (rows < 1 || cols < 2)
      throw ConfigError("panel needs at least 1 row and 2 columns");
    panel.values.resize(rows, cols);
    for (int64_t r = 0; r < rows; ++r)
      for (int64_t c = 0; c < cols; ++c) panel.values(r, c) = values[r * cols + c];
    panel.time_labels.reserve(rows);
    for (int64_t r = 0; r < rows; ++r)
      panel.time_labels.push_back(time_labels ? time_labels[r] : std::to_string(r + 1));
    panel.series_names.reserve(cols);
    for (int64_t c = 0; c < cols; ++c)
      panel.series_names.push_back(series_names ? series_names[c]
                                                : "x" + std::to_string(c + 1));
    validate_panel(panel);
    *out = new dynnet_panel{std::move(panel)};
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

int64_t dynnet_panel_rows(const dynnet_panel* panel) {
  return panel ? panel->panel.rows() : 0;
}

int64_t dynnet_panel_cols(const dynnet_panel* panel) {
  return panel ? panel->panel.cols() : 0;
}

dynnet_status dynnet_panel_annualize(dynnet_panel* panel) {
  if (!panel) {
    g_last_error = "null panel";
    return DYNNET_CONFIG_ERROR;
  }
  try {
    panel->panel = annualize_rv(panel->panel);
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

dynnet_status dynnet_panel_write(const dynnet_panel* panel, const char* path) {
  if (!panel || !path) {
    g_last_error = "null argument";
    return DYNNET_CONFIG_ERROR;
  }
  try {
    write_panel(panel->panel, path);
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

void dynnet_panel_free(dynnet_panel* panel) { delete panel; }

dynnet_status dynnet_job_run(const char* job_json, const char* out_dir,
                             char** summary_json) {
  if (summary_json) *summary_json = nullptr;
  if (!job_json || !out_dir) {
    g_last_error = "null argument";
    return DYNNET_CONFIG_ERROR;
  }
  try {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(job_json);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("job config is not valid JSON: ") + e.what());
    }
    const JobSpec spec = parse_job(doc);
    const nlohmann::json summary = run_job(spec, out_dir);
    if (summary_json) *summary_json = dup_string(summary.dump());
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

dynnet_status dynnet_estimate_point(const dynnet_panel* panel, const char* run_json,
                                    int focal_time, char** result_json) {
  if (result_json) *result_json = nullptr;
  if (!panel || !run_json) {
    g_last_error = "null argument";
    return DYNNET_CONFIG_ERROR;
  }
  try {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(run_json);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("run config is not valid JSON: ") + e.what());
    }
    RunConfig run = run_config_from_json(doc);
    run.time_grid = {focal_time};
    const EstimationResult result = run_estimation(panel->panel, run);
    const TimePointEstimate& point = result.points.at(0);

    nlohmann::json out;
    out["time"] = point.s;
    out["time_label"] = point.time_label;
    out["unstable_draws"] = point.unstable_draws;
    nlohmann::json bands = nlohmann::json::array();
    for (std::size_t b = 0; b < point.bands.size(); ++b) {
      const auto& m = point.bands[b];
      nlohmann::json jb;
      jb["name"] = result.partition.bands[b].name;
      auto summary = [](const PosteriorSummary& s) {
        return nlohmann::json{{"median", s.median}, {"q025", s.q025}, {"q975", s.q975}};
      };
      jb["total"] = summary(m.total);
      nlohmann::json from = nlohmann::json::object(), to = nlohmann::json::object(),
                     net = nlohmann::json::object();
      for (std::size_t i = 0; i < result.node_names.size(); ++i) {
        from[result.node_names[i]] = summary(m.from[i]);
        to[result.node_names[i]] = summary(m.to[i]);
        net[result.node_names[i]] = summary(m.net[i]);
      }
      jb["from"] = std::move(from);
      jb["to"] = std::move(to);
      jb["net"] = std::move(net);
      bands.push_back(std::move(jb));
    }
    out["bands"] = std::move(bands);
    nlohmann::json tests = nlohmann::json::array();
    for (const auto& test : point.tests) {
      nlohmann::json jt;
      jt["band_a"] = result.partition.bands[test.band_a].name;
      jt["band_b"] = result.partition.bands[test.band_b].name;
      jt["statistic"] = test.wald.statistic;
      jt["nse"] = test.wald.nse;
      jt["reject_5pct"] = test.wald.reject_5pct;
      jt["degenerate"] = test.wald.degenerate;
      jt["prob_a_gt_b"] = test.prob_a_gt_b;
      tests.push_back(std::move(jt));
    }
    out["tests"] = std::move(tests);
    if (result_json) *result_json = dup_string(out.dump());
    return DYNNET_OK;
  } catch (...) {
    return capture_error();
  }
}

}  // extern "C"
