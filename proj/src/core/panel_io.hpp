#pragma once

#include <string>

#include "core/types.hpp"

namespace dynnet {

// CSV layout: header row "time,<name1>,...,<nameN>", one row per observation,
// time label in column 1. Rows with any missing cell are dropped with a
// warning on stderr. An optional leading "# ..." comment line is skipped.
TimeSeriesPanel load_panel(const std::string& path);
TimeSeriesPanel parse_panel_csv(const std::string& text, const std::string& origin);
void write_panel(const TimeSeriesPanel& panel, const std::string& path);
std::string render_panel_csv(const TimeSeriesPanel& panel);

// Annualization transform for realized-variance panels: x -> 100*sqrt(252*x).
TimeSeriesPanel annualize_rv(const TimeSeriesPanel& panel);

void validate_panel(const TimeSeriesPanel& panel);

}  // namespace dynnet
