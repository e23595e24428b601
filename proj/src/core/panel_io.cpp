#include "core/panel_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "core/numfmt.hpp"

namespace dynnet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

void validate_panel(const TimeSeriesPanel& panel) {
  const auto T = panel.rows();
  const auto N = panel.cols();
  if (T < 1) throw DataError("panel has no observations");
  if (N < 2) throw DataError("panel needs at least 2 series, got " + std::to_string(N));
  if (static_cast<std::int64_t>(panel.time_labels.size()) != T)
    throw DataError("time label count does not match row count");
  if (static_cast<std::int64_t>(panel.series_names.size()) != N)
    throw DataError("series name count does not match column count");
  std::set<std::string> names(panel.series_names.begin(), panel.series_names.end());
  if (static_cast<std::int64_t>(names.size()) != N)
    throw DataError("duplicate series name in panel header");
  for (std::int64_t t = 0; t < T; ++t)
    for (std::int64_t j = 0; j < N; ++j)
      if (!std::isfinite(panel.values(t, j)))
        throw DataError("non-finite value in panel at row " + std::to_string(t + 1) +
                        ", series " + panel.series_names[j]);
}

TimeSeriesPanel parse_panel_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  // header (skip leading comment lines)
  do {
    if (!std::getline(in, line)) throw DataError(origin + ": empty file");
  } while (!line.empty() && line[0] == '#');
  auto header = split_csv_line(line);
  if (header.size() < 3)
    throw DataError(origin + ": header needs a time column plus at least 2 series");
  TimeSeriesPanel panel;
  for (size_t j = 1; j < header.size(); ++j) {
    std::string name = trim(header[j]);
    if (name.empty()) throw DataError(origin + ": empty series name in header");
    panel.series_names.push_back(name);
  }
  const size_t N = panel.series_names.size();
  std::vector<std::vector<double>> rows;
  size_t line_no = 1;
  size_t dropped = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != N + 1)
      throw DataError(origin + ": row " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(N + 1));
    bool missing = false;
    for (size_t j = 1; j < cells.size(); ++j)
      if (trim(cells[j]).empty()) missing = true;
    if (missing) {
      ++dropped;
      continue;
    }
    std::vector<double> row(N);
    for (size_t j = 0; j < N; ++j) {
      row[j] = parse_double(cells[j + 1], origin + " row " + std::to_string(line_no) +
                                              ", column " + panel.series_names[j]);
    }
    panel.time_labels.push_back(trim(cells[0]));
    rows.push_back(std::move(row));
  }
  if (dropped > 0)
    std::cerr << "warning: dropped " << dropped << " row(s) with missing cells from "
              << origin << "\n";
  panel.values.resize(static_cast<std::int64_t>(rows.size()), static_cast<std::int64_t>(N));
  for (size_t t = 0; t < rows.size(); ++t)
    for (size_t j = 0; j < N; ++j) panel.values(static_cast<std::int64_t>(t),
                                                static_cast<std::int64_t>(j)) = rows[t][j];
  validate_panel(panel);
  return panel;
}

TimeSeriesPanel load_panel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_panel_csv(buf.str(), path);
}

std::string render_panel_csv(const TimeSeriesPanel& panel) {
  std::ostringstream out;
  out << "time";
  for (const auto& name : panel.series_names) out << "," << name;
  out << "\n";
  for (std::int64_t t = 0; t < panel.rows(); ++t) {
    out << panel.time_labels[t];
    for (std::int64_t j = 0; j < panel.cols(); ++j)
      out << "," << format_double(panel.values(t, j));
    out << "\n";
  }
  return out.str();
}

void write_panel(const TimeSeriesPanel& panel, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << render_panel_csv(panel);
}

TimeSeriesPanel annualize_rv(const TimeSeriesPanel& panel) {
  TimeSeriesPanel out = panel;
  for (std::int64_t t = 0; t < panel.rows(); ++t)
    for (std::int64_t j = 0; j < panel.cols(); ++j) {
      double x = panel.values(t, j);
      if (x < 0)
        throw DataError("annualize requires nonnegative values; row " +
                        std::to_string(t + 1) + ", series " + panel.series_names[j]);
      out.values(t, j) = 100.0 * std::sqrt(252.0 * x);
    }
  return out;
}

}  // namespace dynnet
