#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <system_error>

#include "core/errors.hpp"

namespace dynnet {

// Locale-free, deterministic rendering with 17 significant digits
// (round-trips IEEE-754 doubles exactly).
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text, const std::string& where) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // tolerate surrounding spaces
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r')) --last;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw DataError("malformed numeric cell at " + where + ": '" + text + "'");
  }
  if (!std::isfinite(v)) {
    throw DataError("non-finite value at " + where + ": '" + text + "'");
  }
  return v;
}

}  // namespace dynnet
