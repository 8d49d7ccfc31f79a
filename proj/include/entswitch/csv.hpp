// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file csv.hpp
 * @brief Sweep results as CSV.
 *
 * Header line:
 *   geometry,u0_over_t,u_over_t,kT_over_t,entropy_bits,ground_energy,degenerate,gap
 * Floating-point fields use 9 significant digits (%.9g), `degenerate` is 0/1,
 * and every row, the last included, ends with '\n'.
 */

#pragma once

#include <entswitch/model.hpp>
#include <entswitch/sweep.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entswitch {

inline constexpr std::string_view kCsvHeader =
    "geometry,u0_over_t,u_over_t,kT_over_t,entropy_bits,ground_energy,degenerate,gap";

/// %.9g formatting; the textual form the CSV carries.
[[nodiscard]] inline std::string format_g9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

/// x rounded to what survives a CSV write/read cycle.
[[nodiscard]] inline double round_g9(double x) { return std::strtod(format_g9(x).c_str(), nullptr); }

inline void write_csv(std::ostream& out, const SweepResult& result) {
  out << kCsvHeader << '\n';
  for (const SweepRow& r : result.rows) {
    out << to_string(r.geometry) << ',' << format_g9(r.u0_over_t) << ','
        << format_g9(r.u_over_t) << ',' << format_g9(r.kT_over_t) << ','
        << format_g9(r.entropy_bits) << ',' << format_g9(r.ground_energy) << ','
        << (r.degenerate ? 1 : 0) << ',' << format_g9(r.gap) << '\n';
  }
}

/// Malformed input throws std::runtime_error naming the 1-based line.
[[nodiscard]] inline SweepResult read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv line 1: header mismatch");
  }
  SweepResult result;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fail = [&](const std::string& why) {
      throw std::runtime_error("csv line " + std::to_string(lineno) + ": " + why);
    };
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 8) fail("expected 8 fields, got " + std::to_string(fields.size()));

    const auto number = [&](const std::string& s) {
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(s.c_str(), &end);
      if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) fail("bad number '" + s + "'");
      return v;
    };
    SweepRow row;
    try {
      row.geometry = parse_geometry(fields[0]);
    } catch (const std::domain_error&) {
      fail("bad geometry '" + fields[0] + "'");
    }
    row.u0_over_t = number(fields[1]);
    row.u_over_t = number(fields[2]);
    row.kT_over_t = number(fields[3]);
    row.entropy_bits = number(fields[4]);
    row.ground_energy = number(fields[5]);
    if (fields[6] != "0" && fields[6] != "1") fail("degenerate must be 0 or 1");
    row.degenerate = fields[6] == "1";
    row.gap = number(fields[7]);
    result.rows.push_back(row);
  }
  return result;
}

}  // namespace entswitch
