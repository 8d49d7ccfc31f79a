// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli_app.hpp
 * @brief `entswitch` command line: point, spectrum and sweep subcommands.
 *
 * Exit codes: 0 success, 1 numerical or I/O failure, 2 usage error.
 */

#pragma once

#include <entswitch/entswitch.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace entswitch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string geometry = "ring";
  int sites = 3;
  double u0 = 0.0;
  double u = 0.0;
  std::vector<double> u_site;  ///< overrides the (u0, u) layout when set
  double kT = 0.0;
  int n_up = 1;
  int n_down = 1;
  std::string output = "-";
  std::string format;  ///< text (point/spectrum default), csv (sweep default) or json
  std::string axis1;
  std::string axis2;
  std::string scenario;
  unsigned threads = 0;
};

namespace detail {

inline std::string fixed9(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

/// "name:min:max:steps"
inline Axis parse_axis(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4) throw std::domain_error(flag + ": expected name:min:max:steps");
  Axis a;
  a.parameter = parse_sweep_parameter(parts[0]);
  try {
    std::size_t used = 0;
    a.min = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    a.max = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    a.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
  } catch (const std::logic_error&) {
    throw std::domain_error(flag + ": could not parse '" + text + "'");
  }
  return a;
}

inline ModelParams model_from(const RunConfig& cfg) {
  const Geometry g = parse_geometry(cfg.geometry);
  ModelParams p = ModelParams::tuned(cfg.sites, g, cfg.u0, cfg.u);
  if (!cfg.u_site.empty()) p.u_site = cfg.u_site;
  p.n_up = cfg.n_up;
  p.n_down = cfg.n_down;
  p.validate();
  return p;
}

inline nlohmann::json config_json(const RunConfig& cfg) {
  nlohmann::json j;
  j["subcommand"] = cfg.subcommand;
  j["geometry"] = cfg.geometry;
  j["L"] = cfg.sites;
  j["u0"] = cfg.u0;
  j["u"] = cfg.u;
  if (!cfg.u_site.empty()) j["u_site"] = cfg.u_site;
  j["kT"] = cfg.kT;
  j["n_up"] = cfg.n_up;
  j["n_down"] = cfg.n_down;
  j["t"] = 1.0;
  if (!cfg.scenario.empty()) j["scenario"] = cfg.scenario;
  if (!cfg.axis1.empty()) j["axis1"] = cfg.axis1;
  if (!cfg.axis2.empty()) j["axis2"] = cfg.axis2;
  return j;
}

inline nlohmann::json row_json(const SweepRow& r) {
  return {{"geometry", std::string(to_string(r.geometry))},
          {"u0_over_t", r.u0_over_t},
          {"u_over_t", r.u_over_t},
          {"kT_over_t", r.kT_over_t},
          {"entropy_bits", r.entropy_bits},
          {"ground_energy", r.ground_energy},
          {"degenerate", r.degenerate},
          {"gap", r.gap}};
}

inline SweepSpec sweep_spec_from(RunConfig& cfg) {
  SweepSpec spec;
  if (!cfg.scenario.empty()) {
    spec = scenario(cfg.scenario);
  } else {
    if (!cfg.u_site.empty()) throw std::domain_error("u_site: not supported by sweep; use --u0/--u");
    if (cfg.axis1.empty()) throw std::domain_error("axis1: sweep needs --axis1 or --scenario");
    spec.base = PointSpec{cfg.sites, cfg.n_up, cfg.n_down, cfg.u0, cfg.u, cfg.kT};
    spec.axis1 = parse_axis(cfg.axis1, "axis1");
    if (!cfg.axis2.empty()) spec.axis2 = parse_axis(cfg.axis2, "axis2");
    if (cfg.geometry == "both") {
      spec.geometries = {Geometry::ring, Geometry::chain};
    } else {
      spec.geometries = {parse_geometry(cfg.geometry)};
    }
  }
  spec.threads = cfg.threads;
  spec.validate();
  return spec;
}

/// Writes `text` to the configured destination; false if it cannot be opened.
inline bool emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output == "-") {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << text;
  return static_cast<bool>(file);
}

inline void check_format(const std::string& format) {
  if (format != "text" && format != "csv" && format != "json") {
    throw std::domain_error("format: expected text, csv or json, got '" + format + "'");
  }
}

}  // namespace detail

[[nodiscard]] inline std::string cmd_point(const RunConfig& cfg) {
  const ModelParams params = detail::model_from(cfg);
  const PointResult r = evaluate_point(params, cfg.kT);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  detail::check_format(format);
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["config"] = detail::config_json(cfg);
    j["entropy_bits"] = r.entropy_bits;
    j["ground_energy"] = r.ground_energy;
    j["degeneracy"] = r.degeneracy;
    j["degenerate"] = r.degeneracy > 1;
    j["gap"] = r.gap;
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    SweepResult one;
    one.rows.push_back(SweepRow{params.geometry, cfg.u0, cfg.u, cfg.kT, r.entropy_bits,
                                r.ground_energy, r.degeneracy > 1, r.gap});
    write_csv(os, one);
  } else {
    os << "E=" << detail::fixed9(r.entropy_bits) << '\n'
       << "ground_energy=" << detail::fixed9(r.ground_energy) << '\n'
       << "degeneracy=" << r.degeneracy << '\n'
       << "gap=" << detail::fixed9(r.gap) << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string cmd_spectrum(const RunConfig& cfg) {
  const ModelParams params = detail::model_from(cfg);
  const Spectrum spec = eigh(build_hamiltonian(params).entries);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  detail::check_format(format);
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["config"] = detail::config_json(cfg);
    j["eigenvalues"] = spec.eigenvalues;
    j["gap"] = spec.gap();
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "index,eigenvalue\n";
    for (std::size_t i = 0; i < spec.size(); ++i) {
      os << i << ',' << format_g9(spec.eigenvalues[i]) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < spec.size(); ++i) {
      os << i << ' ' << detail::fixed9(spec.eigenvalues[i]) << '\n';
    }
    os << "gap=" << detail::fixed9(spec.gap()) << '\n';
  }
  return os.str();
}

[[nodiscard]] inline std::string cmd_sweep(RunConfig& cfg) {
  const SweepSpec spec = detail::sweep_spec_from(cfg);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format != "csv" && format != "json") {
    throw std::domain_error("format: sweep writes csv or json, got '" + format + "'");
  }
  const SweepResult result = run_sweep(spec);
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["config"] = detail::config_json(cfg);
    j["rows"] = nlohmann::json::array();
    for (const SweepRow& r : result.rows) j["rows"].push_back(detail::row_json(r));
    os << j.dump(2) << '\n';
  } else {
    write_csv(os, result);
  }
  return os.str();
}

/// argv[0] is the program name.
[[nodiscard]] inline int run(const std::vector<std::string>& args, std::ostream& out,
                             std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entanglement of small Hubbard clusters by exact diagonalization"};
  app.require_subcommand(1);

  const auto add_model_options = [&cfg](CLI::App* sub) {
    sub->add_option("--L", cfg.sites, "number of sites")->capture_default_str();
    sub->add_option("--geometry", cfg.geometry, "ring or chain (sweep also accepts both)")
        ->capture_default_str();
    sub->add_option("--u0", cfg.u0, "on-site interaction of sites 1 and 2, units of t");
    sub->add_option("--u", cfg.u, "on-site interaction of sites 3.., units of t");
    sub->add_option("--kT", cfg.kT, "temperature, units of t");
    sub->add_option("--n-up", cfg.n_up, "spin-up electrons")->capture_default_str();
    sub->add_option("--n-down", cfg.n_down, "spin-down electrons")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output path, - for stdout")->capture_default_str();
    sub->add_option("--format", cfg.format, "text, csv or json");
  };

  CLI::App* point = app.add_subcommand("point", "entropy and spectral data at one point");
  add_model_options(point);
  point->add_option("--u-site", cfg.u_site, "explicit per-site interactions")->delimiter(',');
  CLI::App* spectrum = app.add_subcommand("spectrum", "sector eigenvalues and gap");
  add_model_options(spectrum);
  spectrum->add_option("--u-site", cfg.u_site, "explicit per-site interactions")->delimiter(',');
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
  add_model_options(sweep);
  sweep->add_option("--axis1", cfg.axis1, "name:min:max:steps, name in {u0,u,kT}");
  sweep->add_option("--axis2", cfg.axis2, "optional second axis");
  sweep->add_option("--scenario", cfg.scenario, "fig2a, fig2b, fig2c, fig3a, fig3b or fig3c");
  sweep->add_option("--threads", cfg.threads, "worker threads, 0 = all cores");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::optional<int> sites_flag;
  for (CLI::App* sub : {point, spectrum, sweep}) {
    if (sub->parsed()) {
      cfg.subcommand = sub->get_name();
      if (sub->count("--L") > 0) sites_flag = cfg.sites;
    }
  }
  if (!cfg.u_site.empty() && !sites_flag) cfg.sites = static_cast<int>(cfg.u_site.size());

  try {
    std::string text;
    if (cfg.subcommand == "point") {
      text = cmd_point(cfg);
    } else if (cfg.subcommand == "spectrum") {
      text = cmd_spectrum(cfg);
    } else {
      text = cmd_sweep(cfg);
    }
    if (!detail::emit(cfg, text, out)) {
      err << "error: output: cannot write '" << cfg.output << "'\n";
      return kExitFailure;
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace entswitch::cli
