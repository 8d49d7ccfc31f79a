// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file sweep.hpp
 * @brief Grid evaluation of the site-1 entropy over (u0, u, kT).
 *
 * Rows come out ordered by geometry (in SweepSpec::geometries order), then axis1 index,
 * then axis2 index. Points are independent, so the grid is split into
 * contiguous row blocks across worker threads; each worker writes only its
 * own slots, which makes the result independent of the thread count.
 */

#pragma once

#include <entswitch/errors.hpp>
#include <entswitch/model.hpp>
#include <entswitch/quantum_state.hpp>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace entswitch {

enum class SweepParameter { u0, u, kT };

[[nodiscard]] constexpr std::string_view to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::u0: return "u0";
    case SweepParameter::u: return "u";
    case SweepParameter::kT: return "kT";
  }
  return "?";
}

[[nodiscard]] inline SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "u0") return SweepParameter::u0;
  if (name == "u") return SweepParameter::u;
  if (name == "kT") return SweepParameter::kT;
  throw std::domain_error("axis: parameter must be u0, u or kT, got '" + std::string(name) + "'");
}

/// Evenly spaced grid, both end points included.
struct Axis {
  SweepParameter parameter = SweepParameter::u0;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  [[nodiscard]] double value(int i) const noexcept {
    if (i == steps - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  bool operator==(const Axis&) const = default;
};

/// One parameter point in the tuning/control layout (see ModelParams::tuned).
struct PointSpec {
  int sites = 3;
  int n_up = 1;
  int n_down = 1;
  double u0 = 0.0;
  double u = 0.0;
  double kT = 0.0;

  [[nodiscard]] ModelParams model(Geometry geometry) const {
    ModelParams p = ModelParams::tuned(sites, geometry, u0, u);
    p.n_up = n_up;
    p.n_down = n_down;
    return p;
  }
  void set(SweepParameter which, double value) noexcept {
    switch (which) {
      case SweepParameter::u0: u0 = value; break;
      case SweepParameter::u: u = value; break;
      case SweepParameter::kT: kT = value; break;
    }
  }
  bool operator==(const PointSpec&) const = default;
};

struct SweepSpec {
  PointSpec base;
  Axis axis1;
  std::optional<Axis> axis2;
  std::vector<Geometry> geometries = {Geometry::ring};
  unsigned threads = 1;  ///< 0 = hardware concurrency

  void validate() const {
    const auto check_axis = [](const Axis& a, std::string_view name) {
      if (a.steps < 2) throw std::domain_error(std::string(name) + ": step count must be >= 2");
      if (!(a.min < a.max)) throw std::domain_error(std::string(name) + ": min must be < max");
      if (a.parameter == SweepParameter::kT && a.min < 0.0) {
        throw std::domain_error(std::string(name) + ": kT must be >= 0");
      }
    };
    check_axis(axis1, "axis1");
    if (axis2) {
      check_axis(*axis2, "axis2");
      if (axis2->parameter == axis1.parameter) {
        throw std::domain_error("axis2: parameter must differ from axis1");
      }
    }
    if (geometries.empty()) throw std::domain_error("geometry: at least one geometry required");
    for (std::size_t i = 0; i < geometries.size(); ++i) {
      for (std::size_t j = i + 1; j < geometries.size(); ++j) {
        if (geometries[i] == geometries[j]) throw std::domain_error("geometry: listed twice");
      }
      base.model(geometries[i]).validate();
    }
    if (base.kT < 0.0) throw std::domain_error("kT: temperature must be >= 0");
  }

  [[nodiscard]] std::size_t points_per_geometry() const noexcept {
    return static_cast<std::size_t>(axis1.steps) * static_cast<std::size_t>(axis2 ? axis2->steps : 1);
  }
};

struct SweepRow {
  Geometry geometry = Geometry::ring;
  double u0_over_t = 0.0;
  double u_over_t = 0.0;
  double kT_over_t = 0.0;
  double entropy_bits = 0.0;
  double ground_energy = 0.0;
  bool degenerate = false;
  double gap = 0.0;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool operator==(const SweepResult&) const = default;
};

/// A grid point failed; carries its coordinates.
class SweepError : public NumericalError {
 public:
  SweepError(SweepRow where, const std::string& what)
      : NumericalError("sweep failed at geometry=" + std::string(to_string(where.geometry)) +
                       " u0=" + std::to_string(where.u0_over_t) +
                       " u=" + std::to_string(where.u_over_t) +
                       " kT=" + std::to_string(where.kT_over_t) + ": " + what),
        where_(where) {}
  [[nodiscard]] const SweepRow& where() const noexcept { return where_; }

 private:
  SweepRow where_;
};

namespace detail {

[[nodiscard]] inline SweepRow sweep_point(const SweepSpec& spec, std::size_t flat) {
  const std::size_t per_geom = spec.points_per_geometry();
  const std::size_t n2 = spec.axis2 ? static_cast<std::size_t>(spec.axis2->steps) : 1;
  const Geometry geometry = spec.geometries[flat / per_geom];
  const std::size_t rem = flat % per_geom;

  PointSpec point = spec.base;
  point.set(spec.axis1.parameter, spec.axis1.value(static_cast<int>(rem / n2)));
  if (spec.axis2) point.set(spec.axis2->parameter, spec.axis2->value(static_cast<int>(rem % n2)));

  SweepRow row;
  row.geometry = geometry;
  row.u0_over_t = point.u0;
  row.u_over_t = point.u;
  row.kT_over_t = point.kT;
  try {
    const PointResult r = evaluate_point(point.model(geometry), point.kT);
    row.entropy_bits = r.entropy_bits;
    row.ground_energy = r.ground_energy;
    row.degenerate = r.degeneracy > 1;
    row.gap = r.gap;
  } catch (const std::exception& e) {
    throw SweepError(row, e.what());
  }
  return row;
}

}  // namespace detail

[[nodiscard]] inline SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t total = spec.points_per_geometry() * spec.geometries.size();
  SweepResult result;
  result.rows.resize(total);

  unsigned workers = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : spec.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) result.rows[i] = detail::sweep_point(spec, i);
    return result;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = w * block;
      const std::size_t end = std::min(total, begin + block);
      try {
        for (std::size_t i = begin; i < end; ++i) result.rows[i] = detail::sweep_point(spec, i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  // Blocks are ordered, so the first stored error is the earliest failing point.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

}  // namespace entswitch
