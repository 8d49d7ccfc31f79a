// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <entswitch/model.hpp>
#include <entswitch/sweep.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entswitch {

inline constexpr int kLineSweepPoints = 121;
inline constexpr int kSurfacePoints = 81;
inline constexpr double kSurfaceRange = 100.0;

inline constexpr std::array<std::string_view, 6> kScenarioNames = {
    "fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c"};

/**
 * Named figure sweeps.
 *
 *   fig2a  two-site chain, u0 in [-30, 30]
 *   fig2b  three sites, ring and chain, u = +80, u0 in [-200, 200]
 *   fig2c  three sites, ring and chain, u = -80, u0 in [-200, 100]
 *   fig3x  ring surface over (u, u0) in [-100, 100]^2 at kT = 0, 10, 80
 */
[[nodiscard]] inline SweepSpec scenario(std::string_view name) {
  SweepSpec s;
  s.base = PointSpec{};
  if (name == "fig2a") {
    s.base.sites = 2;
    s.geometries = {Geometry::chain};
    s.axis1 = Axis{SweepParameter::u0, -30.0, 30.0, kLineSweepPoints};
  } else if (name == "fig2b" || name == "fig2c") {
    const bool positive = name == "fig2b";
    s.base.u = positive ? 80.0 : -80.0;
    s.geometries = {Geometry::ring, Geometry::chain};
    s.axis1 = Axis{SweepParameter::u0, -200.0, positive ? 200.0 : 100.0, kLineSweepPoints};
  } else if (name == "fig3a" || name == "fig3b" || name == "fig3c") {
    s.base.kT = name == "fig3a" ? 0.0 : name == "fig3b" ? 10.0 : 80.0;
    s.geometries = {Geometry::ring};
    s.axis1 = Axis{SweepParameter::u, -kSurfaceRange, kSurfaceRange, kSurfacePoints};
    s.axis2 = Axis{SweepParameter::u0, -kSurfaceRange, kSurfaceRange, kSurfacePoints};
  } else {
    throw std::domain_error("scenario: unknown name '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace entswitch
