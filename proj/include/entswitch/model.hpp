// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file model.hpp
 * @brief Hubbard Hamiltonian on a ring or an open chain.
 *
 *   H = -t sum_<ij>,s (c+_is c_js + h.c.) + sum_i u_i n_i,up n_i,down
 *
 * built as a dense matrix over one (n_up, n_down) sector. All energies are
 * in units of t.
 */

#pragma once

#include <entswitch/fock.hpp>
#include <entswitch/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entswitch {

enum class Geometry {
  ring,   ///< periodic boundary
  chain,  ///< open boundary
};

[[nodiscard]] constexpr std::string_view to_string(Geometry g) noexcept {
  return g == Geometry::ring ? "ring" : "chain";
}

[[nodiscard]] inline Geometry parse_geometry(std::string_view name) {
  if (name == "ring") return Geometry::ring;
  if (name == "chain") return Geometry::chain;
  throw std::domain_error("geometry: expected 'ring' or 'chain', got '" + std::string(name) + "'");
}

struct ModelParams {
  int sites = 3;
  Geometry geometry = Geometry::ring;
  double t = 1.0;
  std::vector<double> u_site = {0.0, 0.0, 0.0};  ///< on-site interaction per site, units of t
  int n_up = 1;
  int n_down = 1;

  /// Tuning/control layout: sites 1 and 2 carry u0, every further site carries u.
  [[nodiscard]] static ModelParams tuned(int sites, Geometry geometry, double u0, double u) {
    ModelParams p;
    p.sites = sites;
    p.geometry = geometry;
    p.u_site.assign(static_cast<std::size_t>(std::max(sites, 0)), u);
    for (int i = 0; i < std::min(sites, 2); ++i) p.u_site[static_cast<std::size_t>(i)] = u0;
    return p;
  }

  /// Throws std::domain_error naming the first offending field.
  void validate() const {
    if (sites < 2 || sites > kMaxSites) {
      throw std::domain_error("L: site count must be in [2, " + std::to_string(kMaxSites) +
                              "], got " + std::to_string(sites));
    }
    if (geometry == Geometry::ring && sites == 2) {
      throw std::domain_error("geometry: a 2-site ring double-counts its bond; use chain");
    }
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw std::domain_error("t: hopping must be positive and finite");
    }
    if (u_site.size() != static_cast<std::size_t>(sites)) {
      throw std::domain_error("u_site: expected " + std::to_string(sites) + " values, got " +
                              std::to_string(u_site.size()));
    }
    for (const double u : u_site) {
      if (!std::isfinite(u)) throw std::domain_error("u_site: values must be finite");
    }
    if (n_up < 0 || n_up > sites) {
      throw std::domain_error("n_up: must be in [0, " + std::to_string(sites) + "]");
    }
    if (n_down < 0 || n_down > sites) {
      throw std::domain_error("n_down: must be in [0, " + std::to_string(sites) + "]");
    }
  }
};

/// Nearest-neighbour bonds as 1-based (site, site) pairs, each listed once.
[[nodiscard]] inline std::vector<std::pair<int, int>> bonds(const ModelParams& params) {
  params.validate();
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < params.sites; ++i) out.emplace_back(i, i + 1);
  if (params.geometry == Geometry::ring) out.emplace_back(params.sites, 1);
  return out;
}

[[nodiscard]] inline double double_occupancy_energy(OccupationState state,
                                                    std::span<const double> u_site) {
  double e = 0.0;
  for (std::size_t i = 0; i < u_site.size(); ++i) {
    if (state.doubly_occupied(static_cast<int>(i) + 1)) e += u_site[i];
  }
  return e;
}

struct HamiltonianMatrix {
  SectorBasis basis;
  Matrix entries;
};

[[nodiscard]] inline HamiltonianMatrix build_hamiltonian(
    const ModelParams& params, SignConvention conv = SignConvention::ascending) {
  params.validate();
  HamiltonianMatrix h{enumerate_sector(params.sites, params.n_up, params.n_down), {}};
  const std::size_t dim = h.basis.size();
  h.entries = Matrix(dim, dim);
  const auto links = bonds(params);

  for (std::size_t col = 0; col < dim; ++col) {
    const OccupationState ket = h.basis[col];
    h.entries(col, col) = double_occupancy_energy(ket, params.u_site);
    for (const auto& [i, j] : links) {
      for (const Spin s : {Spin::up, Spin::down}) {
        const unsigned mi = mode_index(i, s);
        const unsigned mj = mode_index(j, s);
        for (const auto& [to, from] : {std::pair{mi, mj}, std::pair{mj, mi}}) {
          const auto hop = apply_hop(ket, to, from, params.sites, conv);
          if (!hop) continue;
          const auto row = h.basis.find(hop->state);
          if (!row) throw std::logic_error("hopping term left the (n_up, n_down) sector");
          h.entries(*row, col) += -params.t * hop->sign;
        }
      }
    }
  }
  return h;
}

}  // namespace entswitch
