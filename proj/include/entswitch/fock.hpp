// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number states of a small Hubbard cluster.
 *
 * Each site i (1-based) carries two spin-orbitals. Modes are ordered
 * site-major, spin-minor: mode(i, up) = 2(i-1), mode(i, down) = 2(i-1)+1.
 * A state is a bitmask over the 2L modes, bit m set <=> mode m occupied.
 *
 * Fermionic signs follow the Jordan-Wigner rule: an operator acting on
 * mode m picks up (-1)^(number of occupied modes that precede m). Which
 * modes "precede" is fixed by a SignConvention; the default is ascending
 * mode index.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entswitch {

/// Largest supported cluster; 2 * kMaxSites modes fit in 32 bits.
inline constexpr int kMaxSites = 16;

enum class Spin : unsigned { up = 0, down = 1 };

/// Operator ordering used for Jordan-Wigner parity.
enum class SignConvention {
  ascending,   ///< modes with smaller index precede (canonical)
  descending,  ///< modes with larger index precede (reversed string)
};

/// Mode index of (site, spin), sites numbered from 1.
[[nodiscard]] constexpr unsigned mode_index(int site, Spin spin) noexcept {
  return 2u * static_cast<unsigned>(site - 1) + static_cast<unsigned>(spin);
}

/// Occupation bitmask over the spin-orbitals of a cluster.
struct OccupationState {
  std::uint32_t bits = 0;

  [[nodiscard]] constexpr bool occupied(unsigned mode) const noexcept {
    return ((bits >> mode) & 1u) != 0;
  }
  [[nodiscard]] constexpr int count() const noexcept { return std::popcount(bits); }

  [[nodiscard]] constexpr int count_up() const noexcept {
    return std::popcount(bits & 0x55555555u);
  }
  [[nodiscard]] constexpr int count_down() const noexcept {
    return std::popcount(bits & 0xAAAAAAAAu);
  }

  /// Local configuration of one site: 0 = |0>, 1 = |up>, 2 = |down>, 3 = |up down>.
  [[nodiscard]] constexpr unsigned site_config(int site) const noexcept {
    return (bits >> (2u * static_cast<unsigned>(site - 1))) & 3u;
  }
  [[nodiscard]] constexpr bool doubly_occupied(int site) const noexcept {
    return site_config(site) == 3u;
  }

  constexpr auto operator<=>(const OccupationState&) const = default;
};

/// Result of a fermionic operator acting on a basis state.
struct SignedState {
  OccupationState state;
  int sign = 1;

  constexpr bool operator==(const SignedState&) const = default;
};

namespace detail {

inline void check_mode(unsigned mode, int sites) {
  if (sites < 1 || sites > kMaxSites) {
    throw std::domain_error("site count must be in [1, " + std::to_string(kMaxSites) +
                            "], got " + std::to_string(sites));
  }
  if (mode >= 2u * static_cast<unsigned>(sites)) {
    throw std::domain_error("mode " + std::to_string(mode) + " out of range for " +
                            std::to_string(sites) + " sites");
  }
}

/// Mask of modes that precede `mode` in the given convention.
[[nodiscard]] constexpr std::uint32_t preceding_mask(unsigned mode, int sites,
                                                     SignConvention conv) noexcept {
  const std::uint32_t below = (std::uint32_t{1} << mode) - 1u;
  if (conv == SignConvention::ascending) return below;
  const unsigned n_modes = 2u * static_cast<unsigned>(sites);
  const std::uint32_t all =
      n_modes >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_modes) - 1u;
  return all & ~below & ~(std::uint32_t{1} << mode);
}

[[nodiscard]] constexpr int parity_sign(std::uint32_t bits) noexcept {
  return (std::popcount(bits) & 1) ? -1 : 1;
}

}  // namespace detail

/// c_m |state>; nullopt when mode m is empty.
[[nodiscard]] inline std::optional<SignedState> apply_annihilate(
    OccupationState state, unsigned mode, int sites = kMaxSites,
    SignConvention conv = SignConvention::ascending) {
  detail::check_mode(mode, sites);
  if (!state.occupied(mode)) return std::nullopt;
  const int sign = detail::parity_sign(state.bits & detail::preceding_mask(mode, sites, conv));
  return SignedState{OccupationState{state.bits & ~(std::uint32_t{1} << mode)}, sign};
}

/// c+_m |state>; nullopt when mode m is already filled.
[[nodiscard]] inline std::optional<SignedState> apply_create(
    OccupationState state, unsigned mode, int sites = kMaxSites,
    SignConvention conv = SignConvention::ascending) {
  detail::check_mode(mode, sites);
  if (state.occupied(mode)) return std::nullopt;
  const int sign = detail::parity_sign(state.bits & detail::preceding_mask(mode, sites, conv));
  return SignedState{OccupationState{state.bits | (std::uint32_t{1} << mode)}, sign};
}

/// c+_to c_from |state>, the single-particle hop used by the kinetic term.
[[nodiscard]] inline std::optional<SignedState> apply_hop(
    OccupationState state, unsigned to, unsigned from, int sites,
    SignConvention conv = SignConvention::ascending) {
  const auto removed = apply_annihilate(state, from, sites, conv);
  if (!removed) return std::nullopt;
  const auto added = apply_create(removed->state, to, sites, conv);
  if (!added) return std::nullopt;
  return SignedState{added->state, removed->sign * added->sign};
}

/**
 * States with fixed site count, up-electron count and down-electron count,
 * sorted ascending by bitmask.
 */
class SectorBasis {
 public:
  SectorBasis() = default;

  [[nodiscard]] int sites() const noexcept { return sites_; }
  [[nodiscard]] int n_up() const noexcept { return n_up_; }
  [[nodiscard]] int n_down() const noexcept { return n_down_; }
  [[nodiscard]] int electrons() const noexcept { return n_up_ + n_down_; }
  /// Twice the total S_z.
  [[nodiscard]] int sz2() const noexcept { return n_up_ - n_down_; }

  [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
  [[nodiscard]] const std::vector<OccupationState>& states() const noexcept { return states_; }
  [[nodiscard]] OccupationState operator[](std::size_t i) const { return states_[i]; }

  /// Position of `state` in the basis, if it belongs to the sector.
  [[nodiscard]] std::optional<std::size_t> find(OccupationState state) const {
    const auto it = std::lower_bound(states_.begin(), states_.end(), state);
    if (it == states_.end() || *it != state) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
  }

  bool operator==(const SectorBasis&) const = default;

  friend SectorBasis enumerate_sector(int sites, int n_up, int n_down);

 private:
  int sites_ = 0;
  int n_up_ = 0;
  int n_down_ = 0;
  std::vector<OccupationState> states_;
};

namespace detail {

/// All L-bit patterns with k bits set, ascending (Gosper's hack).
[[nodiscard]] inline std::vector<std::uint32_t> combinations(int sites, int k) {
  std::vector<std::uint32_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << sites;
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  while (x < limit) {
    out.push_back(static_cast<std::uint32_t>(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

/// Spread site pattern bits onto the even (up) mode positions.
[[nodiscard]] constexpr std::uint32_t spread_sites(std::uint32_t pattern) noexcept {
  std::uint32_t out = 0;
  for (unsigned i = 0; pattern != 0; ++i, pattern >>= 1) {
    if (pattern & 1u) out |= std::uint32_t{1} << (2u * i);
  }
  return out;
}

}  // namespace detail

[[nodiscard]] inline SectorBasis enumerate_sector(int sites, int n_up, int n_down) {
  if (sites < 1 || sites > kMaxSites) {
    throw std::domain_error("site count must be in [1, " + std::to_string(kMaxSites) +
                            "], got " + std::to_string(sites));
  }
  if (n_up < 0 || n_up > sites) {
    throw std::domain_error("n_up must be in [0, " + std::to_string(sites) + "], got " +
                            std::to_string(n_up));
  }
  if (n_down < 0 || n_down > sites) {
    throw std::domain_error("n_down must be in [0, " + std::to_string(sites) + "], got " +
                            std::to_string(n_down));
  }
  SectorBasis basis;
  basis.sites_ = sites;
  basis.n_up_ = n_up;
  basis.n_down_ = n_down;
  const auto ups = detail::combinations(sites, n_up);
  const auto downs = detail::combinations(sites, n_down);
  basis.states_.reserve(ups.size() * downs.size());
  for (const auto u : ups) {
    for (const auto d : downs) {
      basis.states_.push_back(
          OccupationState{detail::spread_sites(u) | (detail::spread_sites(d) << 1)});
    }
  }
  std::sort(basis.states_.begin(), basis.states_.end());
  return basis;
}

}  // namespace entswitch
