// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quantum_state.hpp
 * @brief Density matrices, partial traces and von Neumann entropy.
 *
 * Global states live on a SectorBasis. Reduced states live on a LocalBasis:
 * the 4^k product configurations of k kept sites, first kept site most
 * significant, each site digit ordered |0>, |up>, |down>, |up down>.
 * A local |up down> means c+_up c+_down |0>, regardless of SignConvention.
 *
 * All matrices are real because the Hamiltonian is real symmetric.
 */

#pragma once

#include <entswitch/eigensolver.hpp>
#include <entswitch/errors.hpp>
#include <entswitch/fock.hpp>
#include <entswitch/matrix.hpp>
#include <entswitch/model.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace entswitch {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kPositivityFloor = -1e-10;
/// kT at or above this multiple of the spectral spread gives equal weights.
inline constexpr double kInfiniteTemperatureRatio = 1e6;

/// Product basis over an ordered subset of sites.
struct LocalBasis {
  std::vector<int> sites;  ///< 1-based, in kept order

  [[nodiscard]] std::size_t size() const noexcept {
    return std::size_t{1} << (2 * sites.size());
  }
  /// Local configuration digit (0..3) of the k-th kept site in basis element `index`.
  [[nodiscard]] unsigned digit(std::size_t index, std::size_t k) const noexcept {
    return static_cast<unsigned>(index >> (2 * (sites.size() - 1 - k))) & 3u;
  }
  /// e.g. "|ud,0>" for two kept sites.
  [[nodiscard]] std::string label(std::size_t index) const {
    static constexpr const char* names[] = {"0", "u", "d", "ud"};
    std::string s = "|";
    for (std::size_t k = 0; k < sites.size(); ++k) {
      if (k) s += ',';
      s += names[digit(index, k)];
    }
    return s + ">";
  }
  bool operator==(const LocalBasis&) const = default;
};

using BasisLabel = std::variant<SectorBasis, LocalBasis>;

/**
 * Unit-trace, symmetric, positive semidefinite real matrix.
 *
 * The constructor checks the invariants (trace and symmetry within 1e-10,
 * eigenvalues >= -1e-10) and caches the eigenvalues. Entries are
 * symmetrized after the check.
 */
class DensityMatrix {
 public:
  DensityMatrix(BasisLabel basis, Matrix entries, std::size_t degeneracy = 1)
      : basis_(std::move(basis)), entries_(std::move(entries)), degeneracy_(degeneracy) {
    const std::size_t dim =
        std::visit([](const auto& b) { return b.size(); }, basis_);
    if (!entries_.square() || entries_.rows() != dim || dim == 0) {
      throw std::domain_error("DensityMatrix: entries must be " + std::to_string(dim) + "x" +
                              std::to_string(dim));
    }
    if (std::abs(entries_.trace() - 1.0) > kTraceTolerance) {
      throw NumericalError("DensityMatrix: trace " + std::to_string(entries_.trace()) +
                           " differs from 1");
    }
    if (entries_.asymmetry() > kHermiticityTolerance) {
      throw NumericalError("DensityMatrix: entries are not symmetric");
    }
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r + 1; c < dim; ++c) {
        const double m = 0.5 * (entries_(r, c) + entries_(c, r));
        entries_(r, c) = m;
        entries_(c, r) = m;
      }
    }
    eigenvalues_ = eigh(entries_).eigenvalues;
    if (eigenvalues_.front() < kPositivityFloor) {
      throw PositivityError("DensityMatrix: eigenvalue " + std::to_string(eigenvalues_.front()) +
                            " is below the positivity floor");
    }
  }

  /// |psi><psi| for a normalized sector vector.
  [[nodiscard]] static DensityMatrix pure(const SectorBasis& basis, std::span<const double> psi) {
    if (psi.size() != basis.size()) throw std::domain_error("pure: vector/basis size mismatch");
    Matrix m(psi.size(), psi.size());
    for (std::size_t r = 0; r < psi.size(); ++r)
      for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * psi[c];
    return DensityMatrix(basis, std::move(m));
  }

  [[nodiscard]] const BasisLabel& basis() const noexcept { return basis_; }
  [[nodiscard]] const SectorBasis* sector_basis() const noexcept {
    return std::get_if<SectorBasis>(&basis_);
  }
  [[nodiscard]] const LocalBasis* local_basis() const noexcept {
    return std::get_if<LocalBasis>(&basis_);
  }
  [[nodiscard]] const Matrix& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t dim() const noexcept { return entries_.rows(); }
  /// Ascending eigenvalues.
  [[nodiscard]] const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  /// Number of ground states mixed in at zero temperature (1 otherwise).
  [[nodiscard]] std::size_t degeneracy() const noexcept { return degeneracy_; }
  [[nodiscard]] bool degenerate() const noexcept { return degeneracy_ > 1; }

 private:
  BasisLabel basis_;
  Matrix entries_;
  std::size_t degeneracy_ = 1;
  std::vector<double> eigenvalues_;
};

namespace detail {

[[nodiscard]] inline Matrix weighted_projectors(const Spectrum& spec,
                                                std::span<const std::size_t> indices,
                                                std::span<const double> weights) {
  const std::size_t n = spec.size();
  Matrix m(n, n);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const auto v = spec.vector(indices[k]);
    const double w = weights[k];
    if (w == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const double wr = w * v[r];
      for (std::size_t c = 0; c < n; ++c) m(r, c) += wr * v[c];
    }
  }
  return m;
}

}  // namespace detail

/// Pure ground projector, or the equal mixture over a degenerate ground manifold.
[[nodiscard]] inline DensityMatrix ground_density_matrix(const SectorBasis& basis,
                                                         const Spectrum& spec,
                                                         double rel_tol = kDegeneracyTolerance) {
  if (spec.size() != basis.size()) throw std::domain_error("spectrum/basis size mismatch");
  const auto manifold = ground_manifold(spec, rel_tol);
  const std::vector<double> weights(manifold.size(), 1.0 / static_cast<double>(manifold.size()));
  return DensityMatrix(basis, detail::weighted_projectors(spec, manifold, weights),
                       manifold.size());
}

/**
 * Gibbs weights exp(-(eps_i - eps_0)/kT), normalized.
 * kT = 0 is not handled here; equal weights once kT >= 1e6 * (eps_max - eps_0).
 */
[[nodiscard]] inline std::vector<double> boltzmann_weights(std::span<const double> eigenvalues,
                                                           double kT) {
  if (!(kT > 0.0)) throw std::domain_error("kT: must be positive for Boltzmann weights");
  const double e0 = eigenvalues.front();
  const double spread = eigenvalues.back() - e0;
  std::vector<double> w(eigenvalues.size());
  if (kT >= kInfiniteTemperatureRatio * spread) {
    std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
    return w;
  }
  double z = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-(eigenvalues[i] - e0) / kT);
    z += w[i];
  }
  for (double& x : w) x /= z;
  return w;
}

[[nodiscard]] inline DensityMatrix thermal_density_matrix(const SectorBasis& basis,
                                                          const Spectrum& spec, double kT,
                                                          double rel_tol = kDegeneracyTolerance) {
  if (!(kT >= 0.0)) throw std::domain_error("kT: temperature must be >= 0");
  if (kT == 0.0) return ground_density_matrix(basis, spec, rel_tol);
  if (spec.size() != basis.size()) throw std::domain_error("spectrum/basis size mismatch");
  const auto weights = boltzmann_weights(spec.eigenvalues, kT);
  std::vector<std::size_t> all(spec.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return DensityMatrix(basis, detail::weighted_projectors(spec, all, weights));
}

namespace detail {

/// Permutation parity taking the occupied modes of `state` from convention order
/// to "kept sites in keep order, then traced sites ascending" order.
[[nodiscard]] inline int reorder_sign(OccupationState state, std::span<const int> target_pos,
                                      int sites, SignConvention conv) {
  const unsigned n_modes = 2u * static_cast<unsigned>(sites);
  int inversions = 0;
  std::vector<int> seq;
  seq.reserve(n_modes);
  for (unsigned k = 0; k < n_modes; ++k) {
    const unsigned mode = conv == SignConvention::ascending ? k : n_modes - 1 - k;
    if (state.occupied(mode)) seq.push_back(target_pos[mode]);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return (inversions & 1) ? -1 : 1;
}

}  // namespace detail

/**
 * Partial trace of a sector density matrix onto the sites in `keep`.
 *
 * Each sector state is written as (kept part) x (traced part) after moving
 * the kept creation operators to the front of the operator string; the
 * resulting permutation sign multiplies its amplitude.
 */
[[nodiscard]] inline DensityMatrix reduce_to_sites(const DensityMatrix& rho,
                                                   std::span<const int> keep,
                                                   SignConvention conv = SignConvention::ascending) {
  const SectorBasis* basis = rho.sector_basis();
  if (basis == nullptr) throw std::domain_error("reduce_to_sites: rho must live on a sector basis");
  const int sites = basis->sites();
  if (keep.empty() || keep.size() >= static_cast<std::size_t>(sites)) {
    throw std::domain_error("reduce_to_sites: keep must be a nonempty strict subset of sites");
  }
  std::vector<bool> kept(static_cast<std::size_t>(sites) + 1, false);
  for (const int s : keep) {
    if (s < 1 || s > sites) {
      throw std::domain_error("reduce_to_sites: site " + std::to_string(s) + " out of range");
    }
    if (kept[static_cast<std::size_t>(s)]) {
      throw std::domain_error("reduce_to_sites: site " + std::to_string(s) + " repeated");
    }
    kept[static_cast<std::size_t>(s)] = true;
  }

  std::vector<int> target_pos(2 * static_cast<std::size_t>(sites));
  std::uint32_t traced_mask = 0;
  {
    int pos = 0;
    for (const int s : keep) {
      target_pos[mode_index(s, Spin::up)] = pos++;
      target_pos[mode_index(s, Spin::down)] = pos++;
    }
    for (int s = 1; s <= sites; ++s) {
      if (kept[static_cast<std::size_t>(s)]) continue;
      target_pos[mode_index(s, Spin::up)] = pos++;
      target_pos[mode_index(s, Spin::down)] = pos++;
      traced_mask |= 3u << mode_index(s, Spin::up);
    }
  }

  const std::size_t dim = basis->size();
  std::vector<std::size_t> local(dim);
  std::vector<std::uint32_t> env(dim);
  std::vector<int> sign(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const OccupationState st = (*basis)[i];
    std::size_t idx = 0;
    for (const int s : keep) idx = (idx << 2) | st.site_config(s);
    local[i] = idx;
    env[i] = st.bits & traced_mask;
    sign[i] = detail::reorder_sign(st, target_pos, sites, conv);
  }

  LocalBasis out_basis{std::vector<int>(keep.begin(), keep.end())};
  Matrix reduced(out_basis.size(), out_basis.size());
  const Matrix& m = rho.entries();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (env[i] != env[j]) continue;
      reduced(local[i], local[j]) += sign[i] * sign[j] * m(i, j);
    }
  }
  return DensityMatrix(std::move(out_basis), std::move(reduced));
}

/// -sum lambda log2 lambda over the eigenvalues of rho, in bits.
[[nodiscard]] inline double von_neumann_entropy(const DensityMatrix& rho) noexcept {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

/// One parameter point: site-1 entropy plus spectral metadata.
struct PointResult {
  double entropy_bits = 0.0;
  double ground_energy = 0.0;
  std::size_t degeneracy = 1;  ///< ground-manifold size
  double gap = 0.0;            ///< eps_1 - eps_0
};

/// Hamiltonian -> spectrum -> Gibbs state -> site-1 reduction -> entropy.
[[nodiscard]] inline PointResult evaluate_point(const ModelParams& params, double kT,
                                                SignConvention conv = SignConvention::ascending) {
  if (!(kT >= 0.0)) throw std::domain_error("kT: temperature must be >= 0");
  const HamiltonianMatrix h = build_hamiltonian(params, conv);
  const Spectrum spec = eigh(h.entries);
  const DensityMatrix rho = thermal_density_matrix(h.basis, spec, kT);
  static constexpr int site1[] = {1};
  const DensityMatrix rho1 = reduce_to_sites(rho, site1, conv);
  return PointResult{von_neumann_entropy(rho1), spec.eigenvalues.front(),
                     ground_manifold(spec).size(), spec.gap()};
}

[[nodiscard]] inline double site1_entanglement(const ModelParams& params, double kT) {
  return evaluate_point(params, kT).entropy_bits;
}

}  // namespace entswitch
