// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

#include <entswitch/eigensolver.hpp>
#include <entswitch/model.hpp>

#include <gtest/gtest.h>

#include "oracle/oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace entswitch {
namespace {

using Bonds = std::vector<std::pair<int, int>>;

TEST(Bonds, RingAndChain) {
  EXPECT_EQ(bonds(ModelParams::tuned(3, Geometry::ring, 0, 0)), (Bonds{{1, 2}, {2, 3}, {3, 1}}));
  EXPECT_EQ(bonds(ModelParams::tuned(3, Geometry::chain, 0, 0)), (Bonds{{1, 2}, {2, 3}}));
  EXPECT_EQ(bonds(ModelParams::tuned(2, Geometry::chain, 0, 0)), (Bonds{{1, 2}}));
}

TEST(ModelParams, TunedLayout) {
  EXPECT_EQ(ModelParams::tuned(3, Geometry::ring, 5, -2).u_site, (std::vector<double>{5, 5, -2}));
  EXPECT_EQ(ModelParams::tuned(2, Geometry::chain, 5, -2).u_site, (std::vector<double>{5, 5}));
}

TEST(ModelParams, ValidationNamesField) {
  const auto message = [](const ModelParams& p) {
    try {
      p.validate();
    } catch (const std::domain_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message(ModelParams::tuned(2, Geometry::ring, 0, 0)).rfind("geometry", 0), 0u);
  EXPECT_EQ(message(ModelParams::tuned(1, Geometry::chain, 0, 0)).rfind("L", 0), 0u);
  ModelParams p = ModelParams::tuned(3, Geometry::ring, 0, 0);
  p.t = -1.0;
  EXPECT_EQ(message(p).rfind("t:", 0), 0u);
  p = ModelParams::tuned(3, Geometry::ring, 0, 0);
  p.u_site.pop_back();
  EXPECT_EQ(message(p).rfind("u_site", 0), 0u);
  p = ModelParams::tuned(3, Geometry::ring, 0, 0);
  p.n_down = 4;
  EXPECT_EQ(message(p).rfind("n_down", 0), 0u);
  EXPECT_THROW((void)build_hamiltonian(ModelParams::tuned(2, Geometry::ring, 0, 0)),
               std::domain_error);
}

TEST(DoubleOccupancyEnergy, Examples) {
  const std::vector<double> u = {5, 0, 0};
  EXPECT_EQ(double_occupancy_energy(OccupationState{0b000011}, u), 5.0);
  EXPECT_EQ(double_occupancy_energy(OccupationState{0b001001}, std::vector<double>{7, 8, 9}), 0.0);
  EXPECT_EQ(double_occupancy_energy(OccupationState{0b110011}, std::vector<double>{2, 3, 4}), 6.0);
}

TEST(BuildHamiltonian, StructuralInvariants) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50, 50);
  for (const Geometry g : {Geometry::ring, Geometry::chain}) {
    for (int nu = 0; nu <= 3; ++nu) {
      for (int nd = 0; nd <= 3; ++nd) {
        ModelParams p = ModelParams::tuned(3, g, 0, 0);
        p.u_site = {u(rng), u(rng), u(rng)};
        p.n_up = nu;
        p.n_down = nd;
        const auto h = build_hamiltonian(p);
        const std::size_t dim = h.basis.size();
        for (std::size_t r = 0; r < dim; ++r) {
          EXPECT_EQ(h.entries(r, r), double_occupancy_energy(h.basis[r], p.u_site));
          for (std::size_t c = 0; c < dim; ++c) {
            EXPECT_EQ(h.entries(r, c), h.entries(c, r));
            if (r != c) {
              const double x = h.entries(r, c);
              EXPECT_TRUE(x == 0.0 || x == 1.0 || x == -1.0) << x;
            }
          }
        }
      }
    }
  }
}

// Sector matrix == projection of the Kronecker-built full Fock Hamiltonian.
TEST(BuildHamiltonian, MatchesFullFockOracleExactly) {
  for (const int L : {2, 3}) {
    for (const Geometry g : {Geometry::ring, Geometry::chain}) {
      if (L == 2 && g == Geometry::ring) continue;
      const std::vector<double> u = L == 2 ? std::vector<double>{3.5, -1.25}
                                           : std::vector<double>{3.5, -1.25, 7.0};
      const Matrix full = oracle::full_fock_hamiltonian(L, g == Geometry::ring, u);
      for (int nu = 0; nu <= L; ++nu) {
        for (int nd = 0; nd <= L; ++nd) {
          ModelParams p = ModelParams::tuned(L, g, 0, 0);
          p.u_site = u;
          p.n_up = nu;
          p.n_down = nd;
          const auto h = build_hamiltonian(p);
          const auto idx = oracle::sector_indices(L, nu, nd);
          EXPECT_EQ(h.entries, oracle::submatrix(full, idx)) << "L=" << L << " " << nu << nd;
        }
      }
    }
  }
}

// Closed form of the 2-site Sz=0 sector, U0/2 - sqrt(U0^2/4 + 4t^2), checked
// against char-poly roots of the oracle's sector block before use.
TEST(BuildHamiltonian, TwoSiteGroundEnergyClosedForm) {
  for (const double u0 : {0.0, 4.0, -4.0, 12.5}) {
    const double closed = u0 / 2 - std::sqrt(u0 * u0 / 4 + 4.0);
    const Matrix block = oracle::submatrix(oracle::full_fock_hamiltonian(2, false, {u0, u0}),
                                           oracle::sector_indices(2, 1, 1));
    const auto roots = oracle::polynomial_roots(oracle::characteristic_polynomial(block));
    ASSERT_NEAR(roots.front(), closed, 1e-9);

    const auto spec = eigh(build_hamiltonian(ModelParams::tuned(2, Geometry::chain, u0, 0)).entries);
    EXPECT_NEAR(spec.eigenvalues.front(), closed, 1e-12);
  }
}

TEST(BuildHamiltonian, TwoSiteFreeSpectrum) {
  const auto spec = eigh(build_hamiltonian(ModelParams::tuned(2, Geometry::chain, 0, 0)).entries);
  ASSERT_EQ(spec.size(), 4u);
  const std::vector<double> expected = {-2, 0, 0, 2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(spec.eigenvalues[i], expected[i], 1e-12);
}

TEST(BuildHamiltonian, FreeElectronsFillLowestOrbitals) {
  for (const Geometry g : {Geometry::ring, Geometry::chain}) {
    ModelParams one = ModelParams::tuned(3, g, 0, 0);
    one.n_down = 0;
    const auto orbitals = eigh(build_hamiltonian(one).entries).eigenvalues;
    const auto two = eigh(build_hamiltonian(ModelParams::tuned(3, g, 0, 0)).entries).eigenvalues;
    EXPECT_NEAR(two.front(), 2 * orbitals.front(), 1e-12);
  }
  const auto ring = eigh(build_hamiltonian(ModelParams::tuned(3, Geometry::ring, 0, 0)).entries);
  EXPECT_NEAR(ring.eigenvalues.front(), -4.0, 1e-12);
}

TEST(BuildHamiltonian, SignConventionLeavesSpectrumUnchanged) {
  const ModelParams p = ModelParams::tuned(3, Geometry::ring, 3.0, -7.0);
  const auto a = eigh(build_hamiltonian(p, SignConvention::ascending).entries).eigenvalues;
  const auto b = eigh(build_hamiltonian(p, SignConvention::descending).entries).eigenvalues;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12);
}

}  // namespace
}  // namespace entswitch
