// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracles.hpp
 * @brief Brute-force reference computations used only by the tests.
 *
 * Nothing here calls into the bitmask sign code, the sector enumerator or
 * the Hamiltonian builder. Fermion operators are assembled as Kronecker
 * products of 2x2 matrices (Jordan-Wigner strings), so the full Fock space
 * of L sites is 4^L-dimensional with basis index == occupation bitmask.
 */

#pragma once

#include <entswitch/matrix.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace entswitch::oracle {

/// Kronecker product a (x) b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline Matrix add(Matrix a, const Matrix& b, double scale = 1.0) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += scale * b(i, j);
  return a;
}

/// Annihilator of mode m among n_modes, as a 2^n_modes matrix.
/// Tensor factors run from mode n_modes-1 (most significant) down to mode 0,
/// with a parity string Z on every mode below m.
inline Matrix annihilator(int mode, int n_modes) {
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  Matrix z(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const Matrix id = Matrix::identity(2);
  Matrix out = Matrix::identity(1);
  for (int k = n_modes - 1; k >= 0; --k) {
    out = kron(out, k == mode ? a : (k < mode ? z : id));
  }
  return out;
}

/// Full Fock-space Hubbard Hamiltonian, bonds given as 0-based site pairs.
inline Matrix full_fock_hamiltonian(int sites, bool ring, const std::vector<double>& u_site,
                                    double t = 1.0) {
  const int n_modes = 2 * sites;
  std::vector<Matrix> c;
  for (int m = 0; m < n_modes; ++m) c.push_back(annihilator(m, n_modes));
  std::vector<Matrix> cd;
  for (const auto& op : c) cd.push_back(transpose(op));

  std::vector<std::pair<int, int>> links;
  for (int i = 0; i + 1 < sites; ++i) links.emplace_back(i, i + 1);
  if (ring) links.emplace_back(sites - 1, 0);

  const std::size_t dim = std::size_t{1} << n_modes;
  Matrix h(dim, dim);
  for (const auto& [i, j] : links) {
    for (int s = 0; s < 2; ++s) {
      const int mi = 2 * i + s;
      const int mj = 2 * j + s;
      h = add(h, matmul(cd[mi], c[mj]), -t);
      h = add(h, matmul(cd[mj], c[mi]), -t);
    }
  }
  for (int i = 0; i < sites; ++i) {
    const Matrix nu = matmul(cd[2 * i], c[2 * i]);
    const Matrix nd = matmul(cd[2 * i + 1], c[2 * i + 1]);
    h = add(h, matmul(nu, nd), u_site[static_cast<std::size_t>(i)]);
  }
  return h;
}

/// Fock indices with the requested up/down counts, by exhaustive scan.
inline std::vector<std::size_t> sector_indices(int sites, int n_up, int n_down) {
  std::vector<std::size_t> out;
  const std::size_t dim = std::size_t{1} << (2 * sites);
  for (std::size_t b = 0; b < dim; ++b) {
    int up = 0;
    int down = 0;
    for (int i = 0; i < sites; ++i) {
      up += static_cast<int>((b >> (2 * i)) & 1u);
      down += static_cast<int>((b >> (2 * i + 1)) & 1u);
    }
    if (up == n_up && down == n_down) out.push_back(b);
  }
  return out;
}

inline Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

/// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier,
/// coefficients from x^n down to x^0.
inline std::vector<double> characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> coeff(n + 1, 0.0);
  coeff[0] = 1.0;
  Matrix m = Matrix(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = matmul(a, m);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[k - 1];
    coeff[k] = -matmul(a, next).trace() / static_cast<double>(k);
    m = std::move(next);
  }
  return coeff;
}

/// All roots of a monic polynomial by Durand-Kerner iteration, real parts sorted.
inline std::vector<double> polynomial_roots(const std::vector<double>& coeff) {
  using cd = std::complex<double>;
  const std::size_t n = coeff.size() - 1;
  std::vector<cd> z(n);
  double bound = 1.0;
  for (std::size_t k = 1; k <= n; ++k) bound = std::max(bound, 1.0 + std::abs(coeff[k]));
  for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(bound * 0.9, 0.4 + 6.283185307179586 * i / n);
  const auto eval = [&](cd x) {
    cd p = coeff[0];
    for (std::size_t k = 1; k <= n; ++k) p = p * x + coeff[k];
    return p;
  };
  for (int iter = 0; iter < 20000; ++iter) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const cd step = eval(z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15 * bound) break;
  }
  std::vector<double> out;
  for (const auto& r : z) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

/// Lowest eigenvector by power iteration on (c I - H), c a Gershgorin upper bound.
/// Only suitable for gapped ground states; the sign is fixed so the largest entry is positive.
inline std::vector<double> ground_vector(const Matrix& h, int iterations = 200000) {
  const std::size_t n = h.rows();
  double c = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::abs(h(r, k));
    c = std::max(c, s);
  }
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i);
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      double s = c * v[r];
      for (std::size_t k = 0; k < n; ++k) s -= h(r, k) * v[k];
      w[r] = s;
    }
    double norm = 0.0;
    for (const double x : w) norm += x * x;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= norm;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    v = std::move(w);
    if (change < 1e-15) break;
  }
  return v;
}

/// Tensor partial trace of a full-Fock density matrix onto modes 0 and 1 (site 1).
inline Matrix trace_to_first_site(const Matrix& rho_full) {
  Matrix out(4, 4);
  const std::size_t env = rho_full.rows() / 4;
  for (std::size_t b = 0; b < env; ++b)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t a2 = 0; a2 < 4; ++a2) out(a, a2) += rho_full(b * 4 + a, b * 4 + a2);
  return out;
}

/// Entropy of a diagonal probability vector, in bits.
inline double shannon_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (const double x : p)
    if (x > 0.0) s -= x * std::log2(x);
  return s;
}

/**
 * Site-1 entropy of the equal-weight (infinite temperature) mixture over an
 * (n_up, n_down) sector, from occupation counting: every sector configuration
 * has probability 1/|sector|, and the site-1 reduced matrix is diagonal.
 */
inline double infinite_temperature_site1_entropy(int sites, int n_up, int n_down) {
  const auto idx = sector_indices(sites, n_up, n_down);
  std::vector<double> p(4, 0.0);
  for (const std::size_t b : idx) p[b & 3u] += 1.0 / static_cast<double>(idx.size());
  return shannon_bits(p);
}

}  // namespace entswitch::oracle
