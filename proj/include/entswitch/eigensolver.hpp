// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file eigensolver.hpp
 * @brief Full eigendecomposition of small dense real symmetric matrices.
 *
 * Cyclic Jacobi: each sweep rotates away every off-diagonal pair (p, q) once.
 * Converged when the off-diagonal Frobenius norm drops below
 * kJacobiTolerance * ||A||_F; gives up after kJacobiMaxSweeps sweeps.
 */

#pragma once

#include <entswitch/errors.hpp>
#include <entswitch/matrix.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entswitch {

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Ascending eigenvalues with matching orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;  ///< eigenvectors[i] pairs with eigenvalues[i]

  [[nodiscard]] std::size_t size() const noexcept { return eigenvalues.size(); }
  [[nodiscard]] std::span<const double> vector(std::size_t i) const noexcept {
    return eigenvectors[i];
  }
  /// eps_1 - eps_0, or 0 for a one-dimensional space.
  [[nodiscard]] double gap() const noexcept {
    return eigenvalues.size() > 1 ? eigenvalues[1] - eigenvalues[0] : 0.0;
  }
};

namespace detail {

[[nodiscard]] inline double off_diagonal_norm(const Matrix& a) noexcept {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) s += a(p, q) * a(p, q);
  return std::sqrt(s);
}

/// Rotate rows/cols p and q of `a` so that a(p, q) vanishes, accumulating into `v`.
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) noexcept {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace detail

/**
 * Eigendecomposition of a real symmetric matrix.
 *
 * Throws std::domain_error for empty, non-square or non-symmetric input and
 * NumericalError when the sweep budget runs out. Each eigenvector's largest
 * component (first one on ties) is made positive, so output is reproducible.
 */
[[nodiscard]] inline Spectrum eigh(const Matrix& matrix) {
  const std::size_t n = matrix.rows();
  if (n == 0 || !matrix.square()) throw std::domain_error("eigh: matrix must be square, dim >= 1");
  if (const double asym = matrix.asymmetry(); asym > kSymmetryTolerance) {
    throw std::domain_error("eigh: matrix is not symmetric (max |a_ij - a_ji| = " +
                            std::to_string(asym) + ")");
  }

  Matrix a = matrix;
  Matrix v = Matrix::identity(n);
  const double threshold = kJacobiTolerance * matrix.frobenius();

  bool converged = detail::off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    converged = detail::off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw NumericalError("eigh: no convergence after " + std::to_string(kJacobiMaxSweeps) +
                         " sweeps, off-diagonal residual " +
                         std::to_string(detail::off_diagonal_norm(a)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (const std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k));
    std::vector<double> vec(n);
    std::size_t lead = 0;
    for (std::size_t r = 0; r < n; ++r) {
      vec[r] = v(r, k);
      if (std::abs(vec[r]) > std::abs(vec[lead]) + 1e-12) lead = r;
    }
    if (vec[lead] < 0.0) {
      for (double& x : vec) x = -x;
    }
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

/// Indices i with eps_i - eps_0 <= rel_tol * max(1, |eps_0|); always contains 0.
[[nodiscard]] inline std::vector<std::size_t> ground_manifold(
    const Spectrum& spec, double rel_tol = kDegeneracyTolerance) {
  if (spec.size() == 0) throw std::domain_error("ground_manifold: empty spectrum");
  if (rel_tol < 0.0) throw std::domain_error("ground_manifold: rel_tol must be >= 0");
  const double e0 = spec.eigenvalues.front();
  const double window = rel_tol * std::max(1.0, std::abs(e0));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i == 0 || spec.eigenvalues[i] - e0 <= window) out.push_back(i);
  }
  return out;
}

}  // namespace entswitch
