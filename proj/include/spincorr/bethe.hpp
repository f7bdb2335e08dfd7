// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bethe.hpp
 * @brief Coordinate Bethe ansatz for the ground state of the periodic XXZ
 *        chain in the gapless regime |Δ| < 1.
 *
 * Conventions (fixed by agreement with exact diagonalization):
 *
 *   Δ = -cos 2η,  η ∈ (0, π/2)
 *   p(λ) = i log[cosh(λ - iη) / cosh(λ + iη)]       = 2 atan(tan η · tanh λ)
 *   θ(λ) = i log[sinh(2iη + λ) / sinh(2iη - λ)]     = 2 atan(cot 2η · tanh λ)
 *   K1 = dp/dλ,  K2 = dθ/dλ
 *
 *   Bethe equations   N p(λ_j) = 2π I_j - Σ_k θ(λ_j - λ_k),
 *   ground state      I_j = -(M+1)/2 + j,  M = N/2.
 *
 * The Gaudin matrix is the Jacobian of these equations,
 * G_jk = δ_jk (N K1(λ_j) + Σ_m K2(λ_j - λ_m)) - K2(λ_j - λ_k), and
 * Σ_config |χ|² = det G / Π K1 before normalisation.
 *
 * χ(m|λ) uses the down-spin positions m in ascending order. The amplitude
 * of a configuration in the eigenvector of the Pauli-normalised XXZ operator
 * is (-1)^{Σ m} χ(m|λ).
 */

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spincorr/eigensolver.hpp"

namespace spincorr::bethe {

double momentum(double lambda, double eta);
double scattering_phase(double lambda, double eta);
double kernel_k1(double lambda, double eta);
double kernel_k2(double lambda, double eta);

/// η for a given anisotropy, η = arccos(-Δ)/2. Domain error unless |Δ| < 1.
double eta_from_delta(double delta);

struct BetheState {
  int n_sites = 0;
  int m_down = 0;
  double delta = 0.0;
  double eta = 0.0;
  std::vector<double> quantum_numbers;
  std::vector<double> roots;
  double gaudin_norm_sq = 0.0;
  double residual = 0.0;  ///< max-norm of the Bethe equations at the roots

  /// Energy of the Pauli-normalised Hamiltonian: NΔ - 4 Σ_j (Δ + cos p(λ_j)).
  double energy() const;
};

inline constexpr int kMinBetheSites = 4;
inline constexpr int kMaxBetheSites = 14;
inline constexpr int kMaxAmplitudeDown = 7;

struct SolveOptions {
  double initial_step = 0.05;
  double min_step = 1e-4;
  double tolerance = 1e-12;
  int max_newton = 60;
};

/// Ground-state roots by continuation in Δ from the free-fermion point.
BetheState solve_ground(int n, double delta, const SolveOptions& options = {});

/// Residuals of the Bethe equations, one entry per root.
Eigen::VectorXd bethe_residuals(int n, double eta, const std::vector<double>& quantum_numbers,
                                const std::vector<double>& roots);

Eigen::MatrixXd gaudin_matrix(int n, double eta, const std::vector<double>& roots);

/// Normalised χ(m|λ) for a set of 1-based down-spin positions.
std::complex<double> amplitude(const BetheState& state, std::vector<int> down_positions);

/// |χ(O_N)|² |χ(E_N)|², O = odd sites, E = even sites.
double e_n(const BetheState& state);

/// |χ*(O_{N-2},N) χ(E_{N-2},N) + χ*(O_{N-2},N-1) χ(E_{N-2},N-1)|².
double e_n_minus_2(const BetheState& state);

/// Full sector eigenvector built from the amplitudes (N <= 14).
PureState to_state(const BetheState& state);

}  // namespace spincorr::bethe
