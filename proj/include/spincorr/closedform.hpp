// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file closedform.hpp
 * @brief Analytic correlators: the 4-site XXZ ring (ground and thermal) and
 *        the Majumdar-Ghosh dimer ground state.
 *
 * The 4-site XXZ levels are quoted in spin-1/2 units (S = σ/2), one quarter
 * of the Pauli-normalised operator from hamiltonian.hpp. A thermal value at
 * inverse temperature β therefore corresponds to β/4 on the Pauli spectrum.
 */

#pragma once

#include <array>

namespace spincorr {

/// Ratio between spin-1/2 and Pauli energy units for two-body couplings.
inline constexpr double kSpinHalfEnergyUnit = 0.25;

struct Xxz4Levels {
  double delta = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  double e_delta_level = 0.0;
  /// Signed ⟨n|σ+σ-σ+σ-|n⟩ for |E_+⟩, |E_-⟩ and |E_Δ⟩.
  double a_plus = 0.0;
  double a_minus = 0.0;
  double a_delta = 0.0;

  /// All 16 levels with multiplicity, unsorted.
  std::array<double, 16> spectrum() const;
};

Xxz4Levels xxz4_levels(double delta);

enum class Xxz4Formula {
  Spectral,  ///< signed diagonal elements weighted over the 16 levels
  Printed,   ///< literal transcription of the published expression
};

/// E_4 at inverse temperature beta (spin-1/2 units); beta may be +inf.
double xxz4_thermal(double delta, double beta, Xxz4Formula formula = Xxz4Formula::Spectral);

/// (1/16)(1 + Δ/√(8+Δ²))²; domain error for Δ <= -1.
double xxz4_zero_t(double delta);

/// Δ above which the 4-site ground state exceeds E_4 = 1/8: 2√(√2 - 1).
double xxz4_three_body_threshold();

struct MgGroundState {
  int n_sites = 0;
  /// ⟨ψ1+ψ2|ψ1+ψ2⟩ = 2^{2-N/2}(2^{N/2-1} + (-1)^{N/2}); for N/2 even this is
  /// 2^{-N/2+2}(1 + 2^{N/2-1}).
  double norm_sq = 0.0;
  /// ⟨ψ1|ψ2⟩ = (-1)^{N/2} 2^{1-N/2}.
  double overlap = 0.0;
};

MgGroundState mg_ground_state(int n);

/// True when the alternating N-site correlator vanishes identically (N/2 odd).
bool mg_parity_vanishes(int n);

/// 1/(1+2^{N/2-1})² for N/2 even, 0 for N/2 odd.
double mg_e_n(int n);

/// Dimer matrix elements ⟨ψi|A|ψj⟩ of the alternating window operator A.
struct MgElements {
  double a11 = 0.0;
  double a21 = 0.0;  ///< equals a12, all entries are real
  double a22 = 0.0;
};

/// Elements for the full window (m = N) and for m = N - 2.
MgElements mg_elements_n(int n);
MgElements mg_elements_n_minus_2(int n);

/// (N-2)-site alternating correlator summed from mg_elements_n_minus_2:
/// 1/(1+2^{N/2-1})² for N/2 even, 0 for N/2 odd. Agrees with ED.
double mg_e_n_minus_2(int n);

/// The quarter-of-E_N form, (1/4)/(1+2^{N/2-1})². Kept for comparison only;
/// it disagrees with the element sum above and with ED.
double mg_e_n_minus_2_quarter(int n);

}  // namespace spincorr
