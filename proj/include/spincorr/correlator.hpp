// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file correlator.hpp
 * @brief Formation-probability correlators C_m = ⟨σ±^(s) ⊗ ... ⊗ σ±^(s+m-1)⟩
 *        and E_m = |C_m|².
 *
 * σ+ maps ↓ to ↑. The operator string therefore connects a "source"
 * configuration (↓ under every Raise, ↑ under every Lower) to its
 * window-flipped "target", and C_m sums ψ*(target ⊗ tail) ψ(source ⊗ tail)
 * over the configurations of the sites outside the window.
 */

#pragma once

#include <complex>
#include <vector>

#include "spincorr/eigensolver.hpp"

namespace spincorr {

enum class Ladder { Raise, Lower };

struct SignPattern {
  std::vector<Ladder> ops;
  int start_site = 1;

  int order() const noexcept { return static_cast<int>(ops.size()); }
};

/// σ+ σ- σ+ ... of length m starting at `start_site`.
SignPattern alternating_pattern(int m, int start_site = 1);
SignPattern uniform_pattern(int m, Ladder op, int start_site = 1);

/// Human-readable form such as "+-+-".
std::string to_string(const SignPattern& pattern);

struct CorrelatorResult {
  std::complex<double> c_value;
  double e_value = 0.0;
  int order_m = 0;
  SignPattern pattern;
};

CorrelatorResult pure_correlator(const PureState& state, const SignPattern& pattern);

/// Tr(ρ_β A) with ρ_β = Σ_n w_n |n⟩⟨n|, using signed diagonal elements.
CorrelatorResult thermal_correlator(const SpectralDecomposition& spectrum,
                                    const ThermalWeights& weights, const SignPattern& pattern);

/// Exhaustive search over the 2^m sign patterns at start site 1 (m <= 12).
/// Ties resolve to the lexicographically first pattern, Raise before Lower.
SignPattern best_pattern(const PureState& state, int m);

inline constexpr int kMaxBestPatternOrder = 12;

}  // namespace spincorr
