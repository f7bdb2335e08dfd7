// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spincorr/basis.hpp"
#include "spincorr/hamiltonian.hpp"

namespace spincorr {

/// Normalised amplitude vector over the full space (sector == nullptr) or a
/// fixed-magnetization sector.
struct PureState {
  int n_sites = 0;
  std::shared_ptr<const SectorIndex> sector;
  std::vector<std::complex<double>> amplitudes;
  double energy = 0.0;
  /// Ground level numerically degenerate (gap below kDegeneracyGap).
  bool degenerate = false;
  /// Distance to the next level, NaN when not computed.
  double gap = std::numeric_limits<double>::quiet_NaN();
  int matvecs = 0;

  std::size_t dimension() const noexcept { return amplitudes.size(); }
  Bits config_at(std::size_t i) const noexcept { return sector ? (*sector)[i] : Bits(i); }
  std::optional<std::size_t> index_of(Bits bits) const noexcept;
  double norm() const;
};

/// Build a state from arbitrary amplitudes on the full space; normalises.
PureState make_state(int n_sites, std::vector<std::complex<double>> amplitudes);

inline constexpr double kDegeneracyGap = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2021ULL;

struct LanczosOptions {
  /// Residual target relative to the spectral-norm estimate.
  double tol = 1e-10;
  int max_basis = 60;
  int max_restarts = 400;
  std::uint64_t seed = kDefaultSeed;
  /// Restrict the Krylov space to the operator's symmetric subspace.
  bool use_symmetry = true;
  /// Run a second, deflated solve (unrestricted) to measure the gap.
  bool check_degeneracy = true;
  /// Optional start vector (e.g. the previous point of a parameter sweep).
  const std::vector<double>* start = nullptr;
};

/// Lowest eigenpair by Lanczos with full reorthogonalisation. Throws
/// ConvergenceError carrying the best residual if the restart cap is hit.
PureState ground_state(const LinearOperator& op, double tol);
PureState ground_state(const LinearOperator& op, const LanczosOptions& options);

/// Real ground vector and energy without the PureState conversion; used by
/// sweeps that warm-start from the previous point.
struct RealEigenpair {
  std::vector<double> vector;
  double energy = 0.0;
  double residual = 0.0;
  int matvecs = 0;
};
RealEigenpair lanczos_lowest(const LinearOperator& op, const LanczosOptions& options,
                             const std::vector<std::vector<double>>& deflate = {});

/// Complete eigensystem of a small operator (dimension <= kMaxDenseDimension).
struct SpectralDecomposition {
  int n_sites = 0;
  std::shared_ptr<const SectorIndex> sector;
  Eigen::VectorXd eigenvalues;   ///< ascending
  Eigen::MatrixXd eigenvectors;  ///< column n belongs to eigenvalues[n]

  std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
  PureState state(std::size_t n) const;
};

SpectralDecomposition full_spectrum(const LinearOperator& op);

struct ThermalWeights {
  double beta = 0.0;
  std::vector<double> weights;
};

/// Gibbs weights e^{-β(E_n-E_0)}/Z'. beta = +inf selects the ground level
/// (split evenly if degenerate).
ThermalWeights thermal_weights(const SpectralDecomposition& spectrum, double beta);

}  // namespace spincorr
