// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hamiltonian.hpp
 * @brief Matrix-free spin-chain Hamiltonians in the product (σ_z) basis.
 *
 * All couplings are written with Pauli matrices (eigenvalues ±1):
 *
 *   Ising       H = Σ_{j<N} σz_j σz_{j+1} + g Σ_j σx_j + K Σ_{j<N-1} σz_j σz_{j+2}   (open)
 *   XXZ         H = Σ_j (σx_j σx_{j+1} + σy_j σy_{j+1} + Δ σz_j σz_{j+1})           (periodic)
 *   Majumdar-   H = Σ_j σ_j·σ_{j+1} + ½ Σ_j σ_j·σ_{j+2}                            (periodic)
 *   Ghosh
 *
 * A σxσx + σyσy bond flips an antiparallel pair with amplitude 2.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "spincorr/basis.hpp"

namespace spincorr {

struct IsingModel {
  double g = 0.0;
  double k_next = 0.0;
};

struct XxzModel {
  double delta = 1.0;
};

struct MajumdarGhoshModel {};

using Model = std::variant<IsingModel, XxzModel, MajumdarGhoshModel>;

enum class Boundary { Open, Periodic };

struct ChainSpec {
  Model model;
  int n_sites = 0;
  Boundary boundary = Boundary::Open;
};

ChainSpec ising_chain(int n_sites, double g, double k_next = 0.0);
ChainSpec xxz_chain(int n_sites, double delta);
ChainSpec majumdar_ghosh_chain(int n_sites);

/// Symmetry whose even subspace contains the ground state the correlators
/// are evaluated on. Used to seed and stabilise Lanczos.
enum class Symmetry {
  None,
  SpinFlip,     ///< global σx string, eigenvalue +1
  Translation,  ///< one-site cyclic shift, eigenvalue +1
};

class LinearOperator {
 public:
  std::size_t dimension() const noexcept { return dimension_; }
  int n_sites() const noexcept { return n_sites_; }
  const std::shared_ptr<const SectorIndex>& sector() const noexcept { return sector_; }
  bool conserves_magnetization() const noexcept { return conserves_; }
  Symmetry symmetry() const noexcept { return symmetry_; }
  /// Eigenvalue of the symmetry on the targeted ground state (±1).
  double symmetry_sign() const noexcept { return symmetry_sign_; }

  /// Basis configuration of row `i`.
  Bits config_at(std::size_t i) const noexcept { return sector_ ? (*sector_)[i] : Bits(i); }
  std::optional<std::size_t> index_of(Bits bits) const noexcept;

  void apply(std::span<const double> in, std::span<double> out) const;
  void apply(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out) const;

  /// Diagonal matrix element of configuration `bits`.
  double diagonal(Bits bits) const noexcept;

  /// Replace v by its projection onto the +1 eigenspace of symmetry().
  void project_symmetric(std::span<double> v) const;

 private:
  friend LinearOperator build(const ChainSpec& spec, std::optional<int> n_up);

  struct Bond {
    int a;
    int b;
    double coupling;
  };

  // Sites below this are flipped inside the row loop, higher ones in
  // separate streaming passes.
  static constexpr int kGatherSites = 10;

  double bond_diagonal(Bits bits) const noexcept;

  template <typename T>
  void apply_impl(std::span<const T> in, std::span<T> out) const;

  std::size_t dimension_ = 0;
  int n_sites_ = 0;
  std::shared_ptr<const SectorIndex> sector_;
  bool conserves_ = false;
  Symmetry symmetry_ = Symmetry::None;
  double symmetry_sign_ = 1.0;
  std::vector<Bond> zz_bonds_;
  std::vector<Bond> exchange_bonds_;  // σxσx + σyσy, amplitude 2·coupling
  double transverse_ = 0.0;           // g Σ σx
  std::vector<double> diagonal_;      // cached per basis row
};

/// Operator for `spec`, optionally restricted to the sector with `n_up` spins
/// up. Sectors are only available for magnetization-conserving models.
LinearOperator build(const ChainSpec& spec, std::optional<int> n_up = std::nullopt);

inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Explicit matrix ⟨e_i|H|e_j⟩; capacity error above kMaxDenseDimension.
Eigen::MatrixXd dense_matrix(const LinearOperator& op);

}  // namespace spincorr
