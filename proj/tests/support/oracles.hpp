// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by the tests. They are deliberately
// naive: explicit matrices, brute-force enumeration, literal formulas.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "spincorr/correlator.hpp"
#include "spincorr/eigensolver.hpp"

namespace spincorr::oracle {

using cd = std::complex<double>;

/// Ising / XXZ / MG Hamiltonian assembled from 2x2 Pauli Kronecker products
/// on the full 2^N space. Bit j of a row index is site j+1, 1 = up.
Eigen::MatrixXd pauli_ising(int n, double g, double k_next);
Eigen::MatrixXd pauli_xxz(int n, double delta);
Eigen::MatrixXd pauli_mg(int n);

/// Dense ground state (lowest column) of a full-space matrix.
PureState dense_ground(const Eigen::MatrixXd& h, int n);

/// C_m from an explicit operator string acting on the full state vector.
cd brute_correlator(const PureState& full_state, const SignPattern& pattern);

/// Thermal E at inverse temperature beta on a full-space matrix.
double dense_thermal(const Eigen::MatrixXd& h, int n, double beta, const SignPattern& pattern);

PureState ghz(int n);
/// ⊗ (|↑⟩ + |↓⟩)/√2
PureState plus_product(int n);
PureState basis_product(int n, Bits bits);
/// Normalised ψ1 + ψ2 of nearest-neighbour singlet coverings.
PureState dimer_sum(int n);
PureState random_state(int n, std::uint64_t seed);

/// Max over every set partition of n sites with blocks of size <= k of the
/// product of per-block bounds (entanglement: 1/4 per block; locality:
/// max(1/4, 2^-size) per block).
double partition_enumeration_bound(int n, int k, bool locality);

/// Kernel definitions through complex logarithms.
double p_complex(double lambda, double eta);
double theta_complex(double lambda, double eta);

/// Embed a sector state into the full space.
PureState to_full(const PureState& st);

}  // namespace spincorr::oracle
