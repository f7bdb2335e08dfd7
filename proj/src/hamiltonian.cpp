// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <type_traits>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

Bits rotate_left(Bits bits, int n_sites) noexcept {
  const Bits top = (bits >> (n_sites - 1)) & 1U;
  return ((bits << 1) | top) & low_mask(n_sites);
}

}  // namespace

ChainSpec ising_chain(int n_sites, double g, double k_next) {
  return ChainSpec{IsingModel{g, k_next}, n_sites, Boundary::Open};
}

ChainSpec xxz_chain(int n_sites, double delta) {
  return ChainSpec{XxzModel{delta}, n_sites, Boundary::Periodic};
}

ChainSpec majumdar_ghosh_chain(int n_sites) {
  return ChainSpec{MajumdarGhoshModel{}, n_sites, Boundary::Periodic};
}

std::optional<std::size_t> LinearOperator::index_of(Bits bits) const noexcept {
  if (sector_) return sector_->index_of(bits);
  if ((bits & ~low_mask(n_sites_)) != 0) return std::nullopt;
  return std::size_t{bits};
}

double LinearOperator::diagonal(Bits s) const noexcept {
  if (const auto i = index_of(s)) return diagonal_[*i];
  return bond_diagonal(s);
}

double LinearOperator::bond_diagonal(Bits s) const noexcept {
  double d = 0.0;
  for (const auto& b : zz_bonds_) {
    const bool parallel = (((s >> b.a) ^ (s >> b.b)) & 1U) == 0;
    d += parallel ? b.coupling : -b.coupling;
  }
  return d;
}

template <typename T>
void LinearOperator::apply_impl(std::span<const T> in, std::span<T> out) const {
  if (in.size() != dimension_ || out.size() != dimension_) {
    throw ArgumentError("vector length " + std::to_string(in.size()) +
                        " does not match operator dimension " + std::to_string(dimension_));
  }
  // Gather form: row i collects every coupled column, so each output entry
  // is written exactly once. Low-bit flips stay in cache and are gathered
  // here; high-bit flips are added afterwards in contiguous block passes.
  const bool full = !sector_;
  const int gathered_sites = full ? std::min(n_sites_, kGatherSites) : n_sites_;
  for (std::size_t i = 0; i < dimension_; ++i) {
    const Bits s = config_at(i);
    T acc = diagonal_[i] * in[i];
    for (const auto& b : exchange_bonds_) {
      if ((((s >> b.a) ^ (s >> b.b)) & 1U) == 0) continue;
      const Bits t = s ^ ((Bits{1} << b.a) | (Bits{1} << b.b));
      const std::size_t j = full ? std::size_t{t} : *sector_->index_of(t);
      acc += (2.0 * b.coupling) * in[j];
    }
    if (transverse_ != 0.0) {
      T flips{};
      for (int site = 0; site < gathered_sites; ++site) flips += in[s ^ (Bits{1} << site)];
      acc += transverse_ * flips;
    }
    out[i] = acc;
  }
  if (transverse_ == 0.0) return;
  for (int site = gathered_sites; site < n_sites_; ++site) {
    const std::size_t half = std::size_t{1} << site;
    for (std::size_t base = 0; base < dimension_; base += 2 * half) {
      T* lo = out.data() + base;
      T* hi = lo + half;
      const T* in_lo = in.data() + base;
      const T* in_hi = in_lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        lo[k] += transverse_ * in_hi[k];
        hi[k] += transverse_ * in_lo[k];
      }
    }
  }
}

void LinearOperator::apply(std::span<const double> in, std::span<double> out) const {
  apply_impl<double>(in, out);
}

void LinearOperator::apply(std::span<const std::complex<double>> in,
                           std::span<std::complex<double>> out) const {
  apply_impl<std::complex<double>>(in, out);
}

void LinearOperator::project_symmetric(std::span<double> v) const {
  if (v.size() != dimension_) throw ArgumentError("vector length does not match operator");
  switch (symmetry_) {
    case Symmetry::None:
      return;
    case Symmetry::SpinFlip: {
      const Bits mask = low_mask(n_sites_);
      for (std::size_t i = 0; i < dimension_; ++i) {
        const std::size_t j = *index_of(~config_at(i) & mask);
        if (j < i) continue;
        const double a = 0.5 * (v[i] + symmetry_sign_ * v[j]);
        v[i] = a;
        v[j] = symmetry_sign_ * a;
      }
      return;
    }
    case Symmetry::Translation: {
      std::vector<double> avg(dimension_, 0.0);
      for (std::size_t i = 0; i < dimension_; ++i) {
        Bits s = config_at(i);
        double acc = 0.0;
        for (int r = 0; r < n_sites_; ++r) {
          acc += v[*index_of(s)];
          s = rotate_left(s, n_sites_);
        }
        avg[i] = acc / n_sites_;
      }
      std::copy(avg.begin(), avg.end(), v.begin());
      return;
    }
  }
}

LinearOperator build(const ChainSpec& spec, std::optional<int> n_up) {
  const int n = spec.n_sites;
  if (n < kMinSites || n > kMaxSites) {
    throw ArgumentError("n_sites must lie in [2, 24], got " + std::to_string(n));
  }
  LinearOperator op;
  op.n_sites_ = n;

  const auto periodic_bonds = [n](int range, double coupling) {
    std::vector<LinearOperator::Bond> bonds;
    for (int j = 0; j < n; ++j) bonds.push_back({j, (j + range) % n, coupling});
    return bonds;
  };

  if (const auto* ising = std::get_if<IsingModel>(&spec.model)) {
    if (spec.boundary != Boundary::Open) throw ArgumentError("Ising chain uses open boundaries");
    if (n_up) throw ArgumentError("Ising transverse field breaks magnetization; no sector");
    for (int j = 0; j + 1 < n; ++j) op.zz_bonds_.push_back({j, j + 1, 1.0});
    if (ising->k_next != 0.0) {
      for (int j = 0; j + 2 < n; ++j) op.zz_bonds_.push_back({j, j + 2, ising->k_next});
    }
    op.transverse_ = ising->g;
    op.conserves_ = ising->g == 0.0;
    // With +g σx the ground state carries the sign (-1)^{#down}, so its
    // spin-flip parity is (-1)^N; for g < 0 it is positive everywhere.
    op.symmetry_ = Symmetry::SpinFlip;
    op.symmetry_sign_ = (ising->g < 0.0 || n % 2 == 0) ? 1.0 : -1.0;
  } else if (const auto* xxz = std::get_if<XxzModel>(&spec.model)) {
    if (spec.boundary != Boundary::Periodic) throw ArgumentError("XXZ chain uses periodic boundaries");
    for (const auto& b : periodic_bonds(1, 1.0)) {
      op.exchange_bonds_.push_back(b);
      op.zz_bonds_.push_back({b.a, b.b, xxz->delta});
    }
    op.conserves_ = true;
  } else {
    if (spec.boundary != Boundary::Periodic) {
      throw ArgumentError("Majumdar-Ghosh chain uses periodic boundaries");
    }
    if (n % 2 != 0 || n < 4) throw ArgumentError("Majumdar-Ghosh chain needs even N >= 4");
    for (const auto& b : periodic_bonds(1, 1.0)) {
      op.exchange_bonds_.push_back(b);
      op.zz_bonds_.push_back(b);
    }
    for (const auto& b : periodic_bonds(2, 0.5)) {
      op.exchange_bonds_.push_back(b);
      op.zz_bonds_.push_back(b);
    }
    op.conserves_ = true;
    op.symmetry_ = Symmetry::Translation;
  }

  if (n_up) {
    op.sector_ = std::make_shared<const SectorIndex>(n, *n_up);
    op.dimension_ = op.sector_->size();
  } else {
    op.dimension_ = std::size_t{1} << n;
  }
  op.diagonal_.resize(op.dimension_);
  for (std::size_t i = 0; i < op.dimension_; ++i) op.diagonal_[i] = op.bond_diagonal(op.config_at(i));
  return op;
}

Eigen::MatrixXd dense_matrix(const LinearOperator& op) {
  const std::size_t dim = op.dimension();
  if (dim > kMaxDenseDimension) {
    throw CapacityError("dense matrix limited to dimension " +
                        std::to_string(kMaxDenseDimension) + ", got " + std::to_string(dim));
  }
  Eigen::MatrixXd h(dim, dim);
  std::vector<double> e(dim, 0.0), col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    e[j] = 1.0;
    op.apply(e, col);
    for (std::size_t i = 0; i < dim; ++i) h(i, j) = col[i];
    e[j] = 0.0;
  }
  // Entries are sums of the same bond terms in either order; symmetrise to
  // remove any last-bit asymmetry from accumulation order.
  return 0.5 * (h + h.transpose());
}

}  // namespace spincorr
