// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file basis.hpp
 * @brief Product states of N spin-1/2 sites encoded as bitmasks.
 *
 * Bit j of a mask is set iff the spin on site j is up. Bit positions are
 * 0-based; user-facing site labels are 1-based, so site k lives in bit k-1.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace spincorr {

using Bits = std::uint32_t;

inline constexpr int kMinSites = 2;
inline constexpr int kMaxSites = 24;

constexpr Bits low_mask(int n_sites) noexcept {
  return n_sites >= 32 ? ~Bits{0} : (Bits{1} << n_sites) - 1U;
}

/// One product state of a chain of `n_sites` spins.
class BasisConfig {
 public:
  BasisConfig(Bits bits, int n_sites);

  Bits bits() const noexcept { return bits_; }
  int n_sites() const noexcept { return n_sites_; }

  /// Spin on the 1-based `site` is up.
  bool is_up(int site) const;
  int n_up() const noexcept;

  friend bool operator==(const BasisConfig&, const BasisConfig&) = default;

 private:
  Bits bits_;
  int n_sites_;
};

/// Fixed-magnetization sector: all configurations with `n_up` spins up, in
/// ascending integer order. Ranking uses the combinatorial number system, so
/// no lookup table of size 2^N is stored.
class SectorIndex {
 public:
  SectorIndex(int n_sites, int n_up);

  int n_sites() const noexcept { return n_sites_; }
  int n_up() const noexcept { return n_up_; }
  std::size_t size() const noexcept { return configs_.size(); }
  std::span<const Bits> configs() const noexcept { return configs_; }
  Bits operator[](std::size_t i) const noexcept { return configs_[i]; }

  /// Position of `bits` in configs(), or nullopt if it is not in the sector.
  std::optional<std::size_t> index_of(Bits bits) const noexcept;

 private:
  int n_sites_;
  int n_up_;
  std::vector<Bits> configs_;
};

std::uint64_t binomial(int n, int k) noexcept;

SectorIndex enumerate_sector(int n_sites, int n_up);

enum class NeelKind { OddUp, EvenUp };

/// Néel configuration: OddUp has up spins on sites 1,3,5,...; EvenUp on 2,4,...
BasisConfig config_pattern(NeelKind kind, int n_sites);

/// Invert the spins on 1-based sites first..last inclusive.
BasisConfig flip_range(const BasisConfig& c, int first, int last);

}  // namespace spincorr
