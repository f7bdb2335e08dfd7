// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/basis.hpp"

#include <array>
#include <bit>
#include <string>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

constexpr int kTable = kMaxSites + 1;

constexpr auto make_binomials() {
  std::array<std::array<std::uint64_t, kTable + 1>, kTable + 1> c{};
  for (int n = 0; n <= kTable; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
  }
  return c;
}

constexpr auto kBinomials = make_binomials();

void check_sites(int n_sites) {
  if (n_sites < kMinSites || n_sites > kMaxSites) {
    throw ArgumentError("n_sites must lie in [" + std::to_string(kMinSites) + ", " +
                        std::to_string(kMaxSites) + "], got " + std::to_string(n_sites));
  }
}

}  // namespace

std::uint64_t binomial(int n, int k) noexcept {
  if (n < 0 || k < 0 || k > n || n > kTable) return 0;
  return kBinomials[n][k];
}

BasisConfig::BasisConfig(Bits bits, int n_sites) : bits_(bits), n_sites_(n_sites) {
  check_sites(n_sites);
  if ((bits & ~low_mask(n_sites)) != 0) {
    throw ArgumentError("configuration has bits set above site " + std::to_string(n_sites));
  }
}

bool BasisConfig::is_up(int site) const {
  if (site < 1 || site > n_sites_) throw ArgumentError("site out of range");
  return ((bits_ >> (site - 1)) & 1U) != 0;
}

int BasisConfig::n_up() const noexcept { return std::popcount(bits_); }

SectorIndex::SectorIndex(int n_sites, int n_up) : n_sites_(n_sites), n_up_(n_up) {
  check_sites(n_sites);
  if (n_up < 0 || n_up > n_sites) {
    throw ArgumentError("n_up must lie in [0, n_sites], got " + std::to_string(n_up));
  }
  configs_.reserve(binomial(n_sites, n_up));
  if (n_up == 0) {
    configs_.push_back(0);
    return;
  }
  // Gosper's hack walks same-popcount integers in ascending order.
  Bits v = low_mask(n_up);
  const Bits limit = Bits{1} << n_sites;
  while (v < limit) {
    configs_.push_back(v);
    const Bits t = v | (v - 1);
    const Bits lowest = (~t & (t + 1));
    v = (t + 1) | (((lowest - 1) >> (std::countr_zero(v) + 1)));
    if (v == 0) break;
  }
}

std::optional<std::size_t> SectorIndex::index_of(Bits bits) const noexcept {
  if ((bits & ~low_mask(n_sites_)) != 0 || std::popcount(bits) != n_up_) return std::nullopt;
  // Colex rank: sum of C(p_i, i+1) over set-bit positions p_0 < p_1 < ...
  std::size_t rank = 0;
  int i = 0;
  while (bits != 0) {
    const int p = std::countr_zero(bits);
    rank += kBinomials[p][i + 1];
    bits &= bits - 1;
    ++i;
  }
  return rank;
}

SectorIndex enumerate_sector(int n_sites, int n_up) { return SectorIndex(n_sites, n_up); }

BasisConfig config_pattern(NeelKind kind, int n_sites) {
  check_sites(n_sites);
  if (n_sites % 2 != 0) throw ArgumentError("Néel pattern needs an even number of sites");
  const Bits odd_up = 0x55555555U & low_mask(n_sites);
  return BasisConfig(kind == NeelKind::OddUp ? odd_up : (~odd_up & low_mask(n_sites)), n_sites);
}

BasisConfig flip_range(const BasisConfig& c, int first, int last) {
  if (first < 1 || first > last || last > c.n_sites()) {
    throw ArgumentError("flip_range needs 1 <= first <= last <= N");
  }
  const Bits mask = low_mask(last) & ~low_mask(first - 1);
  return BasisConfig(c.bits() ^ mask, c.n_sites());
}

}  // namespace spincorr
