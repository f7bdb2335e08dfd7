// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

void check_nk(int n, int k) {
  if (n < 1 || n > kMaxLadderSites || k < 1 || k > n) {
    throw ArgumentError("bounds need 1 <= k <= n <= 24");
  }
}

void integer_partitions(int remaining, int max_part, std::vector<int>& current,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    integer_partitions(remaining - part, part, current, visit);
    current.pop_back();
  }
}

}  // namespace

double entanglement_bound(int n, int k) {
  check_nk(n, k);
  const int blocks = (n + k - 1) / k;
  return std::ldexp(1.0, -2 * blocks);
}

double nonlocality_bound(int n, int k) {
  check_nk(n, k);
  if (k == 1) return std::ldexp(1.0, -n);
  const int exponent = 2 * (n / k) + std::min(n % k, 2);
  return std::ldexp(1.0, -exponent);
}

double partition_bound(const Partition& p, BoundMode mode) {
  if (p.blocks.empty() || p.blocks.size() != p.block_flags.size()) {
    throw ArgumentError("partition needs one flag per block");
  }
  std::vector<int> seen;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw ArgumentError("partition contains an empty block");
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != static_cast<int>(i) + 1) {
      throw ArgumentError("blocks must be disjoint and cover sites 1..N");
    }
  }
  int exponent = 0;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto size = static_cast<int>(p.blocks[i].size());
    if (p.block_flags[i] == BlockKind::Classical) {
      if (mode == BoundMode::Entanglement && size != 1) {
        throw ArgumentError("separable blocks must be single spins in entanglement mode");
      }
      exponent += mode == BoundMode::Entanglement ? 2 : size;
    } else {
      exponent += 2;
    }
  }
  return std::ldexp(1.0, -exponent);
}

std::string ShapeBound::label() const {
  std::string s;
  for (int b : quantum_blocks) {
    if (!s.empty()) s += 'x';
    s += std::to_string(b);
  }
  if (classical_sites > 0) {
    if (!s.empty()) s += '+';
    s += std::to_string(classical_sites) + "L";
  }
  return s;
}

std::vector<ShapeBound> shape_ladder(int n, BoundMode mode) {
  check_nk(n, 1);
  std::vector<ShapeBound> out;
  std::vector<int> current;
  if (mode == BoundMode::Entanglement) {
    integer_partitions(n, n, current, [&](const std::vector<int>& parts) {
      out.push_back({parts, 0, std::ldexp(1.0, -2 * static_cast<int>(parts.size()))});
    });
  } else {
    for (int local = 0; local <= n; ++local) {
      if (local == n) {
        out.push_back({{}, n, std::ldexp(1.0, -n)});
        continue;
      }
      // Non-local blocks of size 1 never beat a local spin; keep sizes >= 2.
      integer_partitions(n - local, n - local, current, [&](const std::vector<int>& parts) {
        if (parts.back() < 2) return;
        const int exponent = 2 * static_cast<int>(parts.size()) + local;
        out.push_back({parts, local, std::ldexp(1.0, -exponent)});
      });
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ShapeBound& a, const ShapeBound& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    const int ma = a.quantum_blocks.empty() ? 0 : a.quantum_blocks.front();
    const int mb = b.quantum_blocks.empty() ? 0 : b.quantum_blocks.front();
    return ma < mb;
  });
  return out;
}

DepthCertificate certify(double e_value, int n) {
  if (std::isnan(e_value) || e_value < 0.0) throw ArgumentError("E must be non-negative");
  check_nk(n, 1);
  DepthCertificate cert;
  cert.e_value = e_value;
  cert.n_sites = n;
  cert.unexplainable = e_value > 0.25 + kThresholdTolerance;
  for (int k = 1; k <= n; ++k) {
    cert.ent_ladder.push_back({k, entanglement_bound(n, k)});
    cert.nl_ladder.push_back({k, nonlocality_bound(n, k)});
  }
  if (!cert.unexplainable) {
    const auto depth = [&](const std::vector<LadderStep>& ladder) -> std::optional<int> {
      for (const auto& step : ladder) {
        if (e_value <= step.threshold + kThresholdTolerance) return step.k;
      }
      return std::nullopt;
    };
    cert.ent_depth = depth(cert.ent_ladder);
    cert.nl_depth = depth(cert.nl_ladder);
  }
  return cert;
}

}  // namespace spincorr
