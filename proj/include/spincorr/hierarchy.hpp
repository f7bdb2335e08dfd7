// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hierarchy.hpp
 * @brief Bounds on E_N for states whose entanglement or Bell non-locality is
 *        confined to blocks, and the depth certificate they imply.
 *
 * Every block that may be internally entangled (or non-local) contributes at
 * most 1/4 to E_N. A separable single spin also contributes at most 1/4, a
 * spin described by a local hidden-variable model contributes 1/2.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spincorr {

enum class BlockKind { Quantum, Classical };
enum class BoundMode { Entanglement, Locality };

struct Partition {
  std::vector<std::vector<int>> blocks;  ///< 1-based sites
  std::vector<BlockKind> block_flags;
};

double entanglement_bound(int n, int k);
double nonlocality_bound(int n, int k);
double partition_bound(const Partition& p, BoundMode mode);

struct LadderStep {
  int k = 0;
  double threshold = 0.0;
};

/// A block shape and the E_N bound it implies, e.g. "2x1x1x1x1".
struct ShapeBound {
  std::vector<int> quantum_blocks;  ///< sizes, descending
  int classical_sites = 0;          ///< Locality mode only
  double bound = 0.0;
  std::string label() const;
};

struct DepthCertificate {
  double e_value = 0.0;
  int n_sites = 0;
  /// nullopt when e_value exceeds 1/4 (no quantum state reaches it).
  std::optional<int> ent_depth;
  std::optional<int> nl_depth;
  bool unexplainable = false;
  std::vector<LadderStep> ent_ladder;
  std::vector<LadderStep> nl_ladder;
};

inline constexpr double kThresholdTolerance = 1e-12;

DepthCertificate certify(double e_value, int n);

/// All block shapes of n sites (integer partitions) with their bounds, sorted
/// by ascending bound, then by largest block. In entanglement mode a shape is
/// a multiset of block sizes; in locality mode it is a multiset of non-local
/// block sizes plus a count of locally described sites.
std::vector<ShapeBound> shape_ladder(int n, BoundMode mode);

inline constexpr int kMaxLadderSites = 24;

}  // namespace spincorr
