// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scaling.hpp
 * @brief Peak of E_{N/2}(g) for the Ising chain with next-nearest coupling K
 *        and its extrapolation in 1/N.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "spincorr/eigensolver.hpp"

namespace spincorr {

struct SweepCurve {
  double k_next = 0.0;
  int n_sites = 0;
  int order_m = 0;
  std::vector<double> g_grid;
  std::vector<double> e_values;
};

struct SweepOptions {
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;
  /// Independent grid points run on up to this many threads; 0 selects
  /// SPIN_CORR_WORKERS or 1.
  int workers = 0;
  /// Seed each point from the previous converged vector of the same worker.
  bool warm_start = true;
};

/// Worker count from SPIN_CORR_WORKERS, falling back to `fallback`.
int configured_workers(int fallback = 1);

/// E_{N/2} with the alternating pattern at site 1 on each grid point.
SweepCurve sweep(double k_next, int n, const std::vector<double>& g_grid,
                 const SweepOptions& options = {});

/// Vertex of the parabola through the discrete maximum and its neighbours.
/// Throws ArgumentError when the maximum sits on the grid boundary.
double find_peak(const SweepCurve& curve);

/// `count` points on [lo, hi] inclusive.
std::vector<double> linear_grid(double lo, double hi, int count);

struct PeakSearch {
  int coarse_points = 61;
  double g_min = 0.2;
  double g_max = 2.0;
  int refine_points = 21;
  double refine_half_width_steps = 2.0;
};

struct PeakResult {
  int n_sites = 0;
  double g_star = 0.0;
  SweepCurve coarse;
  SweepCurve refined;
};

PeakResult locate_peak(double k_next, int n, const PeakSearch& search = {},
                       const SweepOptions& options = {});

struct SizePeak {
  int n_sites = 0;
  double g_star = 0.0;
};

struct ScalingFit {
  std::vector<int> sizes;
  std::vector<double> peak_positions;
  double slope = 0.0;      ///< coefficient of 1/N
  double intercept = 0.0;  ///< g_c estimate
  double stderr_intercept = 0.0;
  double confidence = 0.0;  ///< half-width of the 0.9 band on the intercept
  std::vector<double> residuals;
  /// Peak positions approach the intercept monotonically with N.
  bool monotone = false;
};

inline constexpr double kConfidenceLevel = 0.9;

/// Least-squares line g*(N) = intercept + slope/N; needs >= 3 points with at
/// least two distinct sizes.
ScalingFit extrapolate(const std::vector<SizePeak>& peaks);

}  // namespace spincorr
