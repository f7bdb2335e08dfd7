// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include <boost/math/distributions/students_t.hpp>

#include "spincorr/correlator.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/hamiltonian.hpp"

namespace spincorr {

int configured_workers(int fallback) {
  if (const char* env = std::getenv("SPIN_CORR_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  return std::max(1, fallback);
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 1 || !(hi >= lo)) throw ArgumentError("grid needs count >= 1 and hi >= lo");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    g[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  }
  return g;
}

SweepCurve sweep(double k_next, int n, const std::vector<double>& g_grid,
                 const SweepOptions& options) {
  if (n < 4 || n > 20 || n % 2 != 0) {
    throw ArgumentError("scaling sweeps need even N in [4, 20], got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < g_grid.size(); ++i) {
    if (!(g_grid[i] > 0.0 && g_grid[i] <= 5.0) || (i > 0 && !(g_grid[i] > g_grid[i - 1]))) {
      throw ArgumentError("g grid must be strictly ascending within (0, 5]");
    }
  }
  SweepCurve curve;
  curve.k_next = k_next;
  curve.n_sites = n;
  curve.order_m = n / 2;
  curve.g_grid = g_grid;
  curve.e_values.assign(g_grid.size(), 0.0);
  const SignPattern pattern = alternating_pattern(curve.order_m);

  const int workers = std::clamp(options.workers > 0 ? options.workers : configured_workers(1), 1,
                                 static_cast<int>(std::max<std::size_t>(1, g_grid.size())));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  // Worker w owns the contiguous chunk [lo, hi) so warm starts follow the grid.
  const auto run_chunk = [&](std::size_t lo, std::size_t hi) {
    std::vector<double> previous;
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        const LinearOperator op = build(ising_chain(n, g_grid[i], k_next));
        LanczosOptions lo_opt;
        lo_opt.tol = options.tol;
        lo_opt.seed = options.seed;
        lo_opt.check_degeneracy = false;
        if (options.warm_start && !previous.empty()) lo_opt.start = &previous;
        RealEigenpair gs = lanczos_lowest(op, lo_opt);
        PureState st;
        st.n_sites = n;
        st.energy = gs.energy;
        st.amplitudes.assign(gs.vector.begin(), gs.vector.end());
        curve.e_values[i] = pure_correlator(st, pattern).e_value;
        previous = std::move(gs.vector);
      } catch (const ConvergenceError& e) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::make_exception_ptr(ConvergenceError(
              std::string(e.what()) + " at g = " + std::to_string(g_grid[i]), e.best_residual()));
        }
        return;
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    run_chunk(0, g_grid.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t total = g_grid.size();
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = total * w / workers;
      const std::size_t hi = total * (w + 1) / workers;
      pool.emplace_back(run_chunk, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return curve;
}

double find_peak(const SweepCurve& curve) {
  const auto& x = curve.g_grid;
  const auto& y = curve.e_values;
  if (x.size() != y.size() || x.size() < 3) throw ArgumentError("peak search needs >= 3 points");
  const auto i = static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
  if (i == 0 || i + 1 == y.size()) {
    throw ArgumentError("maximum lies on the grid boundary; widen the g range");
  }
  // Vertex of the interpolating parabola through three (possibly uneven) points.
  const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
  const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den == 0.0) return x1;
  return x1 - 0.5 * num / den;
}

PeakResult locate_peak(double k_next, int n, const PeakSearch& search,
                       const SweepOptions& options) {
  PeakResult out;
  out.n_sites = n;
  out.coarse = sweep(k_next, n, linear_grid(search.g_min, search.g_max, search.coarse_points),
                     options);
  const double centre = find_peak(out.coarse);
  const double step = (search.g_max - search.g_min) / (search.coarse_points - 1);
  const double half = search.refine_half_width_steps * step;
  const double lo = std::max(centre - half, 1e-6);
  out.refined = sweep(k_next, n, linear_grid(lo, centre + half, search.refine_points), options);
  out.g_star = find_peak(out.refined);
  return out;
}

ScalingFit extrapolate(const std::vector<SizePeak>& peaks) {
  if (peaks.size() < 3) throw ArgumentError("finite-size extrapolation needs >= 3 sizes");
  ScalingFit fit;
  const auto count = static_cast<double>(peaks.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& p : peaks) {
    if (p.n_sites <= 0) throw ArgumentError("sizes must be positive");
    fit.sizes.push_back(p.n_sites);
    fit.peak_positions.push_back(p.g_star);
    sx += 1.0 / p.n_sites;
    sy += p.g_star;
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0.0, sxy = 0.0, sum_x2 = 0.0;
  for (const auto& p : peaks) {
    const double dx = 1.0 / p.n_sites - mx;
    sxx += dx * dx;
    sxy += dx * (p.g_star - my);
    sum_x2 += 1.0 / (static_cast<double>(p.n_sites) * p.n_sites);
  }
  if (!(sxx > 1e-300)) throw ArgumentError("extrapolation needs at least two distinct sizes");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (const auto& p : peaks) {
    const double r = p.g_star - (fit.intercept + fit.slope / p.n_sites);
    fit.residuals.push_back(r);
    ssr += r * r;
  }
  const double dof = count - 2.0;
  const double s2 = ssr / dof;
  fit.stderr_intercept = std::sqrt(s2 * sum_x2 / (count * sxx));
  const boost::math::students_t dist(dof);
  fit.confidence =
      boost::math::quantile(dist, 0.5 + 0.5 * kConfidenceLevel) * fit.stderr_intercept;

  // Monotone approach: distances to the intercept shrink as N grows.
  std::vector<SizePeak> sorted = peaks;
  std::sort(sorted.begin(), sorted.end(),
            [](const SizePeak& a, const SizePeak& b) { return a.n_sites < b.n_sites; });
  fit.monotone = true;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double step = sorted[i].g_star - sorted[i - 1].g_star;
    const double first = sorted[1].g_star - sorted[0].g_star;
    if (step * first < 0.0) fit.monotone = false;
  }
  return fit;
}

}  // namespace spincorr
