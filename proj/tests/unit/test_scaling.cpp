// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "spincorr/errors.hpp"
#include "spincorr/scaling.hpp"

using namespace spincorr;

TEST_CASE("find_peak on synthetic curves") {
  SweepCurve sym;
  sym.g_grid = {0.9, 1.0, 1.1};
  sym.e_values = {0.1, 0.2, 0.1};
  CHECK(find_peak(sym) == doctest::Approx(1.0).epsilon(1e-15));

  SweepCurve para;
  para.g_grid = linear_grid(0.0, 2.0, 17);
  for (double g : para.g_grid) para.e_values.push_back(0.2 - 3.0 * (g - 0.731) * (g - 0.731));
  CHECK(std::abs(find_peak(para) - 0.731) <= 1e-12);

  SweepCurve uneven;
  uneven.g_grid = {0.1, 0.4, 0.5, 1.3};
  for (double g : uneven.g_grid) uneven.e_values.push_back(-(g - 0.45) * (g - 0.45));
  CHECK(std::abs(find_peak(uneven) - 0.45) <= 1e-12);

  SweepCurve edge;
  edge.g_grid = {0.1, 0.2, 0.3};
  edge.e_values = {0.3, 0.2, 0.1};
  CHECK_THROWS_AS(find_peak(edge), ArgumentError);
}

TEST_CASE("extrapolate recovers an exact line") {
  for (double k : {0.0, 0.2, 0.3}) {
    std::vector<SizePeak> peaks;
    for (int n : {8, 12, 16, 20}) peaks.push_back({n, 1 - 2 * k + 0.7 / n});
    const auto fit = extrapolate(peaks);
    CHECK(fit.intercept == doctest::Approx(1 - 2 * k).epsilon(1e-13));
    CHECK(fit.slope == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(fit.stderr_intercept < 1e-12);
    CHECK(fit.monotone);
    for (double r : fit.residuals) CHECK(std::abs(r) < 1e-13);
  }
}

TEST_CASE("confidence band uses the t quantile") {
  const std::vector<SizePeak> peaks = {{8, 1.01}, {12, 0.97}, {16, 0.965}, {20, 0.955}};
  const auto fit = extrapolate(peaks);
  // two degrees of freedom: t_{0.95} = 2.919986
  CHECK(fit.confidence == doctest::Approx(2.919985580 * fit.stderr_intercept).epsilon(1e-8));
  CHECK_THROWS_AS(extrapolate({{8, 1.0}, {12, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(extrapolate({{8, 1.0}, {8, 1.1}, {8, 1.2}}), ArgumentError);
}

TEST_CASE("sweep validates and produces bounded values") {
  CHECK_THROWS_AS(sweep(0.0, 7, {0.5, 1.0}), ArgumentError);
  CHECK_THROWS_AS(sweep(0.0, 22, {0.5, 1.0}), ArgumentError);
  CHECK_THROWS_AS(sweep(0.0, 8, {1.0, 0.5}), ArgumentError);
  CHECK_THROWS_AS(sweep(0.0, 8, {0.0, 0.5}), ArgumentError);
  CHECK_THROWS_AS(sweep(0.0, 8, {1.0, 5.5}), ArgumentError);

  const auto curve = sweep(0.0, 8, linear_grid(0.2, 2.0, 31));
  CHECK(curve.order_m == 4);
  for (double e : curve.e_values) {
    CHECK(e >= 0.0);
    CHECK(e <= 0.25);
  }
  const double g = find_peak(curve);
  CHECK(g > 0.8);
  CHECK(g < 1.2);
}

TEST_CASE("sweep results do not depend on worker count or warm start") {
  const auto grid = linear_grid(0.5, 1.5, 9);
  SweepOptions one;
  one.workers = 1;
  SweepOptions three;
  three.workers = 3;
  SweepOptions cold;
  cold.warm_start = false;
  const auto a = sweep(0.2, 10, grid, one);
  const auto b = sweep(0.2, 10, grid, three);
  const auto c = sweep(0.2, 10, grid, cold);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(a.e_values[i] == doctest::Approx(b.e_values[i]).epsilon(1e-9));
    CHECK(a.e_values[i] == doctest::Approx(c.e_values[i]).epsilon(1e-9));
  }
}

TEST_CASE("locate_peak refinement is consistent with a finer grid") {
  PeakSearch coarse;
  PeakSearch fine;
  fine.coarse_points = 121;
  const double a = locate_peak(0.0, 8, coarse).g_star;
  const double b = locate_peak(0.0, 8, fine).g_star;
  CHECK(std::abs(a - b) <= 0.05);
  CHECK(std::abs(a - b) <= 1e-3);
}

TEST_CASE("worker configuration") {
  CHECK(configured_workers(3) >= 1);
  CHECK(linear_grid(0, 1, 1) == std::vector<double>{0.0});
  CHECK(linear_grid(0, 1, 3) == std::vector<double>{0.0, 0.5, 1.0});
  CHECK_THROWS_AS(linear_grid(1, 0, 3), ArgumentError);
}
