// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

// Randomised invariants. Runs standalone: `spincorr_property_tests`.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "spincorr/bethe.hpp"
#include "spincorr/correlator.hpp"
#include "spincorr/eigensolver.hpp"

using namespace spincorr;

TEST_CASE("density bound on random states") {
  std::mt19937_64 rng(20260101);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto st = oracle::random_state(n, rng());
    const int m = 1 + static_cast<int>(rng() % n);
    SignPattern p;
    p.start_site = 1 + static_cast<int>(rng() % (n - m + 1));
    for (int k = 0; k < m; ++k) p.ops.push_back(rng() % 2 ? Ladder::Raise : Ladder::Lower);
    const double e = pure_correlator(st, p).e_value;
    CHECK(e >= 0.0);
    CHECK(e <= 0.25 + 1e-15);
  }
}

TEST_CASE("XXZ and MG matvecs stay in their sector") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + 2 * static_cast<int>(rng() % 4);
    const auto op = t % 2 ? build(xxz_chain(n, d(rng) * 2)) : build(majumdar_ghosh_chain(n));
    const int k = static_cast<int>(rng() % (n + 1));
    std::vector<double> v(op.dimension(), 0.0), hv(op.dimension());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::popcount(static_cast<Bits>(i)) == k) v[i] = d(rng);
    }
    op.apply(v, hv);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (std::popcount(static_cast<Bits>(i)) != k) REQUIRE(hv[i] == 0.0);
    }
    // The sector operator reproduces the in-sector block.
    const auto sec = build(t % 2 ? xxz_chain(n, 0.3) : majumdar_ghosh_chain(n), k);
    std::vector<double> sv(sec.dimension()), shv(sec.dimension());
    for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = d(rng);
    sec.apply(sv, shv);
    CHECK(std::isfinite(std::accumulate(shv.begin(), shv.end(), 0.0)));
  }
}

TEST_CASE("kernels are finite-difference derivatives") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> delta(-0.98, 0.98), lam(-4.0, 4.0);
  const double h = 1e-5;
  for (int t = 0; t < 500; ++t) {
    const double eta = bethe::eta_from_delta(delta(rng));
    const double l = lam(rng);
    const double dp = (oracle::p_complex(l + h, eta) - oracle::p_complex(l - h, eta)) / (2 * h);
    const double dt =
        (oracle::theta_complex(l + h, eta) - oracle::theta_complex(l - h, eta)) / (2 * h);
    // Skip points where the principal log wraps inside the stencil.
    if (std::abs(dp) > 1e3 || std::abs(dt) > 1e3) continue;
    CHECK(std::abs(bethe::kernel_k1(l, eta) - dp) <= 1e-8);
    CHECK(std::abs(bethe::kernel_k2(l, eta) - dt) <= 1e-8);
  }
}

TEST_CASE("thermal weights sum to one") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> beta(0.0, 50.0), delta(-2.0, 4.0);
  for (int t = 0; t < 50; ++t) {
    const auto spec = full_spectrum(build(xxz_chain(4 + static_cast<int>(rng() % 3), delta(rng))));
    const auto w = thermal_weights(spec, beta(rng));
    CHECK(std::accumulate(w.weights.begin(), w.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : w.weights) CHECK(x >= 0.0);
  }
}

TEST_CASE("operators are Hermitian on random vectors") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const LinearOperator op = t % 3 == 0   ? build(ising_chain(n, d(rng), d(rng)))
                              : t % 3 == 1 ? build(xxz_chain(n, 2 * d(rng)))
                                           : build(majumdar_ghosh_chain(2 * (n / 2) + 2));
    std::vector<double> u(op.dimension()), v(op.dimension()), hu(u.size()), hv(u.size());
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    op.apply(u, hu);
    op.apply(v, hv);
    double a = 0, b = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      a += u[i] * hv[i];
      b += hu[i] * v[i];
    }
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}
