// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

void check_mg_size(int n) {
  if (n < 4 || n % 2 != 0 || n > 64) {
    throw ArgumentError("Majumdar-Ghosh results need even N >= 4, got " + std::to_string(n));
  }
}

}  // namespace

std::array<double, 16> Xxz4Levels::spectrum() const {
  // all-up/all-down, one magnon (n_up = 1, 3), the six n_up = 2 states.
  return {delta, delta, 1.0, 1.0, -1.0, -1.0, 0.0, 0.0, 0.0, 0.0,
          e_plus, e_minus, e_delta_level, 0.0, 0.0, 0.0};
}

Xxz4Levels xxz4_levels(double delta) {
  const double root = std::sqrt(8.0 + delta * delta);
  Xxz4Levels lv;
  lv.delta = delta;
  lv.e_plus = 0.5 * (-delta + root);
  lv.e_minus = 0.5 * (-delta - root);
  lv.e_delta_level = -delta;
  lv.a_plus = 0.25 * (1.0 - delta / root);
  lv.a_minus = 0.25 * (1.0 + delta / root);
  lv.a_delta = -0.5;
  return lv;
}

double xxz4_thermal(double delta, double beta, Xxz4Formula formula) {
  if (std::isnan(beta) || beta < 0.0) throw ArgumentError("beta must be >= 0");
  const Xxz4Levels lv = xxz4_levels(delta);

  if (formula == Xxz4Formula::Printed) {
    const double root = std::sqrt(8.0 + delta * delta);
    const double em = lv.e_minus;
    const double z = 1.0 + std::exp(-beta * (lv.e_plus - em)) + std::exp(-beta * (-delta - em)) +
                     2.0 * std::exp(-beta * (-1.0 - em)) + 7.0 * std::exp(beta * em) +
                     2.0 * std::exp(-beta * (1.0 - em)) + 2.0 * std::exp(-beta * (delta - em));
    const double bracket = -0.5 * std::exp(-beta * (delta + root)) +
                           0.25 * (1.0 + delta / root) +
                           0.25 * (1.0 - delta / root) * std::exp(-2.0 * beta * root);
    return bracket * bracket / (z * z);
  }

  const auto levels = lv.spectrum();
  const double e0 = *std::min_element(levels.begin(), levels.end());
  const auto weight = [&](double e) {
    if (std::isinf(beta)) return e - e0 <= 1e-12 ? 1.0 : 0.0;
    return std::exp(-beta * (e - e0));
  };
  double z = 0.0;
  for (double e : levels) z += weight(e);
  const double c = (lv.a_plus * weight(lv.e_plus) + lv.a_minus * weight(lv.e_minus) +
                    lv.a_delta * weight(lv.e_delta_level)) /
                   z;
  return c * c;
}

double xxz4_zero_t(double delta) {
  if (!(delta > -1.0)) {
    throw DomainError("|E_-> is the 4-site ground state only for Δ > -1");
  }
  const double r = 1.0 + delta / std::sqrt(8.0 + delta * delta);
  return r * r / 16.0;
}

double xxz4_three_body_threshold() { return 2.0 * std::sqrt(std::sqrt(2.0) - 1.0); }

MgGroundState mg_ground_state(int n) {
  check_mg_size(n);
  const int half = n / 2;
  MgGroundState gs;
  gs.n_sites = n;
  gs.overlap = (half % 2 == 0 ? 1.0 : -1.0) * std::ldexp(1.0, 1 - half);
  gs.norm_sq = 2.0 + 2.0 * gs.overlap;
  return gs;
}

bool mg_parity_vanishes(int n) {
  check_mg_size(n);
  return (n / 2) % 2 != 0;
}

namespace {

double expectation(const MgElements& e, int n) {
  return (e.a11 + 2.0 * e.a21 + e.a22) / mg_ground_state(n).norm_sq;
}

}  // namespace

MgElements mg_elements_n(int n) {
  check_mg_size(n);
  const int half = n / 2;
  const double diag = std::pow(-0.5, half);
  return {diag, std::ldexp(1.0, -half), diag};
}

MgElements mg_elements_n_minus_2(int n) {
  check_mg_size(n);
  const int half = n / 2;
  // ψ2 pairs the window ends with sites outside it, so its diagonal vanishes.
  return {std::pow(-0.5, half - 1), -std::ldexp(1.0, -half), 0.0};
}

double mg_e_n(int n) {
  if (mg_parity_vanishes(n)) return 0.0;
  const double c = expectation(mg_elements_n(n), n);
  return c * c;
}

double mg_e_n_minus_2(int n) {
  if (mg_parity_vanishes(n)) return 0.0;
  const double c = expectation(mg_elements_n_minus_2(n), n);
  return c * c;
}

double mg_e_n_minus_2_quarter(int n) {
  check_mg_size(n);
  const double d = 1.0 + std::ldexp(1.0, n / 2 - 1);
  return 0.25 / (d * d);
}

}  // namespace spincorr
