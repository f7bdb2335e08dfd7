// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion. Wall-clock budgets are
// part of each criterion.
//
//   spincorr_acceptance [--only N]... [--skip N]... [--strict]
//
// Exit status is non-zero when a criterion fails, except for the criteria
// listed in kKnownDeviations, whose FAIL line is still printed. --strict
// makes those fatal too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "spincorr/bethe.hpp"
#include "spincorr/closedform.hpp"
#include "spincorr/correlator.hpp"
#include "spincorr/eigensolver.hpp"
#include "spincorr/hierarchy.hpp"
#include "spincorr/scaling.hpp"

#ifndef SPINCORR_PROPERTY_BINARY
#define SPINCORR_PROPERTY_BINARY ""
#endif

using namespace spincorr;

namespace {

// Criterion 2 asks for 1% agreement with 4^-m at g = 50, but the first-order
// correction to the alternating correlator is (m-1)/g, i.e. 2% to 10% there.
// Criterion 7 asks for E_{N-2} = E_N/4 on the exact ground state; the exact
// ground state gives E_{N-2} = E_N (see the MG closed-form tests).
const std::set<int> kKnownDeviations = {2, 7};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += failures.empty() ? what : "; " + what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Outcome&)> body;
};

double e_alt(const PureState& st, int m) { return pure_correlator(st, alternating_pattern(m)).e_value; }

void ghz_saturation(Outcome& o) {
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const double e = pure_correlator(oracle::ghz(n), uniform_pattern(n, Ladder::Raise)).e_value;
    worst = std::max(worst, std::abs(e - 0.25));
  }
  o.detail << "max |E_N - 1/4| = " << worst;
  o.require(worst <= 1e-12, "GHZ deviation above 1e-12");
}

void ising_limits(Outcome& o) {
  const auto small = ground_state(build(ising_chain(6, 1e-3)), 1e-12);
  const double e6 = e_alt(small, 6);
  double low_max = 0.0;
  for (int m = 2; m <= 5; ++m) low_max = std::max(low_max, e_alt(small, m));
  const auto large = ground_state(build(ising_chain(6, 50.0)), 1e-12);
  double rel = 0.0;
  for (int m = 2; m <= 6; ++m) {
    const double ref = std::pow(4.0, -m);
    rel = std::max(rel, std::abs(e_alt(large, m) - ref) / ref);
  }
  o.detail << "g=1e-3: E6 = " << e6 << ", max E2..E5 = " << low_max
           << "; g=50: max rel dev from 4^-m = " << rel << " (first-order estimate 5/g = " << 5.0 / 50.0
           << ")";
  o.require(e6 >= 0.249, "E6 < 0.249 at g=1e-3");
  o.require(low_max <= 1e-3, "lower orders above 1e-3 at g=1e-3");
  o.require(rel <= 0.01, "g=50 deviation above 1%");
}

void ising_hierarchy(Outcome& o) {
  std::vector<double> best(7, 0.0);
  std::vector<double> previous;
  for (double g : linear_grid(0.2, 2.0, 61)) {
    LanczosOptions opt;
    opt.tol = 1e-11;
    opt.check_degeneracy = false;
    opt.start = previous.empty() ? nullptr : &previous;
    auto gs = lanczos_lowest(build(ising_chain(6, g)), opt);
    PureState st;
    st.n_sites = 6;
    st.amplitudes.assign(gs.vector.begin(), gs.vector.end());
    for (int m = 2; m <= 5; ++m) best[m] = std::max(best[m], e_alt(st, m));
    previous = std::move(gs.vector);
  }
  o.detail << "max E5 = " << best[5] << " (2^-5 = " << std::pow(2.0, -5) << ")";
  o.require(best[5] > std::pow(2.0, -5), "E5 does not break the Bell limit");
  for (int m = 2; m <= 4; ++m) {
    o.detail << ", max E" << m << " = " << best[m];
    o.require(best[m] > std::pow(4.0, -m), "E" + std::to_string(m) + " not above 4^-m");
    o.require(best[m] <= std::pow(2.0, -m), "E" + std::to_string(m) + " above 2^-m");
  }
}

void hierarchy_ladder(Outcome& o) {
  const int ks[] = {1, 2, 3, 5, 6};
  const double ent[] = {std::pow(4.0, -6), std::pow(4.0, -3), std::pow(4.0, -2), std::pow(4.0, -2),
                        0.25};
  for (int i = 0; i < 5; ++i) {
    o.require(entanglement_bound(6, ks[i]) == ent[i], "entanglement_bound(6," + std::to_string(ks[i]) + ")");
    o.require(oracle::partition_enumeration_bound(6, ks[i], false) == ent[i],
              "oracle entanglement(6," + std::to_string(ks[i]) + ")");
  }
  const double nl[] = {std::pow(2.0, -6), std::pow(2.0, -6), std::pow(2.0, -4),
                       std::pow(2.0, -4), std::pow(2.0, -3), std::pow(2.0, -2)};
  for (int k = 1; k <= 6; ++k) {
    o.require(nonlocality_bound(6, k) == nl[k - 1], "nonlocality_bound(6," + std::to_string(k) + ")");
  }
  int compared = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k, ++compared) {
      o.require(entanglement_bound(n, k) == oracle::partition_enumeration_bound(n, k, false),
                "entanglement oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
      o.require(nonlocality_bound(n, k) == oracle::partition_enumeration_bound(n, k, true),
                "locality oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  o.detail << compared << " (n,k) pairs match exhaustive set-partition enumeration";
}

void xxz4_closed_forms(Outcome& o) {
  const double deltas[] = {-0.5, 0.0, 0.5, 1.0, 2.0, 5.0};
  double zero_t = 0.0, thermal = 0.0;
  for (double d : deltas) {
    const auto gs = ground_state(build(xxz_chain(4, d)), 1e-12);
    zero_t = std::max(zero_t, std::abs(xxz4_zero_t(d) - e_alt(gs, 4)));
    const auto h = oracle::pauli_xxz(4, d);
    for (double beta : {1.0, 2.0, 5.0, 10.0}) {
      const double ed = oracle::dense_thermal(h, 4, beta * kSpinHalfEnergyUnit, alternating_pattern(4));
      thermal = std::max(thermal, std::abs(xxz4_thermal(d, beta) - ed));
    }
  }
  const double threshold = std::abs(xxz4_zero_t(xxz4_three_body_threshold()) - 0.125);
  o.detail << "zero-T vs ED " << zero_t << ", threshold |E4-1/8| " << threshold
           << ", thermal vs ED " << thermal;
  o.require(zero_t <= 1e-10, "zero-T mismatch");
  o.require(threshold <= 1e-12, "threshold value");
  o.require(thermal <= 1e-10, "thermal mismatch");
}

void bethe_vs_ed(Outcome& o) {
  double dn = 0.0, dn2 = 0.0, res = 0.0;
  for (int n : {8, 10}) {
    for (double d : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
      const auto bs = bethe::solve_ground(n, d);
      const auto op = build(xxz_chain(n, d), n / 2);
      const auto gs = ground_state(op, 1e-12);
      dn = std::max(dn, std::abs(bethe::e_n(bs) - e_alt(gs, n)));
      dn2 = std::max(dn2, std::abs(bethe::e_n_minus_2(bs) - e_alt(gs, n - 2)));
      const auto vec = bethe::to_state(bs);
      std::vector<double> v(vec.dimension()), hv(vec.dimension());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = vec.amplitudes[i].real();
      op.apply(v, hv);
      double r = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) r += std::pow(hv[i] - bs.energy() * v[i], 2);
      res = std::max(res, std::sqrt(r));
    }
  }
  o.detail << "max |dE_N| " << dn << ", max |dE_{N-2}| " << dn2 << ", max eigen-residual " << res;
  o.require(dn <= 1e-8, "E_N mismatch");
  o.require(dn2 <= 1e-8, "E_{N-2} mismatch");
  o.require(res <= 1e-8, "Bethe vector residual");
}

void majumdar_ghosh(Outcome& o) {
  const auto solve = [](int n) { return ground_state(build(majumdar_ghosh_chain(n), n / 2), 1e-12); };
  for (int n : {4, 8}) {
    const auto gs = solve(n);
    const double en = e_alt(gs, n), en2 = e_alt(gs, n - 2);
    const double target = n == 4 ? 1.0 / 9 : 1.0 / 81;
    o.detail << "N=" << n << ": E_N " << en << ", E_{N-2} " << en2 << ", E_N/4 " << en / 4 << "; ";
    o.require(std::abs(en - target) <= 1e-10, "E_N at N=" + std::to_string(n));
    o.require(std::abs(en2 - en / 4) <= 1e-10, "E_{N-2} = E_N/4 at N=" + std::to_string(n));
    o.require(en > std::ldexp(1.0, -n), "Bell limit at N=" + std::to_string(n));
  }
  const double e6 = e_alt(solve(6), 6);
  o.detail << "N=6: E_6 " << e6;
  o.require(std::abs(e6) <= 1e-12, "parity zero at N=6");
}

void finite_size_scaling(Outcome& o) {
  SweepOptions opt;
  opt.workers = configured_workers(1);
  for (double k : {0.0, 0.2, 0.3}) {
    std::vector<SizePeak> peaks;
    for (int n : {8, 12, 16, 20}) peaks.push_back({n, locate_peak(k, n, {}, opt).g_star});
    const auto fit = extrapolate(peaks);
    o.detail << "K=" << k << ": g*(N) =";
    for (const auto& p : peaks) o.detail << ' ' << p.g_star;
    o.detail << " -> g_c " << fit.intercept << " +- " << fit.confidence << " (target " << 1 - 2 * k
             << "); ";
    o.require(std::abs(fit.intercept - (1 - 2 * k)) <= 0.1, "intercept off at K=" + std::to_string(k));
  }
}

void property_suites(Outcome& o) {
  const std::string binary = SPINCORR_PROPERTY_BINARY;
  o.require(!binary.empty(), "property binary path unknown");
  if (binary.empty()) return;
  const int status = std::system((binary + " > /dev/null 2>&1").c_str());
  o.detail << "standalone property binary exit status " << status;
  o.require(status == 0, "property suite failed");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, skip;
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if ((a == "--only" || a == "--skip") && i + 1 < argc) {
      (a == "--only" ? only : skip).insert(std::atoi(argv[++i]));
    } else if (a == "--strict") {
      strict = true;
    } else {
      std::cerr << "usage: spincorr_acceptance [--only N]... [--skip N]... [--strict]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "GHZ saturation", 1.0, ghz_saturation},
      {2, "Ising N=6 limits", 10.0, ising_limits},
      {3, "Ising N=6 hierarchy", 30.0, ising_hierarchy},
      {4, "hierarchy ladder exactness", 5.0, hierarchy_ladder},
      {5, "XXZ N=4 closed forms", 5.0, xxz4_closed_forms},
      {6, "Bethe vs ED", 120.0, bethe_vs_ed},
      {7, "Majumdar-Ghosh", 10.0, majumdar_ghosh},
      {8, "finite-size scaling", 1800.0, finite_size_scaling},
      {9, "property suites", 30.0, property_suites},
  };

  int fatal = 0;
  for (const auto& c : criteria) {
    if ((!only.empty() && !only.count(c.id)) || skip.count(c.id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.budget_s, "over the " + std::to_string(c.budget_s) + " s budget");
    const bool known = kKnownDeviations.count(c.id) > 0;
    std::printf("%s criterion %d (%s) %.2fs: %s", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                secs, o.detail.str().c_str());
    if (!o.pass) std::printf(" | failed: %s", o.failures.c_str());
    if (!o.pass && known) std::printf(" | known deviation, see README");
    std::printf("\n");
    std::fflush(stdout);
    if (!o.pass && (strict || !known)) ++fatal;
  }
  return fatal == 0 ? 0 : 1;
}
