// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "spincorr/errors.hpp"

namespace spincorr::bethe {

namespace {

using std::numbers::pi;

std::vector<double> ground_quantum_numbers(int m) {
  std::vector<double> q(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) q[j - 1] = -(m + 1) / 2.0 + j;
  return q;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Newton iteration at fixed η; returns false on divergence.
bool newton(int n, double eta, const std::vector<double>& qn, std::vector<double>& roots,
            const SolveOptions& opt, double& residual) {
  const auto m = static_cast<Eigen::Index>(roots.size());
  std::vector<double> x = roots;
  for (int it = 0; it < opt.max_newton; ++it) {
    const Eigen::VectorXd f = bethe_residuals(n, eta, qn, x);
    residual = f.cwiseAbs().maxCoeff();
    if (!std::isfinite(residual)) return false;
    if (residual <= opt.tolerance) {
      roots = std::move(x);
      return true;
    }
    const Eigen::VectorXd step = gaudin_matrix(n, eta, x).partialPivLu().solve(f);
    if (!step.allFinite()) return false;
    for (Eigen::Index j = 0; j < m; ++j) x[j] -= step(j);
  }
  return false;
}

}  // namespace

double momentum(double lambda, double eta) {
  return 2.0 * std::atan(std::tan(eta) * std::tanh(lambda));
}

double scattering_phase(double lambda, double eta) {
  return 2.0 * std::atan(std::cos(2.0 * eta) / std::sin(2.0 * eta) * std::tanh(lambda));
}

double kernel_k1(double lambda, double eta) {
  const double c = std::cosh(lambda), s = std::sinh(lambda);
  const double ce = std::cos(eta), se = std::sin(eta);
  return std::sin(2.0 * eta) / (c * c * ce * ce + s * s * se * se);
}

double kernel_k2(double lambda, double eta) {
  const double c = std::cosh(lambda), s = std::sinh(lambda);
  const double c2 = std::cos(2.0 * eta), s2 = std::sin(2.0 * eta);
  return std::sin(4.0 * eta) / (s * s * c2 * c2 + c * c * s2 * s2);
}

double eta_from_delta(double delta) {
  if (!(std::abs(delta) < 1.0)) {
    throw DomainError("Bethe solution covers the gapless phase |Δ| < 1, got Δ = " +
                      std::to_string(delta));
  }
  return 0.5 * std::acos(-delta);
}

double BetheState::energy() const {
  double e = n_sites * delta;
  for (double l : roots) e -= 4.0 * (delta + std::cos(momentum(l, eta)));
  return e;
}

Eigen::VectorXd bethe_residuals(int n, double eta, const std::vector<double>& qn,
                                const std::vector<double>& roots) {
  const auto m = static_cast<Eigen::Index>(roots.size());
  Eigen::VectorXd f(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double scatter = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) scatter += scattering_phase(roots[j] - roots[k], eta);
    f(j) = n * momentum(roots[j], eta) - 2.0 * pi * qn[j] + scatter;
  }
  return f;
}

Eigen::MatrixXd gaudin_matrix(int n, double eta, const std::vector<double>& roots) {
  const auto m = static_cast<Eigen::Index>(roots.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    double diag = n * kernel_k1(roots[j], eta);
    for (Eigen::Index k = 0; k < m; ++k) diag += kernel_k2(roots[j] - roots[k], eta);
    for (Eigen::Index k = 0; k < m; ++k) g(j, k) = -kernel_k2(roots[j] - roots[k], eta);
    g(j, j) += diag;
  }
  return g;
}

BetheState solve_ground(int n, double delta, const SolveOptions& opt) {
  if (n < kMinBetheSites || n > kMaxBetheSites || n % 2 != 0) {
    throw ArgumentError("Bethe solver needs even N in [4, 14], got " + std::to_string(n));
  }
  const double target_eta = eta_from_delta(delta);

  BetheState st;
  st.n_sites = n;
  st.m_down = n / 2;
  st.delta = delta;
  st.eta = target_eta;
  st.quantum_numbers = ground_quantum_numbers(st.m_down);

  // Free-fermion point Δ = 0 (η = π/4): θ vanishes and N p(λ) = 2π I.
  std::vector<double> roots;
  for (double q : st.quantum_numbers) roots.push_back(std::atanh(std::tan(pi * q / n)));

  double current = 0.0;
  double step = opt.initial_step;
  double residual = 0.0;
  if (!newton(n, eta_from_delta(current), st.quantum_numbers, roots, opt, residual)) {
    throw ConvergenceError("Bethe roots failed at the free-fermion point", residual);
  }
  while (current != delta) {
    const double dir = delta > current ? 1.0 : -1.0;
    const double next =
        std::abs(delta - current) <= step ? delta : current + dir * step;
    std::vector<double> trial = roots;
    if (newton(n, eta_from_delta(next), st.quantum_numbers, trial, opt, residual)) {
      roots = std::move(trial);
      current = next;
      continue;
    }
    step *= 0.5;
    if (step < opt.min_step) {
      throw ConvergenceError("Bethe continuation stalled at Δ = " + std::to_string(current),
                             residual);
    }
  }

  st.roots = std::move(roots);
  st.residual =
      bethe_residuals(n, st.eta, st.quantum_numbers, st.roots).cwiseAbs().maxCoeff();
  double k1 = 1.0;
  for (double l : st.roots) k1 *= kernel_k1(l, st.eta);
  st.gaudin_norm_sq = gaudin_matrix(n, st.eta, st.roots).determinant() / k1;
  return st;
}

std::complex<double> amplitude(const BetheState& state, std::vector<int> down_positions) {
  const int m = state.m_down;
  if (static_cast<int>(down_positions.size()) != m) {
    throw ArgumentError("amplitude needs exactly M = " + std::to_string(m) + " positions");
  }
  if (m > kMaxAmplitudeDown) {
    throw CapacityError("permutation sum limited to M <= " + std::to_string(kMaxAmplitudeDown));
  }
  std::sort(down_positions.begin(), down_positions.end());
  for (std::size_t i = 0; i < down_positions.size(); ++i) {
    if (down_positions[i] < 1 || down_positions[i] > state.n_sites ||
        (i > 0 && down_positions[i] == down_positions[i - 1])) {
      throw ArgumentError("down positions must be distinct sites in 1..N");
    }
  }

  std::vector<double> p(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) p[j] = momentum(state.roots[j], state.eta);
  std::vector<double> theta(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      theta[a * m + b] = scattering_phase(state.roots[a] - state.roots[b], state.eta);
    }
  }

  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::complex<double> sum{};
  do {
    double phase = 0.0;
    for (int j = 0; j < m; ++j) phase -= down_positions[j] * p[perm[j]];
    for (int j = 0; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) phase -= 0.5 * theta[perm[k] * m + perm[j]];
    }
    sum += static_cast<double>(permutation_sign(perm)) * std::polar(1.0, phase);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / std::sqrt(state.gaudin_norm_sq);
}

namespace {

std::vector<int> sublattice(int first, int last) {
  std::vector<int> s;
  for (int i = first; i <= last; i += 2) s.push_back(i);
  return s;
}

std::vector<int> with(std::vector<int> s, int site) {
  s.push_back(site);
  return s;
}

}  // namespace

double e_n(const BetheState& state) {
  const int n = state.n_sites;
  const double odd = std::norm(amplitude(state, sublattice(1, n - 1)));
  const double even = std::norm(amplitude(state, sublattice(2, n)));
  return odd * even;
}

double e_n_minus_2(const BetheState& state) {
  const int n = state.n_sites;
  const auto odd = sublattice(1, n - 3);
  const auto even = sublattice(2, n - 2);
  const auto c = std::conj(amplitude(state, with(odd, n))) * amplitude(state, with(even, n)) +
                 std::conj(amplitude(state, with(odd, n - 1))) * amplitude(state, with(even, n - 1));
  return std::norm(c);
}

PureState to_state(const BetheState& state) {
  PureState st;
  st.n_sites = state.n_sites;
  st.sector = std::make_shared<const SectorIndex>(state.n_sites, state.n_sites - state.m_down);
  st.energy = state.energy();
  st.amplitudes.resize(st.sector->size());
  std::vector<int> downs;
  for (std::size_t i = 0; i < st.sector->size(); ++i) {
    const Bits s = (*st.sector)[i];
    downs.clear();
    int parity = 0;
    for (int site = 1; site <= state.n_sites; ++site) {
      if (((s >> (site - 1)) & 1U) == 0) {
        downs.push_back(site);
        parity += site;
      }
    }
    const double gauge = parity % 2 == 0 ? 1.0 : -1.0;
    st.amplitudes[i] = gauge * amplitude(state, downs);
  }
  // χ carries an arbitrary global phase; rotate the largest amplitude onto
  // the positive real axis so the non-degenerate ground vector is real.
  const auto largest = std::max_element(
      st.amplitudes.begin(), st.amplitudes.end(),
      [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
  const std::complex<double> phase = std::abs(*largest) > 0.0 ? std::abs(*largest) / *largest : 1.0;
  for (auto& a : st.amplitudes) a *= phase;
  return st;
}

}  // namespace spincorr::bethe
