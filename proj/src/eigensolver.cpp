// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <span>
#include <string>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

using RealVec = std::vector<double>;

// Lanczos basis memory budget in bytes.
constexpr double kBasisBudget = 2.0e9;

using ConstMap = Eigen::Map<const Eigen::VectorXd>;
using Map = Eigen::Map<Eigen::VectorXd>;

ConstMap view(std::span<const double> a) {
  return ConstMap(a.data(), static_cast<Eigen::Index>(a.size()));
}

double dot(std::span<const double> a, std::span<const double> b) { return view(a).dot(view(b)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  Map(y.data(), static_cast<Eigen::Index>(y.size())) += alpha * view(x);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void scale(std::span<double> a, double s) {
  for (auto& x : a) x *= s;
}

// Classical Gram-Schmidt against the first `k` columns of `basis`, repeated
// once when the first pass removed most of the vector.
void orthogonalize(RealVec& w, const Eigen::MatrixXd& basis, Eigen::Index k) {
  if (k == 0) return;
  Map wm(w.data(), static_cast<Eigen::Index>(w.size()));
  const auto block = basis.leftCols(k);
  const double before = wm.norm();
  Eigen::VectorXd c = block.transpose() * wm;
  wm.noalias() -= block * c;
  if (wm.norm() < 0.7 * before) {
    c.noalias() = block.transpose() * wm;
    wm.noalias() -= block * c;
  }
}

void orthogonalize(RealVec& w, const std::vector<RealVec>& basis) {
  if (basis.empty()) return;
  const double before = norm2(w);
  for (const auto& u : basis) axpy(-dot(u, w), u, w);
  if (norm2(w) < 0.7 * before) {
    for (const auto& u : basis) axpy(-dot(u, w), u, w);
  }
}

RealVec random_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealVec v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

std::optional<std::size_t> PureState::index_of(Bits bits) const noexcept {
  if (sector) return sector->index_of(bits);
  if ((bits & ~low_mask(n_sites)) != 0) return std::nullopt;
  return std::size_t{bits};
}

double PureState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

PureState make_state(int n_sites, std::vector<std::complex<double>> amplitudes) {
  if (n_sites < kMinSites || n_sites > kMaxSites) throw ArgumentError("n_sites out of range");
  if (amplitudes.size() != (std::size_t{1} << n_sites)) {
    throw ArgumentError("full-space state needs 2^N amplitudes");
  }
  PureState st;
  st.n_sites = n_sites;
  st.amplitudes = std::move(amplitudes);
  const double nrm = st.norm();
  if (!(nrm > 0.0)) throw ArgumentError("state has zero norm");
  for (auto& a : st.amplitudes) a /= nrm;
  return st;
}

RealEigenpair lanczos_lowest(const LinearOperator& op, const LanczosOptions& opt,
                             const std::vector<RealVec>& deflate) {
  const std::size_t dim = op.dimension();
  if (dim < 2) throw ArgumentError("Lanczos needs dimension >= 2");
  if (!(opt.tol > 0.0) || opt.tol > 1e-6) throw ArgumentError("tol must lie in (0, 1e-6]");
  if (deflate.size() >= dim) throw ArgumentError("deflation spans the whole space");

  const auto budget_vectors =
      static_cast<std::size_t>(kBasisBudget / (sizeof(double) * static_cast<double>(dim)));
  const std::size_t max_basis = std::max<std::size_t>(
      3, std::min({static_cast<std::size_t>(opt.max_basis), dim - deflate.size(), budget_vectors}));
  const bool symmetric = opt.use_symmetry && op.symmetry() != Symmetry::None;

  auto prepare = [&](RealVec& v) {
    if (symmetric) op.project_symmetric(v);
    orthogonalize(v, deflate);
    return norm2(v);
  };

  RealVec v = (opt.start && opt.start->size() == dim) ? *opt.start : random_vector(dim, opt.seed);
  double nv = prepare(v);
  for (std::uint64_t bump = 1; !(nv > 1e-8); ++bump) {
    if (bump > 8) throw ArgumentError("cannot build a start vector in the requested subspace");
    v = random_vector(dim, opt.seed + bump);
    nv = prepare(v);
  }
  scale(v, 1.0 / nv);

  RealEigenpair out;
  double norm_est = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(max_basis));
  const auto column = [&](std::size_t j) {
    return std::span<double>(basis.col(static_cast<Eigen::Index>(j)).data(), dim);
  };
  RealVec w(dim), hx(dim);

  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    std::copy(v.begin(), v.end(), column(0).begin());
    std::vector<double> alpha, beta;
    Eigen::VectorXd ritz;
    double theta = 0.0;

    for (std::size_t j = 0;; ++j) {
      op.apply(column(j), w);
      ++out.matvecs;
      alpha.push_back(dot(column(j), w));
      axpy(-alpha.back(), column(j), w);
      if (j > 0) axpy(-beta.back(), column(j - 1), w);
      orthogonalize(w, basis, static_cast<Eigen::Index>(j + 1));
      orthogonalize(w, deflate);
      if (symmetric) op.project_symmetric(w);
      const double b = norm2(w);

      const auto m = static_cast<Eigen::Index>(alpha.size());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = m > 1 ? Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1)
                                  : Eigen::VectorXd();
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      theta = tri.eigenvalues()(0);
      ritz = tri.eigenvectors().col(0);
      norm_est = std::max({norm_est, std::abs(tri.eigenvalues()(0)),
                           std::abs(tri.eigenvalues()(m - 1)), 1e-300});

      const double estimate = b * std::abs(ritz(m - 1));
      if (estimate <= 0.1 * opt.tol * norm_est || b <= 1e-13 * norm_est ||
          j + 1 >= max_basis) {
        break;
      }
      beta.push_back(b);
      scale(w, 1.0 / b);
      std::copy(w.begin(), w.end(), column(j + 1).begin());
    }

    // Ritz vector and its true residual.
    RealVec x(dim);
    Map(x.data(), static_cast<Eigen::Index>(dim)).noalias() = basis.leftCols(ritz.size()) * ritz;
    if (symmetric) op.project_symmetric(x);
    orthogonalize(x, deflate);
    scale(x, 1.0 / norm2(x));
    op.apply(x, hx);
    ++out.matvecs;
    theta = dot(x, hx);
    axpy(-theta, x, hx);
    const double residual = norm2(hx);
    best_residual = std::min(best_residual, residual);
    if (residual <= opt.tol * norm_est) {
      out.vector = std::move(x);
      out.energy = theta;
      out.residual = residual;
      return out;
    }
    v = std::move(x);
  }
  throw ConvergenceError("Lanczos did not converge after " + std::to_string(opt.max_restarts) +
                             " restarts",
                         best_residual);
}

PureState ground_state(const LinearOperator& op, double tol) {
  LanczosOptions opt;
  opt.tol = tol;
  return ground_state(op, opt);
}

PureState ground_state(const LinearOperator& op, const LanczosOptions& options) {
  RealEigenpair gs = lanczos_lowest(op, options);
  PureState st;
  st.n_sites = op.n_sites();
  st.sector = op.sector();
  st.energy = gs.energy;
  st.matvecs = gs.matvecs;
  if (options.check_degeneracy) {
    LanczosOptions second = options;
    second.use_symmetry = false;
    second.start = nullptr;
    const RealEigenpair next = lanczos_lowest(op, second, {gs.vector});
    st.gap = next.energy - gs.energy;
    st.degenerate = st.gap < kDegeneracyGap;
    st.matvecs += next.matvecs;
  }
  st.amplitudes.assign(gs.vector.begin(), gs.vector.end());
  return st;
}

PureState SpectralDecomposition::state(std::size_t n) const {
  if (n >= size()) throw ArgumentError("eigenvector index out of range");
  PureState st;
  st.n_sites = n_sites;
  st.sector = sector;
  st.energy = eigenvalues(static_cast<Eigen::Index>(n));
  const auto col = eigenvectors.col(static_cast<Eigen::Index>(n));
  st.amplitudes.assign(col.begin(), col.end());
  return st;
}

SpectralDecomposition full_spectrum(const LinearOperator& op) {
  const Eigen::MatrixXd h = dense_matrix(op);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", NAN);
  SpectralDecomposition out;
  out.n_sites = op.n_sites();
  out.sector = op.sector();
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  return out;
}

ThermalWeights thermal_weights(const SpectralDecomposition& spectrum, double beta) {
  if (std::isnan(beta) || beta < 0.0) throw ArgumentError("beta must be >= 0");
  const std::size_t n = spectrum.size();
  ThermalWeights out;
  out.beta = beta;
  out.weights.resize(n);
  if (n == 0) return out;
  const double e0 = spectrum.eigenvalues(0);
  for (std::size_t i = 0; i < n; ++i) {
    const double shift = spectrum.eigenvalues(static_cast<Eigen::Index>(i)) - e0;
    if (std::isinf(beta)) {
      out.weights[i] = shift <= kDegeneracyGap ? 1.0 : 0.0;
    } else {
      out.weights[i] = beta == 0.0 ? 1.0 : std::exp(-beta * shift);
    }
  }
  const double z = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (auto& w : out.weights) w /= z;
  return out;
}

}  // namespace spincorr
