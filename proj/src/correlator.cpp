// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/correlator.hpp"

#include <bit>
#include <optional>
#include <type_traits>
#include <string>

#include "spincorr/errors.hpp"

namespace spincorr {

namespace {

struct Window {
  Bits source = 0;  // bits set where the source configuration is up
  Bits target = 0;
  Bits free = 0;    // sites outside the window
};

Window make_window(const SignPattern& p, int n_sites) {
  const int m = p.order();
  if (m < 1) throw ArgumentError("pattern must contain at least one operator");
  if (p.start_site < 1 || p.start_site + m - 1 > n_sites) {
    throw ArgumentError("pattern of length " + std::to_string(m) + " at site " +
                        std::to_string(p.start_site) + " does not fit a chain of " +
                        std::to_string(n_sites));
  }
  Window w;
  Bits window_mask = 0;
  for (int k = 0; k < m; ++k) {
    const Bits bit = Bits{1} << (p.start_site - 1 + k);
    window_mask |= bit;
    if (p.ops[k] == Ladder::Lower) {
      w.source |= bit;
    } else {
      w.target |= bit;
    }
  }
  w.free = low_mask(n_sites) & ~window_mask;
  return w;
}

// Σ_tail conj(amp(target|tail)) * amp(source|tail), visiting tails as the
// subsets of `free` in ascending order. `tail_up` < 0 means no popcount
// constraint on the tail.
template <typename Lookup>
auto tail_sum(const Window& w, int tail_up, Lookup&& amp) {
  using T = decltype(amp(Bits{}));
  T acc{};
  Bits sub = 0;
  while (true) {
    if (tail_up < 0 || std::popcount(sub) == tail_up) {
      if constexpr (std::is_same_v<T, std::complex<double>>) {
        acc += std::conj(amp(w.target | sub)) * amp(w.source | sub);
      } else {
        acc += amp(w.target | sub) * amp(w.source | sub);
      }
    }
    if (sub == w.free) break;
    sub = (sub - w.free) & w.free;
  }
  return acc;
}

CorrelatorResult finish(std::complex<double> c, const SignPattern& p) {
  CorrelatorResult r;
  r.c_value = c;
  r.e_value = std::norm(c);
  r.order_m = p.order();
  r.pattern = p;
  return r;
}

}  // namespace

SignPattern alternating_pattern(int m, int start_site) {
  if (m < 1) throw ArgumentError("pattern order must be >= 1");
  SignPattern p;
  p.start_site = start_site;
  for (int k = 0; k < m; ++k) p.ops.push_back(k % 2 == 0 ? Ladder::Raise : Ladder::Lower);
  return p;
}

SignPattern uniform_pattern(int m, Ladder op, int start_site) {
  if (m < 1) throw ArgumentError("pattern order must be >= 1");
  return SignPattern{std::vector<Ladder>(static_cast<std::size_t>(m), op), start_site};
}

std::string to_string(const SignPattern& pattern) {
  std::string s;
  for (auto op : pattern.ops) s += op == Ladder::Raise ? '+' : '-';
  return s;
}

CorrelatorResult pure_correlator(const PureState& state, const SignPattern& pattern) {
  const Window w = make_window(pattern, state.n_sites);
  int tail_up = -1;
  if (state.sector) {
    if (std::popcount(w.source) != std::popcount(w.target)) return finish({}, pattern);
    tail_up = state.sector->n_up() - std::popcount(w.source);
    if (tail_up < 0) return finish({}, pattern);
  } else if (state.amplitudes.size() != (std::size_t{1} << state.n_sites)) {
    throw ArgumentError("state size does not match its chain length");
  }
  const auto& a = state.amplitudes;
  const auto c = tail_sum(w, tail_up, [&](Bits b) -> std::complex<double> {
    const auto i = state.index_of(b);
    return i ? a[*i] : std::complex<double>{};
  });
  return finish(c, pattern);
}

CorrelatorResult thermal_correlator(const SpectralDecomposition& spectrum,
                                    const ThermalWeights& weights, const SignPattern& pattern) {
  if (weights.weights.size() != spectrum.size()) {
    throw ArgumentError("thermal weights do not align with the spectrum");
  }
  const Window w = make_window(pattern, spectrum.n_sites);
  int tail_up = -1;
  if (spectrum.sector) {
    if (std::popcount(w.source) != std::popcount(w.target)) return finish({}, pattern);
    tail_up = spectrum.sector->n_up() - std::popcount(w.source);
    if (tail_up < 0) return finish({}, pattern);
  }
  const auto index = [&](Bits b) -> std::optional<std::size_t> {
    if (spectrum.sector) return spectrum.sector->index_of(b);
    return std::size_t{b};
  };
  double c = 0.0;
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    if (weights.weights[n] == 0.0) continue;
    const auto col = spectrum.eigenvectors.col(static_cast<Eigen::Index>(n));
    const double diag = tail_sum(w, tail_up, [&](Bits b) -> double {
      const auto i = index(b);
      return i ? col(static_cast<Eigen::Index>(*i)) : 0.0;
    });
    c += weights.weights[n] * diag;
  }
  return finish(c, pattern);
}

SignPattern best_pattern(const PureState& state, int m) {
  if (m < 1 || m > state.n_sites) throw ArgumentError("pattern order out of range");
  if (m > kMaxBestPatternOrder) {
    throw CapacityError("best_pattern enumerates at most 2^" +
                        std::to_string(kMaxBestPatternOrder) + " patterns");
  }
  SignPattern best;
  double best_e = -1.0;
  for (Bits code = 0; code < (Bits{1} << m); ++code) {
    SignPattern p;
    for (int k = 0; k < m; ++k) {
      p.ops.push_back(((code >> (m - 1 - k)) & 1U) ? Ladder::Lower : Ladder::Raise);
    }
    const double e = pure_correlator(state, p).e_value;
    if (e > best_e * (1.0 + 1e-12) + 1e-15) {
      best_e = e;
      best = std::move(p);
    }
  }
  return best;
}

}  // namespace spincorr
