// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincorr/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spincorr/bethe.hpp"
#include "spincorr/closedform.hpp"
#include "spincorr/correlator.hpp"
#include "spincorr/csv.hpp"
#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/hamiltonian.hpp"
#include "spincorr/hierarchy.hpp"
#include "spincorr/scaling.hpp"

namespace spincorr::cli {

namespace {

struct Common {
  std::string out_path;
  std::string manifest_path;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-10;
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s << ',';
    if constexpr (std::is_floating_point_v<T>) {
      s << format_double(v[i]);
    } else {
      s << v[i];
    }
  }
  return s.str();
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "Write CSV here instead of stdout");
  sub->add_option("--manifest", c.manifest_path,
                  "Manifest path (defaults to <out>.manifest when --out is given)");
  sub->add_option("--seed", c.seed, "Lanczos start-vector seed");
  sub->add_option("--tol", c.tol, "Lanczos residual tolerance")->check(CLI::Range(1e-15, 1e-6));
}

PureState solve(const LinearOperator& op, const Common& c) {
  LanczosOptions opt;
  opt.tol = c.tol;
  opt.seed = c.seed;
  opt.check_degeneracy = false;
  return ground_state(op, opt);
}

// --- subcommands -----------------------------------------------------------

struct IsingArgs {
  int n = 6;
  double g_min = 1e-3;
  double g_max = 5.0;
  int steps = 100;
  double k = 0.0;
  std::vector<int> orders;
};

CsvTable run_ising(const IsingArgs& a, const Common& c, RunManifest& m) {
  std::vector<int> orders = a.orders;
  if (orders.empty()) {
    for (int k = 2; k <= a.n; ++k) orders.push_back(k);
  }
  for (int o : orders) {
    if (o < 1 || o > a.n) throw ArgumentError("orders must lie in [1, n]");
  }
  m.set("n", std::to_string(a.n));
  m.set("g_min", format_double(a.g_min));
  m.set("g_max", format_double(a.g_max));
  m.set("steps", std::to_string(a.steps));
  m.set("k", format_double(a.k));
  m.set("orders", join(orders));

  CsvTable t;
  t.header.push_back("g");
  for (int o : orders) t.header.push_back("E" + std::to_string(o));
  for (double g : linear_grid(a.g_min, a.g_max, a.steps)) {
    const PureState st = solve(build(ising_chain(a.n, g, a.k)), c);
    std::vector<double> row{g};
    for (int o : orders) row.push_back(pure_correlator(st, alternating_pattern(o)).e_value);
    t.add_row(row);
  }
  return t;
}

struct XxzArgs {
  int n = 10;
  double delta_min = -0.95;
  double delta_max = 0.95;
  int steps = 39;
  std::string method = "ed";
};

CsvTable run_xxz(const XxzArgs& a, const Common& c, RunManifest& m) {
  if (a.n % 2 != 0 || a.n < 4) throw ArgumentError("xxz needs even n >= 4");
  m.set("n", std::to_string(a.n));
  m.set("delta_min", format_double(a.delta_min));
  m.set("delta_max", format_double(a.delta_max));
  m.set("steps", std::to_string(a.steps));
  m.set("method", a.method);

  CsvTable t;
  t.header = {"delta", "E" + std::to_string(a.n), "E" + std::to_string(a.n - 2)};
  for (double d : linear_grid(a.delta_min, a.delta_max, a.steps)) {
    if (a.method == "bethe") {
      const auto bs = bethe::solve_ground(a.n, d);
      t.add_row({d, bethe::e_n(bs), bethe::e_n_minus_2(bs)});
    } else {
      const PureState st = solve(build(xxz_chain(a.n, d), a.n / 2), c);
      t.add_row({d, pure_correlator(st, alternating_pattern(a.n)).e_value,
                 pure_correlator(st, alternating_pattern(a.n - 2)).e_value});
    }
  }
  return t;
}

struct Thermal4Args {
  std::vector<double> betas{1.0, 2.0, 5.0, 10.0};
  std::string delta_range = "-0.99:5:200";
  std::string formula = "spectral";
};

CsvTable run_thermal4(const Thermal4Args& a, RunManifest& m) {
  double lo = 0.0, hi = 0.0;
  int steps = 0;
  {
    std::string r = a.delta_range;
    for (auto& ch : r) {
      if (ch == ':') ch = ' ';
    }
    std::istringstream in(r);
    if (!(in >> lo >> hi >> steps) || steps < 1) {
      throw ArgumentError("--delta-range expects min:max:steps");
    }
  }
  m.set("beta_list", join(a.betas));
  m.set("delta_range", a.delta_range);
  m.set("formula", a.formula);

  const bool use_ed = a.formula == "ed";
  std::optional<SpectralDecomposition> spectra;
  CsvTable t;
  t.header.push_back("delta");
  for (double b : a.betas) t.header.push_back("E4[beta=" + format_double(b) + "]");
  for (double d : linear_grid(lo, hi, steps)) {
    std::vector<double> row{d};
    if (use_ed) {
      const SpectralDecomposition spec = full_spectrum(build(xxz_chain(4, d)));
      for (double b : a.betas) {
        const auto w = thermal_weights(spec, b * kSpinHalfEnergyUnit);
        row.push_back(thermal_correlator(spec, w, alternating_pattern(4)).e_value);
      }
    } else {
      const auto f = a.formula == "printed" ? Xxz4Formula::Printed : Xxz4Formula::Spectral;
      for (double b : a.betas) row.push_back(xxz4_thermal(d, b, f));
    }
    t.add_row(row);
  }
  return t;
}

CsvTable run_mg(int n, const Common& c, RunManifest& m) {
  m.set("n", std::to_string(n));
  LanczosOptions opt;
  opt.tol = c.tol;
  opt.seed = c.seed;
  opt.check_degeneracy = false;
  const PureState st = ground_state(build(majumdar_ghosh_chain(n), n / 2), opt);
  const double ed_n = pure_correlator(st, alternating_pattern(n)).e_value;
  const double ed_n2 = pure_correlator(st, alternating_pattern(n - 2)).e_value;
  const double cf_n = mg_e_n(n);
  const double cf_n2 = mg_e_n_minus_2(n);
  CsvTable t;
  t.header = {"quantity", "closed_form", "ed", "abs_diff"};
  t.rows.push_back({"E" + std::to_string(n), format_double(cf_n), format_double(ed_n),
                    format_double(std::abs(cf_n - ed_n))});
  t.rows.push_back({"E" + std::to_string(n - 2), format_double(cf_n2), format_double(ed_n2),
                    format_double(std::abs(cf_n2 - ed_n2))});
  t.rows.push_back({"bell_limit", format_double(std::ldexp(1.0, -n)), format_double(ed_n),
                    format_double(std::abs(ed_n - std::ldexp(1.0, -n)))});
  return t;
}

CsvTable run_certify(double value, int n, bool shapes, std::ostream& summary, RunManifest& m) {
  m.set("value", format_double(value));
  m.set("n", std::to_string(n));
  const DepthCertificate cert = certify(value, n);
  const auto depth = [](const std::optional<int>& d) {
    return d ? std::to_string(*d) : std::string("unexplainable");
  };
  summary << "ent_depth " << depth(cert.ent_depth) << '\n';
  summary << "nl_depth " << depth(cert.nl_depth) << '\n';
  CsvTable t;
  if (shapes) {
    t.header = {"mode", "shape", "bound", "explains"};
    for (auto mode : {BoundMode::Entanglement, BoundMode::Locality}) {
      for (const auto& s : shape_ladder(n, mode)) {
        t.rows.push_back({mode == BoundMode::Entanglement ? "entanglement" : "locality",
                          s.label(), format_double(s.bound),
                          value <= s.bound + kThresholdTolerance ? "1" : "0"});
      }
    }
    return t;
  }
  t.header = {"k", "entanglement_bound", "nonlocality_bound"};
  for (std::size_t i = 0; i < cert.ent_ladder.size(); ++i) {
    t.rows.push_back({std::to_string(cert.ent_ladder[i].k),
                      format_double(cert.ent_ladder[i].threshold),
                      format_double(cert.nl_ladder[i].threshold)});
  }
  return t;
}

struct ScalingArgs {
  std::vector<double> ks{0.0};
  std::vector<int> sizes{8, 12, 16, 20};
  int coarse = 61;
  int refine = 21;
  double g_min = 0.2;
  double g_max = 2.0;
  int workers = 0;
};

CsvTable run_scaling(const ScalingArgs& a, const Common& c, RunManifest& m) {
  m.set("k", join(a.ks));
  m.set("sizes", join(a.sizes));
  m.set("coarse_points", std::to_string(a.coarse));
  m.set("refine_points", std::to_string(a.refine));
  m.set("g_min", format_double(a.g_min));
  m.set("g_max", format_double(a.g_max));
  SweepOptions opt;
  opt.seed = c.seed;
  opt.tol = std::max(c.tol, 1e-12);
  opt.workers = a.workers > 0 ? a.workers : configured_workers(1);
  m.set("workers", std::to_string(opt.workers));
  PeakSearch search;
  search.coarse_points = a.coarse;
  search.refine_points = a.refine;
  search.g_min = a.g_min;
  search.g_max = a.g_max;

  CsvTable t;
  t.header = {"k", "n", "g_star", "fit_intercept", "fit_slope", "fit_stderr", "fit_conf90",
              "expected_gc"};
  for (double k : a.ks) {
    std::vector<SizePeak> peaks;
    for (int n : a.sizes) peaks.push_back({n, locate_peak(k, n, search, opt).g_star});
    const ScalingFit fit = extrapolate(peaks);
    for (const auto& p : peaks) {
      t.add_row({k, static_cast<double>(p.n_sites), p.g_star, fit.intercept, fit.slope,
                 fit.stderr_intercept, fit.confidence, 1.0 - 2.0 * k});
    }
  }
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formation-probability correlators and correlation-depth certificates for "
               "spin-1/2 chains"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;

  IsingArgs ising;
  auto* ising_cmd = app.add_subcommand("ising", "E_m(g) for the (long-range) Ising chain");
  ising_cmd->add_option("--n", ising.n, "Chain length")->check(CLI::Range(2, 24));
  ising_cmd->add_option("--g-min", ising.g_min, "Smallest transverse field");
  ising_cmd->add_option("--g-max", ising.g_max, "Largest transverse field");
  ising_cmd->add_option("--steps", ising.steps, "Number of grid points")->check(CLI::PositiveNumber);
  ising_cmd->add_option("--k", ising.k, "Next-nearest-neighbour coupling K");
  ising_cmd->add_option("--orders", ising.orders, "Correlator orders, e.g. 2,3,4")->delimiter(',');
  add_common(ising_cmd, common);

  XxzArgs xxz;
  auto* xxz_cmd = app.add_subcommand("xxz", "E_N and E_{N-2} of the XXZ ring ground state");
  xxz_cmd->add_option("--n", xxz.n, "Chain length (even)")->check(CLI::Range(4, 24));
  xxz_cmd->add_option("--delta-min", xxz.delta_min, "Smallest anisotropy");
  xxz_cmd->add_option("--delta-max", xxz.delta_max, "Largest anisotropy");
  xxz_cmd->add_option("--steps", xxz.steps, "Number of grid points")->check(CLI::PositiveNumber);
  xxz_cmd->add_option("--method", xxz.method, "ed or bethe")
      ->check(CLI::IsMember({"ed", "bethe"}));
  add_common(xxz_cmd, common);

  Thermal4Args thermal;
  auto* thermal_cmd = app.add_subcommand("thermal4", "Thermal E_4 of the 4-site XXZ ring");
  thermal_cmd->add_option("--beta-list", thermal.betas, "Inverse temperatures")->delimiter(',');
  thermal_cmd->add_option("--delta-range", thermal.delta_range, "min:max:steps");
  thermal_cmd->add_option("--formula", thermal.formula, "spectral, printed or ed")
      ->check(CLI::IsMember({"spectral", "printed", "ed"}));
  add_common(thermal_cmd, common);

  int mg_n = 8;
  auto* mg_cmd = app.add_subcommand("mg", "Majumdar-Ghosh closed form against ED");
  mg_cmd->add_option("--n", mg_n, "Chain length (even)")->check(CLI::Range(4, 24));
  add_common(mg_cmd, common);

  double cert_value = 0.0;
  int cert_n = 6;
  bool cert_shapes = false;
  auto* cert_cmd = app.add_subcommand("certify", "Entanglement and non-locality depth of E_N");
  cert_cmd->add_option("--value", cert_value, "Measured E_N")->required();
  cert_cmd->add_option("--n", cert_n, "Number of spins")->check(CLI::Range(1, kMaxLadderSites));
  cert_cmd->add_flag("--shapes", cert_shapes, "List every block shape and its bound");
  add_common(cert_cmd, common);

  ScalingArgs scaling;
  auto* scaling_cmd = app.add_subcommand("scaling", "Finite-size scaling of the E_{N/2} peak");
  scaling_cmd->add_option("--k", scaling.ks, "Next-nearest couplings K")->delimiter(',');
  scaling_cmd->add_option("--sizes", scaling.sizes, "Chain lengths")->delimiter(',');
  scaling_cmd->add_option("--coarse", scaling.coarse, "Coarse grid points");
  scaling_cmd->add_option("--refine", scaling.refine, "Refinement grid points");
  scaling_cmd->add_option("--g-min", scaling.g_min, "Coarse grid start");
  scaling_cmd->add_option("--g-max", scaling.g_max, "Coarse grid end");
  scaling_cmd->add_option("--workers", scaling.workers, "Worker threads (SPIN_CORR_WORKERS)");
  add_common(scaling_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kArgumentError;
  }

  const auto started = std::chrono::steady_clock::now();
  RunManifest manifest;
  auto* cmd = app.get_subcommands().front();
  manifest.set("subcommand", cmd->get_name());
  manifest.set("tool_version", kVersion);
  manifest.set("seed", std::to_string(common.seed));
  manifest.set("tol", format_double(common.tol));

  std::ostringstream summary;
  try {
    CsvTable table;
    if (cmd == ising_cmd) {
      table = run_ising(ising, common, manifest);
    } else if (cmd == xxz_cmd) {
      table = run_xxz(xxz, common, manifest);
    } else if (cmd == thermal_cmd) {
      table = run_thermal4(thermal, manifest);
    } else if (cmd == mg_cmd) {
      table = run_mg(mg_n, common, manifest);
    } else if (cmd == cert_cmd) {
      table = run_certify(cert_value, cert_n, cert_shapes, summary, manifest);
    } else {
      table = run_scaling(scaling, common, manifest);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    manifest.set("wall_time_s", format_double(seconds));

    out << summary.str();
    std::string manifest_path = common.manifest_path;
    if (common.out_path.empty()) {
      emit_csv(table, out);
    } else {
      emit_csv(table, std::filesystem::path(common.out_path));
      if (manifest_path.empty()) manifest_path = common.out_path + ".manifest";
    }
    if (!manifest_path.empty()) {
      std::ofstream mf(manifest_path, std::ios::binary | std::ios::trunc);
      if (!(mf << manifest.str())) throw IoError("cannot write manifest " + manifest_path);
    }
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (best residual "
        << format_double(e.best_residual()) << ")\n";
    return kConvergenceError;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const DomainError& e) {
    err << "argument error: " << e.what() << '\n';
    return kArgumentError;
  }
  return kSuccess;
}

}  // namespace spincorr::cli
