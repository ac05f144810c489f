// Copyright 2026 The Chronon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "chronon/clock.hpp"
#include "chronon/continuum.hpp"
#include "chronon/errors.hpp"
#include "chronon/pw_engine.hpp"
#include "chronon/relativise.hpp"
#include "cli/csv.hpp"
#include "cli/svg.hpp"

namespace chronon::cli {
namespace {

constexpr double kDemoTol = 1e-10;
constexpr double kKucharTol = 1e-12;
constexpr double kSweepFinalTol = 1e-3;
// Allowed growth between consecutive sweep errors, plus an absolute
// cushion for points at the quadrature noise floor.
constexpr double kSweepSlack = 1.1;
constexpr double kSweepCushion = 1e-12;

struct Outcome {
  std::vector<ResultRow> rows;
  bool pass = true;
  double max_error = 0.0;

  // Optional chart.
  std::vector<Series> series;
  std::string plot_title, x_label, y_label;
  bool log_x = false, log_y = false;

  void add_error(double err) { max_error = std::max(max_error, err); }
};

ResultRow base_row(const ExperimentConfig& cfg, std::string quantity) {
  ResultRow row;
  row.experiment = cfg.experiment;
  row.quantity = std::move(quantity);
  row.seed = cfg.seed;
  return row;
}

ComplexVector reference_vector(const ReferenceSpec& spec,
                               const CyclicClock& clock_r) {
  if (spec.kind == "position") {
    return clock_r.position_vector(spec.index);
  }
  return clock_r.fourier_vector(spec.index);
}

Outcome run_discrete_demo(const ExperimentConfig& cfg) {
  Rng rng(cfg.seed);
  const ComplexMatrix h_s = resolve_hamiltonian(cfg, rng);
  const Povm povm = resolve_povm(cfg, rng);
  const DensityState rho_s = random_density(rng, cfg.dim_s);

  const CyclicClock clock_c(cfg.d);
  const CyclicClock clock_r(cfg.d);
  const int c = mod_ticks(cfg.clock_state_index, cfg.d);
  const ComplexVector xi = reference_vector(cfg.reference_state, clock_r);

  const JointObservable obs(povm, h_s, clock_c, clock_r);
  const std::vector<DensityState> parts = {
      rho_s, DensityState::pure(clock_c.position_vector(c)),
      DensityState::pure(xi)};
  const JointDistribution dist =
      joint_probability(obs, product_state(parts));
  const ConditionalTable table = conditional(dist);

  const SpectralDecomposition eig = hermitian_eig(h_s);
  Outcome out;
  out.series.resize(povm.size());
  for (std::size_t k = 0; k < povm.size(); ++k) {
    out.series[k].label = "k=" + std::to_string(k);
  }
  for (int n = 0; n < cfg.d; ++n) {
    if (!table.defined[static_cast<std::size_t>(n)]) continue;
    for (std::size_t k = 0; k < povm.size(); ++k) {
      const double computed =
          table.conditional(static_cast<Index>(k), n);
      const double reference =
          (rho_s.matrix() *
           heisenberg(povm.effect(k), eig, static_cast<double>(n - c)))
              .trace()
              .real();
      ResultRow row = base_row(cfg, "conditional");
      row.d = cfg.d;
      row.dim_s = cfg.dim_s;
      row.k = static_cast<int>(k);
      row.n = n;
      row.computed = computed;
      row.reference = reference;
      row.abs_error = std::abs(computed - reference);
      out.add_error(row.abs_error);
      out.rows.push_back(std::move(row));
      out.series[k].points.emplace_back(n, computed);
    }
  }
  out.pass = out.max_error < kDemoTol;
  out.plot_title = "Conditional outcome probabilities by clock reading";
  out.x_label = "clock reading n";
  out.y_label = "P(k | n)";
  return out;
}

Outcome run_kuchar(const ExperimentConfig& cfg) {
  const CyclicClock clock_c(cfg.d);
  const CyclicClock clock_r(cfg.d);
  const double nonscalar_distance =
      std::sqrt(static_cast<double>(cfg.d - 1));

  Outcome out;
  for (int n = 0; n < cfg.d; ++n) {
    const KucharReport report =
        kuchar_average(clock_c.position_projector(n), clock_c);
    ResultRow averaged = base_row(cfg, "kuchar-distance");
    averaged.d = cfg.d;
    averaged.n = n;
    averaged.computed = report.distance_to_scalar;
    averaged.reference = 0.0;
    averaged.abs_error = report.distance_to_scalar;
    out.pass = out.pass && averaged.abs_error < kKucharTol;
    out.add_error(averaged.abs_error);
    out.rows.push_back(std::move(averaged));

    // Contrast: the relativised clock effect is shift-invariant yet
    // stays far from every scalar.
    const RelativisedObservable z =
        relativise_clock_povm(clock_c, clock_r, n);
    ResultRow contrast = base_row(cfg, "relativised-clock-distance");
    contrast.d = cfg.d;
    contrast.n = n;
    contrast.computed = distance_to_scalar(z.matrix);
    contrast.reference = nonscalar_distance;
    contrast.abs_error = std::abs(contrast.computed - contrast.reference);
    out.pass = out.pass && contrast.abs_error < kDemoTol &&
               contrast.computed > 0.1;
    out.rows.push_back(std::move(contrast));
  }
  return out;
}

Outcome run_continuum(const ExperimentConfig& cfg) {
  Rng rng(cfg.seed);
  const ComplexMatrix h_s = resolve_hamiltonian(cfg, rng);
  const Povm povm = resolve_povm(cfg, rng);
  const DensityState rho = random_density(rng, cfg.dim_s);
  // The sweep works in the energy eigenbasis: the levels are the
  // resolved Hamiltonian's spectrum; state and effects are taken in
  // that representation.
  const RealVector energies = hermitian_eig(h_s).eigenvalues;
  const SpectralSystem sys = make_spectral_system(energies, rho, povm);

  const Profile f_c = resolve_density(cfg.f_c);
  const Profile f_r = resolve_density(cfg.f_r);
  const Profile window = resolve_window(cfg.window);

  Outcome out;
  for (double s : cfg.displacement_s) {
    const double target = limit_conditional(sys, 0, window, s, f_c);
    Series series{"s=" + format_double(s), {}};
    double prev_error = std::numeric_limits<double>::infinity();
    for (double lambda : cfg.lambda_grid) {
      const double ratio =
          conditional_ratio(sys, 0, window, s, f_c, f_r, lambda);
      const double err = std::abs(ratio - target);
      ResultRow row = base_row(cfg, "ratio");
      row.dim_s = cfg.dim_s;
      row.lambda = lambda;
      row.s = s;
      row.k = 0;
      row.computed = ratio;
      row.reference = target;
      row.abs_error = err;
      out.rows.push_back(std::move(row));
      series.points.emplace_back(lambda, err);

      out.pass = out.pass && err <= kSweepSlack * prev_error + kSweepCushion;
      prev_error = err;
    }
    out.pass = out.pass && prev_error < kSweepFinalTol;
    out.add_error(prev_error);
    out.series.push_back(std::move(series));
  }
  out.plot_title = "Conditioned ratio error versus reference dilation";
  out.x_label = "dilation lambda";
  out.y_label = "|ratio - limit|";
  out.log_x = true;
  out.log_y = true;
  return out;
}

// One validation check: a named deviation against its tolerance.
struct Check {
  std::string name;
  double deviation;
  double tol;
};

Outcome run_validate(const ExperimentConfig& cfg, std::ostream& log) {
  const int d = cfg.d;
  const int dim_s = cfg.dim_s;
  Rng rng(cfg.seed);
  std::vector<Check> checks;

  // Clock shift covariance; the corrupt flag swaps in the miscalibrated
  // generator so this check must fail.
  {
    const CyclicClock clock = cfg.corrupt_clock
                                  ? CyclicClock::with_unscaled_generator(d)
                                  : CyclicClock(d);
    checks.push_back({"clock-shift-covariance",
                      check_time_covariance(clock).max_deviation, 1e-10});
  }

  const CyclicClock clock_c(d);
  const CyclicClock clock_r(d);

  {
    const Povm povm = random_povm(rng, dim_s, 3);
    ComplexMatrix total = ComplexMatrix::Zero(dim_s, dim_s);
    for (std::size_t k = 0; k < povm.size(); ++k) total += povm.effect(k);
    checks.push_back(
        {"povm-completeness", (total - identity(dim_s)).norm(), 1e-10});

    const DensityState rho = random_density(rng, dim_s);
    checks.push_back({"state-unit-trace",
                      std::abs(rho.matrix().trace().real() - 1.0), 1e-12});
  }

  {
    const ComplexMatrix h_p = random_periodic_hamiltonian(rng, dim_s, d);
    const ComplexMatrix a = random_hermitian(rng, dim_s);
    const RelativisedObservable ya = relativise_system(a, h_p, clock_r);
    checks.push_back({"relativised-system-invariance",
                      check_invariance(ya, pair_hamiltonian(h_p, clock_r)),
                      1e-10});

    const RelativisedObservable z =
        relativise_clock_povm(clock_c, clock_r, 1);
    checks.push_back(
        {"relativised-clock-invariance",
         check_invariance(
             z, pair_hamiltonian(clock_c.shift_generator(), clock_r)),
         1e-10});

    const DensityState rho_r = random_density(rng, d);
    checks.push_back(
        {"restriction-covariance-clock",
         check_restriction_covariance(clock_c, clock_r, rho_r), 1e-10});
    const ComplexMatrix h_any = random_hermitian(rng, dim_s);
    checks.push_back(
        {"restriction-covariance-system",
         check_restriction_covariance(a, h_any, clock_r, rho_r), 1e-10});
    checks.push_back({"reference-exchange-identity",
                      exchange_identity_check(clock_c, clock_r), 1e-12});

    // Joint observable invariance under the additive Hamiltonian,
    // exhaustive in the shift, spot-checked in the reading.
    const Povm povm = random_povm(rng, dim_s, 3);
    const JointObservable obs(povm, h_p, clock_c, clock_r);
    const SpectralDecomposition total_eig =
        hermitian_eig(total_hamiltonian(h_p, clock_c, clock_r));
    double worst = 0.0;
    for (std::size_t k = 0; k < povm.size(); ++k) {
      for (int n : {0, d / 2}) {
        const ComplexMatrix m = obs.entry(k, n);
        for (int shift = 0; shift < d; ++shift) {
          worst = std::max(
              worst,
              (heisenberg(m, total_eig, static_cast<double>(shift)) - m)
                  .norm());
        }
      }
    }
    checks.push_back({"joint-observable-invariance", worst, 1e-10});
  }

  {
    const ComplexMatrix h_s = random_hermitian(rng, dim_s);
    const Povm povm = random_povm(rng, dim_s, 3);
    const DensityState rho_s = random_density(rng, dim_s);
    const JointObservable obs(povm, h_s, clock_c, clock_r);
    const SpectralDecomposition eig = hermitian_eig(h_s);
    const ComplexVector xi = clock_r.fourier_vector(0);
    const std::vector<DensityState> parts = {
        rho_s, DensityState::pure(clock_c.position_vector(0)),
        DensityState::pure(xi)};
    const ConditionalTable table =
        conditional(joint_probability(obs, product_state(parts)));
    double worst = 0.0;
    for (int n = 0; n < d; ++n) {
      if (!table.defined[static_cast<std::size_t>(n)]) continue;
      for (std::size_t k = 0; k < povm.size(); ++k) {
        const double reference =
            (rho_s.matrix() *
             heisenberg(povm.effect(k), eig, static_cast<double>(n)))
                .trace()
                .real();
        worst = std::max(
            worst,
            std::abs(table.conditional(static_cast<Index>(k), n) -
                     reference));
      }
    }
    checks.push_back({"conditional-heisenberg-recovery", worst, 1e-10});

    // History-state route: same conditionals from the entangled vector.
    const std::vector<Complex> lambdas = random_amplitudes(rng, d);
    const ComplexVector psi_s = random_state_vector(rng, dim_s);
    const ComplexVector history = entangled_state(
        lambdas, h_s, clock_c, clock_r, psi_s, xi);
    const ConditionalTable entangled =
        conditional(joint_probability(obs, DensityState::pure(history)));
    const SpectralDecomposition eig_s = hermitian_eig(h_s);
    const DensityState rho_psi = DensityState::pure(psi_s);
    double worst_history = 0.0;
    for (int n = 0; n < d; ++n) {
      if (!entangled.defined[static_cast<std::size_t>(n)]) continue;
      for (std::size_t k = 0; k < povm.size(); ++k) {
        const double reference =
            (rho_psi.matrix() *
             heisenberg(povm.effect(k), eig_s, static_cast<double>(n)))
                .trace()
                .real();
        worst_history = std::max(
            worst_history,
            std::abs(entangled.conditional(static_cast<Index>(k), n) -
                     reference));
      }
    }
    checks.push_back({"history-state-equivalence", worst_history, 1e-10});
  }

  {
    double worst_avg = 0.0;
    double min_contrast = std::numeric_limits<double>::infinity();
    for (int n = 0; n < d; ++n) {
      worst_avg = std::max(
          worst_avg,
          kuchar_average(clock_c.position_projector(n), clock_c)
              .distance_to_scalar);
      min_contrast = std::min(
          min_contrast,
          distance_to_scalar(
              relativise_clock_povm(clock_c, clock_r, n).matrix));
    }
    checks.push_back({"kuchar-average-triviality", worst_avg, 1e-12});
    checks.push_back(
        {"relativised-clock-nonscalar",
         std::abs(min_contrast - std::sqrt(static_cast<double>(d - 1))),
         1e-10});
  }

  {
    RealVector energies(2);
    energies << 0.0, 1.3;
    const SpectralSystem sys = make_spectral_system(
        energies, random_density(rng, 2), random_povm(rng, 2, 2));
    const Profile window = Profile::gaussian_window(0.8);
    const Profile f_c = Profile::gaussian(0.4);
    const Profile f_r = Profile::gaussian(0.5);
    const double freq = conditional_ratio(sys, 0, window, 0.5, f_c, f_r,
                                          4.0);
    const double time = time_domain_ratio(sys, 0, window, 0.5, f_c, f_r,
                                          4.0);
    checks.push_back(
        {"continuum-route-agreement", std::abs(freq - time), 1e-6});

    const Profile narrow_window = resolve_window(cfg.window);
    const Profile narrow_clock = resolve_density(cfg.f_c);
    const Profile reference_density = resolve_density(cfg.f_r);
    const double target =
        limit_conditional(sys, 0, narrow_window, 0.5, narrow_clock);
    const double at32 = conditional_ratio(sys, 0, narrow_window, 0.5,
                                          narrow_clock, reference_density,
                                          32.0);
    checks.push_back(
        {"continuum-limit-approach", std::abs(at32 - target), 1e-2});

    ComplexMatrix total = ComplexMatrix::Zero(2, 2);
    for (std::size_t k = 0; k < sys.povm.size(); ++k) {
      total += effective_operator(sys, k, narrow_window, narrow_clock);
    }
    checks.push_back(
        {"effective-operator-sum", (total - identity(2)).norm(), 1e-10});

    const Profile unit = Profile::gaussian(1.0, 0.3);
    checks.push_back(
        {"transform-normalization",
         std::abs(unit.fourier(0.0) -
                  Complex(1.0 / std::sqrt(2.0 * std::numbers::pi), 0.0)),
         1e-14});
    checks.push_back({"transform-scaling",
                      std::abs(unit.scaled(3.0).fourier(0.4) -
                               unit.fourier(1.2)),
                      1e-12});
  }

  Outcome out;
  for (const Check& check : checks) {
    const bool ok = check.deviation < check.tol;
    log << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(34)
        << check.name << " deviation " << std::scientific
        << std::setprecision(3) << check.deviation << "  (tol "
        << std::setprecision(0) << check.tol << ")\n"
        << std::defaultfloat;
    ResultRow row = base_row(cfg, check.name);
    row.d = d;
    row.dim_s = dim_s;
    row.computed = check.deviation;
    row.reference = 0.0;
    row.abs_error = check.deviation;
    out.rows.push_back(std::move(row));
    out.pass = out.pass && ok;
    out.add_error(check.deviation);
  }
  return out;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  Outcome out;
  if (cfg.experiment == "discrete-demo") {
    out = run_discrete_demo(cfg);
  } else if (cfg.experiment == "kuchar") {
    out = run_kuchar(cfg);
  } else if (cfg.experiment == "continuum-sweep") {
    out = run_continuum(cfg);
  } else if (cfg.experiment == "validate") {
    out = run_validate(cfg, log);
  } else {
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  }

  const std::filesystem::path dir(cfg.output_dir);
  write_file_atomic(dir / "results.csv", to_csv(out.rows));
  write_file_atomic(dir / "manifest.json", to_json(cfg).dump(2) + "\n");
  if (!out.series.empty()) {
    write_file_atomic(dir / "plot.svg",
                      line_chart(out.plot_title, out.x_label, out.y_label,
                                 out.series, out.log_x, out.log_y));
  }

  log << cfg.experiment << ": " << out.rows.size() << " rows, worst error "
      << std::scientific << std::setprecision(3) << out.max_error
      << std::defaultfloat << " -> " << (dir / "results.csv").string()
      << "\n"
      << (out.pass ? "PASS" : "FAIL") << "\n";
  return out.pass ? 0 : 1;
}

}  // namespace chronon::cli
