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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "chronon/continuum.hpp"
#include "chronon/opalg.hpp"
#include "chronon/quantum.hpp"
#include "chronon/random.hpp"

namespace chronon {
namespace {

constexpr double kRootTwoPi = 2.5066282746310002;

// Fixed-grid Simpson transform, independent of the library quadrature.
Complex simpson_fourier(const Profile& f, double omega, double lo, double hi,
                        int intervals) {
  const double step = (hi - lo) / intervals;
  Complex sum(0.0, 0.0);
  for (int i = 0; i <= intervals; ++i) {
    const double t = lo + i * step;
    const double w = (i == 0 || i == intervals) ? 1.0
                     : (i % 2 == 1)             ? 4.0
                                                : 2.0;
    sum += w * f.value(t) * std::exp(Complex(0.0, omega * t));
  }
  return sum * step / 3.0 / kRootTwoPi;
}

SpectralSystem two_level(Rng& rng, double gap) {
  RealVector energies(2);
  energies << 0.0, gap;
  return make_spectral_system(energies, random_density(rng, 2),
                              random_povm(rng, 2, 2));
}

double heisenberg_value(const SpectralSystem& sys, std::size_t k, double s) {
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = sys.energies(0);
  h(1, 1) = sys.energies(1);
  return (sys.rho.matrix() * heisenberg(sys.povm.effect(k), h, s))
      .trace()
      .real();
}

}  // namespace

TEST_CASE("gaussian transforms match quadrature and pin the conventions") {
  const Profile f = Profile::gaussian(0.5, 0.7);
  for (double omega : {0.0, 1.0, 3.0}) {
    const Complex oracle = simpson_fourier(f, omega, 0.7 - 8.0, 0.7 + 8.0,
                                           4000);
    CHECK(std::abs(f.fourier(omega) - oracle) < 1e-12);
  }
  // Densities carry (2 pi)^{-1/2} at the origin; the center enters as
  // exp(+i omega c) under the exp(+i omega t) transform.
  CHECK(std::abs(f.fourier(0.0) - Complex(1.0 / kRootTwoPi, 0.0)) < 1e-14);
  const Complex at_one = f.fourier(1.0);
  CHECK(std::atan2(at_one.imag(), at_one.real()) == doctest::Approx(0.7));

  const Profile w = Profile::gaussian_window(0.5, 0.0);
  CHECK(w.value(0.0) == doctest::Approx(1.0));
  CHECK(std::abs(w.fourier(0.0) - Complex(0.5, 0.0)) < 1e-14);
}

TEST_CASE("bump transforms match quadrature") {
  const Profile f = Profile::bump(1.5, 0.3);
  for (double omega : {0.0, 0.5, 2.0}) {
    const Complex oracle =
        simpson_fourier(f, omega, 0.3 - 1.5, 0.3 + 1.5, 6000);
    CHECK(std::abs(f.fourier(omega) - oracle) < 1e-9);
  }
  CHECK(f.value(0.3 - 1.5) == 0.0);
  CHECK(f.value(0.3 + 1.6) == 0.0);
}

TEST_CASE("sampled profiles reproduce their source and obey Nyquist") {
  const double sigma = 1.0;
  const double lo = -8.0, dt = 16.0 / 2000;
  std::vector<double> samples(2001);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const double t = lo + static_cast<double>(j) * dt;
    samples[j] = std::exp(-t * t / (2.0 * sigma * sigma));
  }
  double trap = 0.0;
  for (std::size_t j = 0; j + 1 < samples.size(); ++j) {
    trap += 0.5 * (samples[j] + samples[j + 1]) * dt;
  }
  for (double& v : samples) v /= trap;

  const Profile table = Profile::table(samples, dt, lo);
  const Profile exact = Profile::gaussian(sigma);
  for (double omega : {0.0, 0.8, 2.5}) {
    CHECK(std::abs(table.fourier(omega) - exact.fourier(omega)) < 1e-6);
  }
  CHECK_THROWS_AS(table.fourier(400.0), GridTooCoarseError);
}

TEST_CASE("scaling a density rescales its transform argument") {
  for (const Profile& f :
       {Profile::gaussian(0.6, 0.2), Profile::bump(1.0, -0.4)}) {
    const Profile wide = f.scaled(3.0);
    for (double omega : {0.3, 1.1}) {
      CHECK(std::abs(wide.fourier(omega) - f.fourier(3.0 * omega)) < 1e-9);
    }
  }
}

TEST_CASE("profile constructors validate their inputs") {
  CHECK_THROWS_AS(Profile::gaussian(0.0), ConfigError);
  CHECK_THROWS_AS(Profile::gaussian(-1.0), ConfigError);
  CHECK_THROWS_AS(Profile::bump(0.0), ConfigError);

  CHECK_THROWS_AS(Profile::table({1.0}, 0.1, 0.0), ConfigError);
  CHECK_THROWS_AS(Profile::table({1.0, 1.0}, 0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(Profile::table({10.0, -10.0, 10.0}, 0.1, 0.0),
                  NotPositiveError);
  CHECK_THROWS_AS(Profile::table({1.0, 1.0, 1.0}, 0.1, 0.0),
                  NotNormalizedError);
  CHECK_THROWS_AS(Profile::table_window({0.5, 1.2, 0.5}, 0.1, 0.0),
                  EffectOutOfRangeError);
}

TEST_CASE("spectral systems validate dimensions and energies") {
  Rng rng(4101);
  RealVector energies(2);
  energies << 0.0, 1.0;
  const DensityState rho = random_density(rng, 2);
  const Povm povm = random_povm(rng, 2, 2);

  RealVector bad = energies;
  bad(1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make_spectral_system(bad, rho, povm), ConfigError);

  RealVector three(3);
  three << 0.0, 1.0, 2.0;
  CHECK_THROWS_AS(make_spectral_system(three, rho, povm), DimensionError);
}

TEST_CASE("the trivial effect conditions to exactly one") {
  Rng rng(4102);
  RealVector energies(2);
  energies << 0.0, 1.3;
  const SpectralSystem sys = make_spectral_system(
      energies, random_density(rng, 2), Povm::trivial(2));

  const Profile window = Profile::gaussian_window(0.8);
  const Profile f_c = Profile::gaussian(0.4);
  const Profile f_r = Profile::gaussian(0.5);
  for (double lambda : {1.0, 8.0}) {
    for (double s : {0.0, 1.5}) {
      CHECK(std::abs(conditional_ratio(sys, 0, window, s, f_c, f_r, lambda) -
                     1.0) < 1e-15);
      CHECK(std::abs(time_domain_ratio(sys, 0, window, s, f_c, f_r, lambda) -
                     1.0) < 1e-9);
    }
  }
}

TEST_CASE("commuting states and effects make the ratio static") {
  RealVector energies(2);
  energies << 0.0, 1.3;
  ComplexMatrix rho_m = ComplexMatrix::Zero(2, 2);
  rho_m(0, 0) = 0.3;
  rho_m(1, 1) = 0.7;
  const SpectralSystem sys = make_spectral_system(
      energies, validate_state(rho_m), Povm::sharp_basis(2));

  const Profile window = Profile::gaussian_window(0.8);
  const Profile f_c = Profile::gaussian(0.4);
  const Profile f_r = Profile::gaussian(0.5);
  for (std::size_t k : {std::size_t{0}, std::size_t{1}}) {
    const double expected = rho_m(static_cast<Index>(k),
                                  static_cast<Index>(k)).real();
    for (double lambda : {1.0, 4.0}) {
      for (double s : {0.0, 1.0}) {
        CHECK(std::abs(conditional_ratio(sys, k, window, s, f_c, f_r,
                                         lambda) - expected) < 1e-10);
      }
    }
  }
}

TEST_CASE("frequency and time routes agree") {
  Rng rng(4103);
  const SpectralSystem sys = two_level(rng, 1.3);
  const Profile window = Profile::gaussian_window(0.8);
  const Profile f_r = Profile::gaussian(0.5);

  const Profile gauss_clock = Profile::gaussian(0.4);
  const struct {
    double lambda;
    double s;
  } cases[] = {{1.0, 0.0}, {4.0, 0.5}, {16.0, 2.0}};
  for (const auto& c : cases) {
    const double freq =
        conditional_ratio(sys, 0, window, c.s, gauss_clock, f_r, c.lambda);
    const double time =
        time_domain_ratio(sys, 0, window, c.s, gauss_clock, f_r, c.lambda);
    CHECK(std::abs(freq - time) < 1e-6);
  }

  const Profile bump_clock = Profile::bump(0.9, 0.1);
  const double freq =
      conditional_ratio(sys, 1, window, 0.5, bump_clock, f_r, 2.0);
  const double time =
      time_domain_ratio(sys, 1, window, 0.5, bump_clock, f_r, 2.0);
  CHECK(std::abs(freq - time) < 1e-6);
}

TEST_CASE("narrow filters with a broad reference recover Heisenberg values") {
  Rng rng(4104);
  const SpectralSystem sys = two_level(rng, 1.3);
  const Profile window = Profile::gaussian_window(0.02);
  const Profile f_c = Profile::gaussian(0.02);
  const Profile f_r = Profile::gaussian(1.0);

  for (double s : {0.0, 0.7}) {
    const double ratio = conditional_ratio(sys, 0, window, s, f_c, f_r, 64.0);
    CHECK(std::abs(ratio - heisenberg_value(sys, 0, s)) < 1e-2);
  }
}

TEST_CASE("widening the reference drives the ratio to its limit") {
  Rng rng(4105);
  const SpectralSystem sys = two_level(rng, 1.1);
  const Profile window = Profile::gaussian_window(0.1);
  const Profile f_c = Profile::gaussian(0.05);
  const Profile f_r = Profile::gaussian(1.0);
  const double s = 0.5;

  const double target = limit_conditional(sys, 0, window, s, f_c);
  const double err4 =
      std::abs(conditional_ratio(sys, 0, window, s, f_c, f_r, 4.0) - target);
  const double err16 =
      std::abs(conditional_ratio(sys, 0, window, s, f_c, f_r, 16.0) - target);
  CHECK(err16 < err4);
  CHECK(err16 < 1e-2);
}

TEST_CASE("effective operators apply the spectral filter entrywise") {
  Rng rng(4106);
  const SpectralSystem sys = two_level(rng, 1.3);
  const double gap = 1.3;

  // Near-flat filter: the effect passes through.
  const Profile flat = Profile::gaussian(1e-3);
  const ComplexMatrix passed = effective_operator(sys, 0, flat);
  CHECK((passed - sys.povm.effect(0)).norm() < 1e-6);

  // Gaussian filter: off-diagonal entries attenuate by the closed-form
  // factor; diagonals are untouched.
  const double sigma = 0.7;
  const Profile f_c = Profile::gaussian(sigma);
  const ComplexMatrix filtered = effective_operator(sys, 0, f_c);
  const double factor = std::exp(-sigma * sigma * gap * gap / 2.0);
  CHECK(std::abs(filtered(0, 1) - sys.povm.effect(0)(0, 1) * factor) < 1e-8);
  CHECK(std::abs(filtered(1, 0) - sys.povm.effect(0)(1, 0) * factor) < 1e-8);
  CHECK(std::abs(filtered(0, 0) - sys.povm.effect(0)(0, 0)) < 1e-14);
  CHECK((filtered - ComplexMatrix(filtered.adjoint())).norm() < 1e-12);

  // Window variant stacks a second factor.
  const double sigma_h = 0.4;
  const Profile window = Profile::gaussian_window(sigma_h);
  const ComplexMatrix both = effective_operator(sys, 0, window, f_c);
  const double stacked =
      factor * std::exp(-sigma_h * sigma_h * gap * gap / 2.0);
  CHECK(std::abs(both(0, 1) - sys.povm.effect(0)(0, 1) * stacked) < 1e-8);

  // The filtered family still resolves the identity.
  ComplexMatrix total = ComplexMatrix::Zero(2, 2);
  for (std::size_t k = 0; k < sys.povm.size(); ++k) {
    total += effective_operator(sys, k, window, f_c);
  }
  CHECK((total - identity(2)).norm() < 1e-10);
}

TEST_CASE("the limit value is the filtered Heisenberg expectation") {
  Rng rng(4107);
  const SpectralSystem sys = two_level(rng, 1.3);
  const Profile window = Profile::gaussian_window(0.4);
  const Profile f_c = Profile::gaussian(0.7);

  // s = 0 with everything diagonal: plain expectation of the filtered
  // effect, which has untouched diagonals.
  RealVector energies(2);
  energies << 0.0, 1.3;
  ComplexMatrix rho_m = ComplexMatrix::Zero(2, 2);
  rho_m(0, 0) = 0.25;
  rho_m(1, 1) = 0.75;
  const SpectralSystem diag = make_spectral_system(
      energies, validate_state(rho_m), Povm::sharp_basis(2));
  CHECK(std::abs(limit_conditional(diag, 0, window, 0.0, f_c) - 0.25) <
        1e-12);

  // Generic case: matches tr[rho alpha_s(B)] computed directly.
  const ComplexMatrix b = effective_operator(sys, 0, window, f_c);
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = sys.energies(0);
  h(1, 1) = sys.energies(1);
  for (double s : {0.0, 0.8}) {
    const double direct =
        (sys.rho.matrix() * heisenberg(b, h, s)).trace().real();
    CHECK(std::abs(limit_conditional(sys, 0, window, s, f_c) - direct) <
          1e-12);
  }
}

TEST_CASE("degenerate filters and disjoint supports are rejected") {
  Rng rng(4108);
  const SpectralSystem sys = two_level(rng, 1.3);
  const Profile f_c = Profile::gaussian(0.4);
  const Profile f_r = Profile::gaussian(0.5);

  const Profile dead_window = Profile::table_window({0.0, 0.0, 0.0}, 0.5, -0.5);
  CHECK_THROWS_AS(effective_operator(sys, 0, dead_window, f_c),
                  FilterZeroAtOriginError);
  CHECK_THROWS_AS(
      conditional_ratio(sys, 0, dead_window, 0.0, f_c, f_r, 1.0),
      DenominatorVanishesError);

  // Clock support far from anything the window can reach.
  const Profile far_clock = Profile::bump(0.5, 300.0);
  const Profile near_ref = Profile::bump(0.5, 0.0);
  const Profile tight_window = Profile::bump_window(0.5, 0.0);
  CHECK_THROWS_AS(
      time_domain_ratio(sys, 0, tight_window, 0.0, far_clock, near_ref, 1.0),
      DenominatorVanishesError);

  CHECK_THROWS_AS(conditional_ratio(sys, 0, tight_window, 0.0, f_c, f_r, 0.0),
                  ConfigError);
  CHECK_THROWS_AS(conditional_ratio(sys, 0, tight_window, 0.0, f_c, f_r,
                                    -2.0),
                  ConfigError);
}

}  // namespace chronon
