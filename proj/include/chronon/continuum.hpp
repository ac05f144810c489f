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

#pragma once

#include <vector>

#include "chronon/quantum.hpp"

namespace chronon {

// A real, nonnegative, compactly-concentrated profile on the time axis.
// Density flavors integrate to one; window flavors peak at one. The
// Fourier transform convention is
//
//   F(w) = (2 pi)^{-1/2} integral f(t) exp(i w t) dt
//
// so densities have F(0) = (2 pi)^{-1/2}.
class Profile {
 public:
  enum class Kind { kGaussian, kBump, kTable };

  // exp(-(t-c)^2 / 2 sigma^2) normalized to unit integral.
  static Profile gaussian(double sigma, double center = 0.0);

  // exp(-1 / (1 - u^2)) with u = (t-c)/width, supported on |u| < 1,
  // normalized to unit integral.
  static Profile bump(double width, double center = 0.0);

  // Samples on the uniform grid t_start + j dt, read by linear
  // interpolation. Must be nonnegative with unit trapezoid integral
  // within 1e-8.
  static Profile table(std::vector<double> samples, double dt,
                       double t_start);

  // Window flavors: same shapes scaled to peak value 1. Table windows
  // must have samples in [0, 1].
  static Profile gaussian_window(double sigma, double center = 0.0);
  static Profile bump_window(double width, double center = 0.0);
  static Profile table_window(std::vector<double> samples, double dt,
                              double t_start);

  Kind kind() const { return kind_; }
  bool is_window() const { return window_; }

  double value(double t) const;

  // F(w). Closed form for Gaussians; adaptive trapezoid otherwise.
  // Table profiles reject |w| beyond their Nyquist limit.
  Complex fourier(double omega) const;

  // t -> (1/lambda) f(t/lambda). Preserves densities; windows lose
  // their unit peak.
  Profile scaled(double lambda) const;

  // Interval outside which the profile is numerically negligible.
  double support_lower() const;
  double support_upper() const;

  // Length scale of the shape: sigma, the bump half-width, or half the
  // sampled span.
  double characteristic_width() const;

 private:
  Profile() = default;

  Kind kind_ = Kind::kGaussian;
  bool window_ = false;
  double amp_ = 1.0;
  double width_ = 1.0;   // sigma / half-width / sample step
  double center_ = 0.0;  // center / center / first sample time
  std::vector<double> samples_;
};

inline Profile scale_reference(const Profile& f_r, double lambda) {
  return f_r.scaled(lambda);
}

// A finite-level system in its energy eigenbasis.
struct SpectralSystem {
  RealVector energies;
  DensityState rho;
  Povm povm;
};

SpectralSystem make_spectral_system(RealVector energies, DensityState rho,
                                    Povm povm);

// Conditional expectation of effect k at reading s, for clock density
// f_c, reference density f_r widened by lambda, and acceptance window h.
// Evaluated in the frequency domain: with gaps d = e_m - e_n,
//
//           sum_{m,n} rho_{mn} A_{nm} I(d_{mn})
//   ratio = ------------------------------------ ,
//                sum_n rho_{nn} I(0)
//
//   I(d) = integral dw exp(-i w s) F_c(w) F_r(lambda (d - w)) H(-w)
//
// Adaptive trapezoid; throws GridTooCoarseError if refinement stalls or
// the ratio keeps a spurious imaginary part, DenominatorVanishesError
// if the normalizing integral is ~0.
double conditional_ratio(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density,
                         const Profile& reference_density, double lambda);

// The same quantity from the time-domain double integral
//
//   integral dtau dt f_c(tau) f_r^lambda(t) h(tau - t - s) g_k(t)
//
// with g_k(t) = tr[rho alpha_{-t}(A(k))], normalized by the g = 1
// integral on the identical grid. Independent of conditional_ratio.
double time_domain_ratio(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density,
                         const Profile& reference_density, double lambda);

// Wide-reference limit of the conditional family: the effect k filtered
// entry-wise by the clock density and window transforms,
//
//   B(n, m) = A(n, m) F_c(e_m - e_n) H(e_n - e_m) / (F_c(0) H(0))
//
// Throws FilterZeroAtOriginError when H(0) ~ 0.
ComplexMatrix effective_operator(const SpectralSystem& sys, std::size_t k,
                                 const Profile& window,
                                 const Profile& clock_density);

// Narrow-window version: B(n, m) = A(n, m) F_c(e_m - e_n) / F_c(0).
ComplexMatrix effective_operator(const SpectralSystem& sys, std::size_t k,
                                 const Profile& clock_density);

// tr[rho exp(i H s) B exp(-i H s)] for the filtered effect B: the value
// conditional_ratio converges to as lambda grows.
double limit_conditional(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density);

}  // namespace chronon
