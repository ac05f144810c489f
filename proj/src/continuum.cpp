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

#include "chronon/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace chronon {

namespace {

constexpr double kRoot2Pi = 2.5066282746310002;  // sqrt(2 pi)

// Gaussian support is cut where the tail is ~1e-16 of the peak.
constexpr double kGaussianSupportSigmas = 9.0;

double bump_shape(double u) {
  const double q = 1.0 - u * u;
  if (q <= 0.0) return 0.0;
  return std::exp(-1.0 / q);
}

// integral of bump_shape over [-1, 1], computed once by trapezoid
// doubling. The shape is smooth with vanishing derivatives at the
// endpoints, so the rule converges superalgebraically.
double bump_shape_integral() {
  static const double cached = [] {
    double t = 0.0;  // endpoints vanish
    long n = 1;
    for (int level = 1; level <= 30; ++level) {
      const double step = 2.0 / n;
      double sum = 0.0;
      for (long i = 0; i < n; ++i) {
        sum += bump_shape(-1.0 + (i + 0.5) * step);
      }
      const double refined = 0.5 * t + 0.5 * step * sum;
      if (n >= 64 && std::abs(refined - t) < 1e-15 * refined) {
        return refined;
      }
      t = refined;
      n *= 2;
    }
    return t;
  }();
  return cached;
}

long next_pow2(double x) {
  long n = 1;
  while (static_cast<double>(n) < x && n < (1L << 30)) n *= 2;
  return n;
}

}  // namespace

Profile Profile::gaussian(double sigma, double center) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(center)) {
    throw ConfigError("gaussian profile: sigma must be positive and finite");
  }
  Profile p;
  p.kind_ = Kind::kGaussian;
  p.window_ = false;
  p.width_ = sigma;
  p.center_ = center;
  p.amp_ = 1.0 / (sigma * kRoot2Pi);
  return p;
}

Profile Profile::gaussian_window(double sigma, double center) {
  Profile p = gaussian(sigma, center);
  p.window_ = true;
  p.amp_ = 1.0;
  return p;
}

Profile Profile::bump(double width, double center) {
  if (!(width > 0.0) || !std::isfinite(width) || !std::isfinite(center)) {
    throw ConfigError("bump profile: width must be positive and finite");
  }
  Profile p;
  p.kind_ = Kind::kBump;
  p.window_ = false;
  p.width_ = width;
  p.center_ = center;
  p.amp_ = 1.0 / (width * bump_shape_integral());
  return p;
}

Profile Profile::bump_window(double width, double center) {
  Profile p = bump(width, center);
  p.window_ = true;
  p.amp_ = std::numbers::e;  // shape peaks at exp(-1)
  return p;
}

Profile Profile::table(std::vector<double> samples, double dt,
                       double t_start) {
  if (samples.size() < 2) {
    throw ConfigError("table profile: need at least 2 samples");
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_start)) {
    throw ConfigError("table profile: dt must be positive and finite");
  }
  double integral = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (!std::isfinite(samples[j])) {
      throw ConfigError("table profile: sample is not finite");
    }
    if (samples[j] < -1e-12) {
      throw NotPositiveError("table profile: negative sample " +
                             std::to_string(samples[j]));
    }
    const double w =
        (j == 0 || j + 1 == samples.size()) ? 0.5 : 1.0;
    integral += w * samples[j] * dt;
  }
  if (std::abs(integral - 1.0) > 1e-8) {
    throw NotNormalizedError("table profile: integral deviates from 1 by " +
                             std::to_string(std::abs(integral - 1.0)));
  }
  Profile p;
  p.kind_ = Kind::kTable;
  p.window_ = false;
  p.width_ = dt;
  p.center_ = t_start;
  p.amp_ = 1.0;
  p.samples_ = std::move(samples);
  return p;
}

Profile Profile::table_window(std::vector<double> samples, double dt,
                              double t_start) {
  if (samples.size() < 2) {
    throw ConfigError("table window: need at least 2 samples");
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_start)) {
    throw ConfigError("table window: dt must be positive and finite");
  }
  for (const double v : samples) {
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12) {
      throw EffectOutOfRangeError(
          "table window: samples must lie in [0, 1]");
    }
  }
  Profile p;
  p.kind_ = Kind::kTable;
  p.window_ = true;
  p.width_ = dt;
  p.center_ = t_start;
  p.amp_ = 1.0;
  p.samples_ = std::move(samples);
  return p;
}

double Profile::value(double t) const {
  switch (kind_) {
    case Kind::kGaussian: {
      const double u = (t - center_) / width_;
      return amp_ * std::exp(-0.5 * u * u);
    }
    case Kind::kBump:
      return amp_ * bump_shape((t - center_) / width_);
    case Kind::kTable: {
      const double x = (t - center_) / width_;
      const double last = static_cast<double>(samples_.size() - 1);
      if (x < 0.0 || x > last) return 0.0;
      const auto j = static_cast<std::size_t>(x);
      if (j + 1 >= samples_.size()) return amp_ * samples_.back();
      const double frac = x - static_cast<double>(j);
      return amp_ * ((1.0 - frac) * samples_[j] + frac * samples_[j + 1]);
    }
  }
  return 0.0;
}

Complex Profile::fourier(double omega) const {
  switch (kind_) {
    case Kind::kGaussian: {
      const double modulus =
          amp_ * width_ * std::exp(-0.5 * width_ * width_ * omega * omega);
      return modulus * std::exp(Complex(0.0, omega * center_));
    }
    case Kind::kBump: {
      // Oscillatory trapezoid over the compact support; the integrand
      // is smooth with flat endpoints.
      const double a = center_ - width_;
      const double b = center_ + width_;
      const long min_n = next_pow2(
          std::max(64.0, 16.0 * std::abs(omega) * width_ / std::numbers::pi));
      auto g = [&](double t) -> Complex {
        return value(t) * std::exp(Complex(0.0, omega * t));
      };
      Complex t_sum = 0.5 * (b - a) * (g(a) + g(b));
      long n = 1;
      int good = 0;
      for (int level = 1; level <= 22; ++level) {
        const double step = (b - a) / n;
        Complex sum(0.0, 0.0);
        for (long i = 0; i < n; ++i) {
          sum += g(a + (i + 0.5) * step);
        }
        const Complex refined = 0.5 * t_sum + 0.5 * step * sum;
        const double diff = std::abs(refined - t_sum);
        t_sum = refined;
        n *= 2;
        if (n >= min_n) {
          if (diff <= 1e-12 * std::abs(t_sum) + 1e-15 * amp_ * width_) {
            if (++good >= 2) return t_sum / kRoot2Pi;
          } else {
            good = 0;
          }
        }
      }
      throw GridTooCoarseError("bump transform did not converge");
    }
    case Kind::kTable: {
      if (std::abs(omega) > std::numbers::pi / width_) {
        throw GridTooCoarseError(
            "table profile: frequency above the Nyquist limit");
      }
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < samples_.size(); ++j) {
        const double w =
            (j == 0 || j + 1 == samples_.size()) ? 0.5 : 1.0;
        const double t = center_ + static_cast<double>(j) * width_;
        sum += w * amp_ * samples_[j] * std::exp(Complex(0.0, omega * t));
      }
      return sum * width_ / kRoot2Pi;
    }
  }
  return Complex(0.0, 0.0);
}

Profile Profile::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("scaled profile: lambda must be positive and finite");
  }
  Profile p = *this;
  p.amp_ /= lambda;
  p.width_ *= lambda;
  p.center_ *= lambda;
  return p;
}

double Profile::support_lower() const {
  switch (kind_) {
    case Kind::kGaussian:
      return center_ - kGaussianSupportSigmas * width_;
    case Kind::kBump:
      return center_ - width_;
    case Kind::kTable:
      return center_;
  }
  return 0.0;
}

double Profile::support_upper() const {
  switch (kind_) {
    case Kind::kGaussian:
      return center_ + kGaussianSupportSigmas * width_;
    case Kind::kBump:
      return center_ + width_;
    case Kind::kTable:
      return center_ + static_cast<double>(samples_.size() - 1) * width_;
  }
  return 0.0;
}

double Profile::characteristic_width() const {
  switch (kind_) {
    case Kind::kGaussian:
    case Kind::kBump:
      return width_;
    case Kind::kTable:
      return 0.5 * static_cast<double>(samples_.size() - 1) * width_;
  }
  return 1.0;
}

SpectralSystem make_spectral_system(RealVector energies, DensityState rho,
                                    Povm povm) {
  for (Index i = 0; i < energies.size(); ++i) {
    if (!std::isfinite(energies(i))) {
      throw ConfigError("make_spectral_system: energy is not finite");
    }
  }
  if (rho.dim() != energies.size() || povm.dim() != energies.size()) {
    throw DimensionError(
        "make_spectral_system: state, effects and energies must share one "
        "dimension");
  }
  return SpectralSystem{std::move(energies), std::move(rho), std::move(povm)};
}

namespace {

// Term list for sum_{m,n} rho_{mn} A_{nm} exp(i (e_m - e_n) t).
struct GapTerm {
  Complex coeff;
  double delta;
};

std::vector<GapTerm> gap_terms(const SpectralSystem& sys, std::size_t k) {
  if (k >= sys.povm.size()) {
    throw DimensionError("spectral system: effect index out of range");
  }
  const ComplexMatrix& rho = sys.rho.matrix();
  const ComplexMatrix& a = sys.povm.effect(k);
  std::vector<GapTerm> terms;
  const Index dim = sys.energies.size();
  terms.reserve(static_cast<std::size_t>(dim * dim));
  for (Index m = 0; m < dim; ++m) {
    for (Index n = 0; n < dim; ++n) {
      const Complex coeff = rho(m, n) * a(n, m);
      terms.push_back(GapTerm{coeff, sys.energies(m) - sys.energies(n)});
    }
  }
  return terms;
}

double envelope_at(const Profile& f_c, const Profile& h, double omega) {
  return std::abs(f_c.fourier(omega)) * std::abs(h.fourier(-omega));
}

// Smallest dyadic band [-W, W] outside which |F_c(w) H(-w)| has dropped
// below 1e-12 of its value at the origin.
double find_omega_range(const Profile& f_c, const Profile& h) {
  const double e0 = envelope_at(f_c, h, 0.0);
  if (e0 <= 0.0) {
    throw DenominatorVanishesError(
        "conditional_ratio: clock and window transforms vanish at the "
        "origin");
  }
  double omega = 1.0;
  for (int iter = 0; iter < 24; ++iter) {
    double tail = 0.0;
    for (int j = 0; j <= 8; ++j) {
      const double w = omega * (1.0 + static_cast<double>(j) / 8.0);
      tail = std::max(tail, envelope_at(f_c, h, w));
      tail = std::max(tail, envelope_at(f_c, h, -w));
    }
    if (tail < 1e-12 * e0) return 2.0 * omega;
    omega *= 2.0;
  }
  throw GridTooCoarseError(
      "conditional_ratio: transform envelope does not decay");
}

// integral over [-omega_max, omega_max] of
// exp(-i w s) F_c(w) F_r(lambda (delta - w)) H(-w), by trapezoid
// doubling with two consecutive agreeing refinements.
Complex oscillatory_overlap(const Profile& f_c, const Profile& h,
                            const Profile& f_r, double lambda, double s,
                            double delta, double omega_max, long min_intervals,
                            double abs_floor) {
  const double a = -omega_max;
  const double b = omega_max;
  auto g = [&](double w) -> Complex {
    return std::exp(Complex(0.0, -w * s)) * f_c.fourier(w) *
           f_r.fourier(lambda * (delta - w)) * h.fourier(-w);
  };
  Complex t_sum = 0.5 * (b - a) * (g(a) + g(b));
  long n = 1;
  int good = 0;
  for (int level = 1; level <= 22; ++level) {
    const double step = (b - a) / n;
    Complex sum(0.0, 0.0);
    for (long i = 0; i < n; ++i) {
      sum += g(a + (i + 0.5) * step);
    }
    const Complex refined = 0.5 * t_sum + 0.5 * step * sum;
    const double diff = std::abs(refined - t_sum);
    t_sum = refined;
    n *= 2;
    if (n >= min_intervals) {
      if (diff <= 1e-10 * std::abs(t_sum) + abs_floor) {
        if (++good >= 2) return t_sum;
      } else {
        good = 0;
      }
    }
  }
  throw GridTooCoarseError("conditional_ratio: quadrature did not converge");
}

}  // namespace

double conditional_ratio(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density,
                         const Profile& reference_density, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("conditional_ratio: lambda must be positive");
  }
  const std::vector<GapTerm> terms = gap_terms(sys, k);
  const double omega_max = find_omega_range(clock_density, window);
  // The widened reference transform varies on the scale
  // 1/(lambda * width); the phase exp(-i w s) on 1/s. Resolve both
  // before trusting the refinement test.
  const long min_intervals = next_pow2(std::max(
      {512.0,
       8.0 * omega_max * lambda * reference_density.characteristic_width(),
       3.0 * omega_max * std::abs(s)}));
  if (min_intervals >= (1L << 22)) {
    throw GridTooCoarseError(
        "conditional_ratio: required resolution exceeds the permitted grid");
  }

  const Complex i0 =
      oscillatory_overlap(clock_density, window, reference_density, lambda, s,
                          0.0, omega_max, min_intervals, 0.0);
  const ComplexMatrix& rho = sys.rho.matrix();
  Complex den(0.0, 0.0);
  for (Index n = 0; n < sys.energies.size(); ++n) {
    den += rho(n, n) * i0;
  }
  if (std::abs(den) < 1e-12) {
    throw DenominatorVanishesError(
        "conditional_ratio: normalizing integral is ~0");
  }

  const double term_floor = 1e-12 * std::abs(den);
  std::map<double, Complex> cache;
  cache.emplace(0.0, i0);
  Complex num(0.0, 0.0);
  for (const GapTerm& term : terms) {
    if (term.coeff == Complex(0.0, 0.0)) continue;
    auto it = cache.find(term.delta);
    if (it == cache.end()) {
      it = cache
               .emplace(term.delta,
                        oscillatory_overlap(clock_density, window,
                                            reference_density, lambda, s,
                                            term.delta, omega_max,
                                            min_intervals, term_floor))
               .first;
    }
    num += term.coeff * it->second;
  }

  const Complex ratio = num / den;
  if (std::abs(ratio.imag()) > 1e-8) {
    throw GridTooCoarseError(
        "conditional_ratio: imaginary residue " +
        std::to_string(ratio.imag()));
  }
  return ratio.real();
}

double time_domain_ratio(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density,
                         const Profile& reference_density, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("time_domain_ratio: lambda must be positive");
  }
  const std::vector<GapTerm> terms = gap_terms(sys, k);
  const Profile f_r = reference_density.scaled(lambda);

  const double tau_a = clock_density.support_lower();
  const double tau_b = clock_density.support_upper();
  // h(tau - t - s) constrains t to [tau - s - sup(h), tau - s - inf(h)].
  const double t_a = std::max(f_r.support_lower(),
                              tau_a - s - window.support_upper());
  const double t_b = std::min(f_r.support_upper(),
                              tau_b - s - window.support_lower());
  if (!(t_a < t_b)) {
    throw DenominatorVanishesError(
        "time_domain_ratio: window and profile supports do not overlap");
  }

  Complex prev_num(0.0, 0.0);
  double prev_den = 0.0;
  bool have_prev = false;
  for (long n = 64; n <= 4096; n *= 2) {
    const double step_tau = (tau_b - tau_a) / n;
    const double step_t = (t_b - t_a) / n;
    std::vector<double> fc_w(static_cast<std::size_t>(n) + 1);
    std::vector<double> fr_w(static_cast<std::size_t>(n) + 1);
    std::vector<Complex> g_t(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      const double edge = (i == 0 || i == n) ? 0.5 : 1.0;
      fc_w[static_cast<std::size_t>(i)] =
          edge * clock_density.value(tau_a + i * step_tau);
      const double t = t_a + i * step_t;
      fr_w[static_cast<std::size_t>(i)] = edge * f_r.value(t);
      Complex g(0.0, 0.0);
      for (const GapTerm& term : terms) {
        if (term.coeff == Complex(0.0, 0.0)) continue;
        g += term.coeff * std::exp(Complex(0.0, term.delta * t));
      }
      g_t[static_cast<std::size_t>(i)] = g;
    }
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (long i = 0; i <= n; ++i) {
      const double fc = fc_w[static_cast<std::size_t>(i)];
      if (fc == 0.0) continue;
      const double tau = tau_a + i * step_tau;
      for (long j = 0; j <= n; ++j) {
        const double fr = fr_w[static_cast<std::size_t>(j)];
        if (fr == 0.0) continue;
        const double hv = window.value(tau - (t_a + j * step_t) - s);
        if (hv == 0.0) continue;
        const double weight = fc * fr * hv;
        den += weight;
        num += weight * g_t[static_cast<std::size_t>(j)];
      }
    }
    num *= step_tau * step_t;
    den *= step_tau * step_t;
    if (have_prev) {
      const bool num_ok =
          std::abs(num - prev_num) <= 1e-9 * std::abs(num) + 1e-12 * den;
      const bool den_ok = std::abs(den - prev_den) <= 1e-9 * std::abs(den);
      if (num_ok && den_ok) {
        if (std::abs(den) < 1e-12) {
          throw DenominatorVanishesError(
              "time_domain_ratio: normalizing integral is ~0");
        }
        const Complex ratio = num / den;
        if (std::abs(ratio.imag()) > 1e-8) {
          throw GridTooCoarseError("time_domain_ratio: imaginary residue " +
                                   std::to_string(ratio.imag()));
        }
        return ratio.real();
      }
    }
    prev_num = num;
    prev_den = den;
    have_prev = true;
  }
  throw GridTooCoarseError("time_domain_ratio: quadrature did not converge");
}

ComplexMatrix effective_operator(const SpectralSystem& sys, std::size_t k,
                                 const Profile& window,
                                 const Profile& clock_density) {
  if (k >= sys.povm.size()) {
    throw DimensionError("effective_operator: effect index out of range");
  }
  const Complex h0 = window.fourier(0.0);
  const Complex f0 = clock_density.fourier(0.0);
  if (std::abs(h0) < 1e-30) {
    throw FilterZeroAtOriginError(
        "effective_operator: window transform vanishes at zero frequency");
  }
  if (std::abs(f0) < 1e-30) {
    throw FilterZeroAtOriginError(
        "effective_operator: clock transform vanishes at zero frequency");
  }
  const ComplexMatrix& a = sys.povm.effect(k);
  const Index dim = sys.energies.size();
  ComplexMatrix out(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    for (Index m = 0; m < dim; ++m) {
      const double delta = sys.energies(m) - sys.energies(n);
      out(n, m) = a(n, m) * clock_density.fourier(delta) *
                  window.fourier(-delta) / (f0 * h0);
    }
  }
  return out;
}

ComplexMatrix effective_operator(const SpectralSystem& sys, std::size_t k,
                                 const Profile& clock_density) {
  if (k >= sys.povm.size()) {
    throw DimensionError("effective_operator: effect index out of range");
  }
  const Complex f0 = clock_density.fourier(0.0);
  if (std::abs(f0) < 1e-30) {
    throw FilterZeroAtOriginError(
        "effective_operator: clock transform vanishes at zero frequency");
  }
  const ComplexMatrix& a = sys.povm.effect(k);
  const Index dim = sys.energies.size();
  ComplexMatrix out(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    for (Index m = 0; m < dim; ++m) {
      const double delta = sys.energies(m) - sys.energies(n);
      out(n, m) = a(n, m) * clock_density.fourier(delta) / f0;
    }
  }
  return out;
}

double limit_conditional(const SpectralSystem& sys, std::size_t k,
                         const Profile& window, double s,
                         const Profile& clock_density) {
  const ComplexMatrix filtered =
      effective_operator(sys, k, window, clock_density);
  const ComplexMatrix& rho = sys.rho.matrix();
  const Index dim = sys.energies.size();
  Complex value(0.0, 0.0);
  for (Index m = 0; m < dim; ++m) {
    for (Index n = 0; n < dim; ++n) {
      const double delta = sys.energies(m) - sys.energies(n);
      value += rho(m, n) * filtered(n, m) * std::exp(Complex(0.0, -delta * s));
    }
  }
  return value.real();
}

}  // namespace chronon
