// Copyright 2026 The circulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circulab/spectral_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "circulab/errors.hpp"
#include "circulab/parallel.hpp"

namespace circulab {

namespace {

// exp(-x) I_0(x) for x >= 0 without overflow.
double scaled_bessel_i0(double x) {
  if (x < 500.0) return std::cyl_bessel_i(0.0, x) * std::exp(-x);
  // Hankel asymptotic expansion; the first omitted term is below 1e-12 here.
  const double t = 1.0 / (8.0 * x);
  const double series = 1.0 + t * (1.0 + t * (4.5 + t * (37.5 + t * 459.375)));
  return series / std::sqrt(2.0 * std::numbers::pi * x);
}

template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 48);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

DiskFamily DiskFamily::standard() {
  DiskFamily family;
  for (int re = -2; re <= 2; ++re) {
    for (int im = -2; im <= 2; ++im) family.centers.emplace_back(re, im);
  }
  family.radii = {0.5, 1.0, 2.0};
  return family;
}

void DiskFamily::validate() const {
  if (centers.empty() || radii.empty()) throw InvalidInput("disk family must be nonempty");
  for (double r : radii) {
    if (!(r > 0.0)) throw InvalidInput("disk radii must be positive");
  }
}

double gaussian_disk_mass(Complex center, double radius) {
  if (!(radius > 0.0)) throw InvalidInput("disk radius must be positive");
  const double a = std::abs(center);
  if (a == 0.0) return -std::expm1(-radius * radius);

  // Radial density of |z| for z ~ gamma_C shifted by `center` (Rician):
  // 2 rho exp(-(rho^2 + a^2)) I_0(2 a rho) = 2 rho exp(-(rho - a)^2) [e^{-x} I_0(x)]_{x = 2 a rho}.
  auto density = [a](double rho) {
    const double d = rho - a;
    return 2.0 * rho * std::exp(-d * d) * scaled_bessel_i0(2.0 * a * rho);
  };
  // Beyond a + 12 the density is below e^{-144}.
  const double upper = std::min(radius, a + 12.0);
  const double lower = std::max(0.0, a - 12.0);
  if (upper <= lower) return 0.0;
  const double mass = adaptive_simpson(density, lower, upper, 1e-13);
  return std::clamp(mass, 0.0, 1.0);
}

std::vector<std::uint64_t> disk_counts(const Spectrum& spectrum, const DiskFamily& family) {
  std::vector<std::uint64_t> counts(family.size(), 0);
  std::vector<double> r2(family.radii.size());
  for (std::size_t i = 0; i < r2.size(); ++i) r2[i] = family.radii[i] * family.radii[i];

  for (const auto& z : spectrum.values) {
    for (std::size_t c = 0; c < family.centers.size(); ++c) {
      const double d2 = std::norm(z - family.centers[c]);
      for (std::size_t r = 0; r < r2.size(); ++r) {
        if (d2 <= r2[r]) ++counts[c * r2.size() + r];
      }
    }
  }
  return counts;
}

double discrepancy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t points,
                               const DiskFamily& family) {
  family.validate();
  if (points == 0) throw InvalidInput("discrepancy needs at least one eigenvalue");
  if (counts.size() != family.size()) throw InvalidInput("count vector does not match disk family");

  double worst = 0.0;
  for (std::size_t c = 0; c < family.centers.size(); ++c) {
    for (std::size_t r = 0; r < family.radii.size(); ++r) {
      const double empirical =
          static_cast<double>(counts[c * family.radii.size() + r]) / static_cast<double>(points);
      worst = std::max(worst, std::abs(empirical - gaussian_disk_mass(family.centers[c], family.radii[r])));
    }
  }
  return worst;
}

double esd_discrepancy(std::span<const Spectrum> spectra, const DiskFamily& family) {
  if (spectra.empty()) throw InvalidInput("esd_discrepancy needs at least one spectrum");
  family.validate();
  const std::size_t n = spectra.front().size();
  std::vector<std::uint64_t> total(family.size(), 0);
  std::uint64_t points = 0;
  for (const auto& s : spectra) {
    if (s.size() != n) throw InvalidInput("all spectra must share the same dimension");
    const auto counts = disk_counts(s, family);
    for (std::size_t i = 0; i < counts.size(); ++i) total[i] += counts[i];
    points += s.size();
  }
  return discrepancy_from_counts(total, points, family);
}

MomentTable::MomentTable(int pmax) : pmax_(pmax) {
  if (pmax < 0 || pmax > 4) throw InvalidInput("moment order pmax must lie in [0, 4]");
  values_.assign(static_cast<std::size_t>((pmax + 1) * (pmax + 1)), Complex{});
}

MomentTable moment_sums(const Spectrum& spectrum, int pmax) {
  MomentTable sums(pmax);
  std::vector<Complex> powers(static_cast<std::size_t>(pmax + 1));
  for (const auto& z : spectrum.values) {
    powers[0] = 1.0;
    for (int p = 1; p <= pmax; ++p) powers[p] = powers[p - 1] * z;
    for (int p = 0; p <= pmax; ++p) {
      for (int q = 0; q <= pmax; ++q) sums.at(p, q) += powers[p] * std::conj(powers[q]);
    }
  }
  return sums;
}

MomentTable mixed_moments(std::span<const Spectrum> spectra, int pmax) {
  if (spectra.empty()) throw InvalidInput("mixed_moments needs at least one spectrum");
  MomentTable total(pmax);
  std::size_t points = 0;
  for (const auto& s : spectra) {
    const MomentTable sums = moment_sums(s, pmax);
    for (int p = 0; p <= pmax; ++p) {
      for (int q = 0; q <= pmax; ++q) total.at(p, q) += sums(p, q);
    }
    points += s.size();
  }
  if (points == 0) throw InvalidInput("mixed_moments needs at least one eigenvalue");
  for (int p = 0; p <= pmax; ++p) {
    for (int q = 0; q <= pmax; ++q) total.at(p, q) /= static_cast<double>(points);
  }
  return total;
}

Covariance2 covariance_check(EnsembleKind kind, std::size_t n, std::size_t k, std::size_t trials,
                             std::uint64_t seed, unsigned threads) {
  if (kind != EnsembleKind::kRademacher && kind != EnsembleKind::kRealGaussian) {
    throw InvalidInput("covariance_check supports the rademacher and real-gaussian ensembles only");
  }
  if (n == 0) throw InvalidInput("dimension n must be >= 1");
  if (k >= n) throw InvalidInput("mode index k = " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  if (trials < 2) throw InvalidInput("covariance_check needs at least two trials");

  std::vector<Complex> roots(n);
  for (std::size_t j = 0; j < n; ++j) roots[j] = root_of_unity(j * k, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const EnsembleSpec spec{kind, n, seed};
  const std::uint64_t tag = stream_tag("covariance");

  std::vector<Complex> samples(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    RngStream stream(seed, {tag, static_cast<std::uint64_t>(t)});
    const EntryVector row = sample_row(spec, stream);
    Complex sum{};
    for (std::size_t j = 0; j < n; ++j) sum += roots[j] * row[j];
    samples[t] = scale * sum;
  });

  double mean_re = 0.0;
  double mean_im = 0.0;
  for (const auto& z : samples) {
    mean_re += z.real();
    mean_im += z.imag();
  }
  mean_re /= static_cast<double>(trials);
  mean_im /= static_cast<double>(trials);

  Covariance2 cov{};
  for (const auto& z : samples) {
    const double dr = z.real() - mean_re;
    const double di = z.imag() - mean_im;
    cov[0][0] += dr * dr;
    cov[0][1] += dr * di;
    cov[1][1] += di * di;
  }
  const double denom = static_cast<double>(trials - 1);
  cov[0][0] /= denom;
  cov[0][1] /= denom;
  cov[1][1] /= denom;
  cov[1][0] = cov[0][1];
  return cov;
}

ExtremeRecord extremes(const Spectrum& spectrum, std::optional<std::span<const double>> hermitian_eigs) {
  if (spectrum.values.empty()) throw InvalidInput("extremes needs a nonempty spectrum");
  if (spectrum.normalization != Normalization::kUnit) {
    throw InvalidInput("extremes expects eigenvalues of n^{-1/2} C_n (unit normalization)");
  }
  ExtremeRecord record;
  record.n = spectrum.size();
  record.alpha_1 = 0.0;
  record.alpha_n = std::norm(spectrum.values.front());
  for (const auto& z : spectrum.values) {
    const double m = std::norm(z);
    record.alpha_1 = std::max(record.alpha_1, m);
    record.alpha_n = std::min(record.alpha_n, m);
  }
  if (hermitian_eigs && !hermitian_eigs->empty()) {
    record.beta_1 = *std::max_element(hermitian_eigs->begin(), hermitian_eigs->end());
  }
  return record;
}

GumbelNormalization gumbel_normalization(ExtremeKind which, std::size_t n) {
  if (n < 3) throw InvalidInput("Gumbel normalization needs n >= 3 so that log log n > 0");
  const double log_n = std::log(static_cast<double>(n));
  if (which == ExtremeKind::kAlpha) return {log_n, 1.0};
  const double b = std::sqrt(2.0 * log_n);
  const double shift = (std::log(log_n) + std::log(4.0 * std::numbers::pi)) / (2.0 * b);
  return {b - shift, b};
}

double gumbel_normalize(double value, ExtremeKind which, std::size_t n) {
  return gumbel_normalization(which, n).apply(value);
}

std::string_view to_string(ReferenceCdf cdf) {
  switch (cdf) {
    case ReferenceCdf::kExp1:
      return "exp1";
    case ReferenceCdf::kGumbel:
      return "gumbel";
    case ReferenceCdf::kStdNormal:
      return "std_normal";
    case ReferenceCdf::kUniform01:
      return "uniform01";
  }
  return "unknown";
}

double reference_cdf(ReferenceCdf cdf, double x) {
  switch (cdf) {
    case ReferenceCdf::kExp1:
      return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case ReferenceCdf::kGumbel:
      return std::exp(-std::exp(-x));
    case ReferenceCdf::kStdNormal:
      return std_normal_cdf(x);
    case ReferenceCdf::kUniform01:
      return std::clamp(x, 0.0, 1.0);
  }
  return 0.0;
}

double ks_statistic(std::span<const double> samples, ReferenceCdf cdf) {
  if (samples.empty()) throw InvalidInput("ks_statistic needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  for (double x : sorted) {
    if (std::isnan(x)) throw InvalidInput("ks_statistic: NaN sample");
  }
  std::sort(sorted.begin(), sorted.end());

  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = reference_cdf(cdf, sorted[i]);
    d = std::max(d, static_cast<double>(i + 1) / m - f);
    d = std::max(d, f - static_cast<double>(i) / m);
  }
  return d;
}

}  // namespace circulab
