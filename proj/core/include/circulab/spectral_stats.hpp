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
#ifndef CIRCULAB_SPECTRAL_STATS_HPP_
#define CIRCULAB_SPECTRAL_STATS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "circulab/dft.hpp"
#include "circulab/ensembles.hpp"

namespace circulab {

// Finite family of closed disks used as convex test sets for the empirical
// spectral measure.
struct DiskFamily {
  std::vector<Complex> centers;
  std::vector<double> radii;

  // Centers on the grid {-2,-1,0,1,2}^2, radii {0.5, 1, 2}.
  static DiskFamily standard();

  std::size_t size() const { return centers.size() * radii.size(); }
  void validate() const;
};

// Mass of the disk |z - center| <= radius under the standard complex
// Gaussian measure (density exp(-|z|^2) / pi). Closed form at the origin,
// adaptive radial quadrature of the Rician density elsewhere; absolute error
// below 1e-10.
double gaussian_disk_mass(Complex center, double radius);

// Eigenvalue counts per disk, flattened center-major. Integer counts make
// pooling across trials exact and order independent.
std::vector<std::uint64_t> disk_counts(const Spectrum& spectrum, const DiskFamily& family);

// max over the family of |pooled fraction inside A - gamma_C(A)|, from
// counts accumulated over `points` eigenvalues.
double discrepancy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t points,
                               const DiskFamily& family);

double esd_discrepancy(std::span<const Spectrum> spectra, const DiskFamily& family);

// m(p, q) = mean over pooled eigenvalues of lambda^p conj(lambda)^q, for
// 0 <= p, q <= pmax <= 4.
class MomentTable {
 public:
  explicit MomentTable(int pmax);

  int pmax() const { return pmax_; }
  Complex operator()(int p, int q) const { return values_[index(p, q)]; }
  Complex& at(int p, int q) { return values_[index(p, q)]; }

 private:
  std::size_t index(int p, int q) const { return static_cast<std::size_t>(p * (pmax_ + 1) + q); }

  int pmax_;
  std::vector<Complex> values_;
};

// Unnormalized sums of lambda^p conj(lambda)^q over one spectrum.
MomentTable moment_sums(const Spectrum& spectrum, int pmax);
MomentTable mixed_moments(std::span<const Spectrum> spectra, int pmax);

// Sample covariance of (Re lambda_k, Im lambda_k), row-major 2x2.
using Covariance2 = std::array<std::array<double, 2>, 2>;

// Monte Carlo covariance of the k-th unit-normalized eigenvalue over
// `trials` rows of a real ensemble (rademacher or real-gaussian). Trial t
// draws from stream (tag("covariance"), t) of the seed.
Covariance2 covariance_check(EnsembleKind kind, std::size_t n, std::size_t k, std::size_t trials,
                             std::uint64_t seed, unsigned threads = 0);

struct ExtremeRecord {
  double alpha_1 = 0.0;  // largest |lambda_k|^2
  double alpha_n = 0.0;  // smallest |lambda_k|^2
  std::optional<double> beta_1;  // largest Hermitian eigenvalue
  std::size_t n = 0;
};

ExtremeRecord extremes(const Spectrum& spectrum, std::optional<std::span<const double>> hermitian_eigs = {});

enum class ExtremeKind { kAlpha, kBeta };

// x -> scale * (x - center).
struct GumbelNormalization {
  double center = 0.0;
  double scale = 1.0;

  double apply(double value) const { return scale * (value - center); }
};

// alpha: center log n, scale 1.
// beta:  b = sqrt(2 log n), center b - (log log n + log 4 pi) / (2 b), scale b.
// Requires n >= 3.
GumbelNormalization gumbel_normalization(ExtremeKind which, std::size_t n);
double gumbel_normalize(double value, ExtremeKind which, std::size_t n);

enum class ReferenceCdf { kExp1, kGumbel, kStdNormal, kUniform01 };

std::string_view to_string(ReferenceCdf cdf);
double reference_cdf(ReferenceCdf cdf, double x);

// Kolmogorov-Smirnov distance sup_x |F_m(x) - F(x)|.
double ks_statistic(std::span<const double> samples, ReferenceCdf cdf);

}  // namespace circulab

#endif  // CIRCULAB_SPECTRAL_STATS_HPP_
