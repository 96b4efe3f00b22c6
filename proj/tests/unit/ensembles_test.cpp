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

#include "circulab/ensembles.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "circulab/dft.hpp"
#include "circulab/errors.hpp"
#include "circulab/spectral_stats.hpp"

namespace circulab {
namespace {

EntryVector draw(EnsembleKind kind, std::size_t n, std::uint64_t seed, std::uint64_t index = 0) {
  RngStream stream(seed, index);
  return sample_row(EnsembleSpec{kind, n, seed}, stream);
}

TEST(EnsembleKind, NamesRoundTrip) {
  for (auto kind : {EnsembleKind::kRademacher, EnsembleKind::kRealGaussian, EnsembleKind::kComplexGaussian,
                    EnsembleKind::kHermitianCirculant}) {
    EXPECT_EQ(parse_ensemble_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(parse_ensemble_kind("complex_gaussian"), EnsembleKind::kComplexGaussian);
  EXPECT_THROW(parse_ensemble_kind("bernoulli"), ConfigError);
}

TEST(EnsembleSpec, Validation) {
  EXPECT_THROW((EnsembleSpec{EnsembleKind::kRademacher, 0, 1}.validate()), InvalidInput);
  EXPECT_THROW((EnsembleSpec{EnsembleKind::kHermitianCirculant, 1, 1}.validate()), InvalidInput);
  EXPECT_NO_THROW((EnsembleSpec{EnsembleKind::kHermitianCirculant, 2, 1}.validate()));
}

TEST(SampleRow, RademacherMeanWithinBand) {
  const std::size_t n = 1000000;
  const EntryVector row = draw(EnsembleKind::kRademacher, n, 2024);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    ASSERT_TRUE(row[j] == Complex(1, 0) || row[j] == Complex(-1, 0));
    sum += row[j].real();
  }
  EXPECT_LT(std::abs(sum / n), 4e-3 * std::sqrt(10.0));
}

TEST(SampleRow, ComplexGaussianUnitSecondMoment) {
  const std::size_t n = 1000000;
  const EntryVector row = draw(EnsembleKind::kComplexGaussian, n, 99);
  EXPECT_GE(row.squared_norm() / n, 0.99);
  EXPECT_LE(row.squared_norm() / n, 1.01);
}

TEST(SampleRow, HermitianMirrorIsExactConjugate) {
  const EntryVector row = draw(EnsembleKind::kHermitianCirculant, 8, 5);
  EXPECT_EQ(row[3], std::conj(row[5]));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::size_t n : {2u, 3u, 8u, 9u, 64u}) {
      const EntryVector r = draw(EnsembleKind::kHermitianCirculant, n, seed);
      EXPECT_EQ(r[0].imag(), 0.0);
      if (n % 2 == 0) {
        EXPECT_EQ(r[n / 2].imag(), 0.0);
      }
      for (std::size_t j = 1; j < n; ++j) ASSERT_EQ(r[n - j], std::conj(r[j])) << "n=" << n << " j=" << j;
    }
  }
}

// E X, E X^2 and E |X|^2 over 10^6 draws, each compared with its 5 sigma band.
TEST(SampleRowProperty, MomentContract) {
  const std::size_t n = 1000000;
  struct Case {
    EnsembleKind kind;
    Complex alpha;
    double sd_x2;    // per-draw standard deviation of X^2 (per component)
    double sd_abs;   // per-draw standard deviation of |X|^2
  };
  for (const Case c : {Case{EnsembleKind::kRademacher, 1.0, 0.0, 0.0},
                       Case{EnsembleKind::kRealGaussian, 1.0, std::sqrt(2.0), std::sqrt(2.0)},
                       Case{EnsembleKind::kComplexGaussian, 0.0, 1.0, 1.0}}) {
    const EntryVector row = draw(c.kind, n, 7);
    Complex m1 = 0, m2 = 0;
    double abs2 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      m1 += row[j];
      m2 += row[j] * row[j];
      abs2 += std::norm(row[j]);
    }
    m1 /= static_cast<double>(n);
    m2 /= static_cast<double>(n);
    abs2 /= static_cast<double>(n);
    const double root_n = std::sqrt(static_cast<double>(n));
    const double tiny = 1e-12;
    EXPECT_LT(std::abs(m1), 5.0 / root_n) << to_string(c.kind);
    EXPECT_LT(std::abs(m2.real() - c.alpha.real()), 5.0 * c.sd_x2 / root_n + tiny) << to_string(c.kind);
    EXPECT_LT(std::abs(m2.imag() - c.alpha.imag()), 5.0 * c.sd_x2 / root_n + tiny) << to_string(c.kind);
    EXPECT_LT(std::abs(abs2 - 1.0), 5.0 * c.sd_abs / root_n + tiny) << to_string(c.kind);
  }
}

TEST(RngStream, SplitStreamsAreDeterministic) {
  auto a = split_streams(42, 3);
  auto b = split_streams(42, 3);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (int t = 0; t < 100; ++t) EXPECT_EQ(a[i](), b[i]());
  }
  EXPECT_THROW(split_streams(1, 0), InvalidInput);
}

TEST(RngStream, SeedSensitivity) {
  auto a = split_streams(42, 2);
  auto b = split_streams(43, 2);
  EXPECT_NE(a[0](), b[0]());
  EXPECT_NE(a[1](), b[1]());
}

TEST(RngStream, NeighbouringStreamsUncorrelated) {
  auto s = split_streams(7, 2);
  const int m = 10000;
  double sxy = 0;
  for (int i = 0; i < m; ++i) sxy += s[0].sign() * s[1].sign();
  // Signs have mean ~0 and variance 1, so this is the sample correlation up to O(1/m).
  EXPECT_LT(std::abs(sxy / m), 0.05);
}

TEST(RngStream, KeyedStreamsDiffer) {
  RngStream a(1, {stream_tag("x"), 0});
  RngStream b(1, {stream_tag("x"), 1});
  RngStream c(1, {stream_tag("y"), 0});
  const auto va = a();
  EXPECT_NE(va, b());
  EXPECT_NE(va, c());
  EXPECT_EQ(stream_tag("x"), stream_tag("x"));
}

TEST(SampleSigns, MatchesRademacherRow) {
  RngStream s1(3, 0), s2(3, 0);
  const auto signs = sample_signs(50, s1);
  const EntryVector row = sample_row(EnsembleSpec{EnsembleKind::kRademacher, 50, 3}, s2);
  for (std::size_t j = 0; j < 50; ++j) EXPECT_EQ(row[j].real(), signs[j]);
}

TEST(HermitianEigenvalues, ScalarRow) {
  std::vector<double> row(6, 0.0);
  row[0] = 2.5;
  for (double v : hermitian_eigenvalues(EntryVector::from_real(row))) EXPECT_NEAR(v, 2.5 / std::sqrt(6.0), 1e-15);
}

TEST(HermitianEigenvalues, TwoByTwo) {
  const double a = 1.5, b = -0.25;
  const auto eig = hermitian_eigenvalues(EntryVector::from_real(std::vector<double>{a, b}));
  ASSERT_EQ(eig.size(), 2u);
  EXPECT_NEAR(eig[0], (a + b) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(eig[1], (a - b) / std::sqrt(2.0), 1e-15);
}

TEST(HermitianEigenvalues, RejectsNonHermitianRow) {
  EXPECT_THROW(hermitian_eigenvalues(EntryVector({Complex(1, 0), Complex(0, 1), Complex(2, 0)})), InvalidInput);
}

TEST(HermitianEigenvalues, PooledLawIsStandardNormal) {
  const std::size_t n = 4096;
  const FourierPlan plan(n);
  std::vector<double> pooled;
  double residue = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    RngStream stream(11, t);
    const auto h = hermitian_spectrum(sample_row(EnsembleSpec{EnsembleKind::kHermitianCirculant, n, 11}, stream), plan);
    pooled.insert(pooled.end(), h.eigenvalues.begin(), h.eigenvalues.end());
    residue = std::max(residue, h.max_imag_residue);
  }
  EXPECT_LT(ks_statistic(pooled, ReferenceCdf::kStdNormal), 0.01);
  EXPECT_LT(residue, 1e-9);
}

}  // namespace
}  // namespace circulab
