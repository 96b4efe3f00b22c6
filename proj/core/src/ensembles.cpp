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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "circulab/errors.hpp"

namespace circulab {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kImagResidueTolerance = 1e-9;

std::seed_seq make_seed_seq(std::uint64_t seed, std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * key.size());
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (auto k : key) push(k);
  return std::seed_seq(words.begin(), words.end());
}

std::mt19937_64 make_engine(std::uint64_t seed, std::initializer_list<std::uint64_t> key) {
  auto seq = make_seed_seq(seed, key);
  return std::mt19937_64(seq);
}

}  // namespace

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kRademacher:
      return "rademacher";
    case EnsembleKind::kRealGaussian:
      return "real-gaussian";
    case EnsembleKind::kComplexGaussian:
      return "complex-gaussian";
    case EnsembleKind::kHermitianCirculant:
      return "hermitian";
  }
  return "unknown";
}

EnsembleKind parse_ensemble_kind(std::string_view text) {
  std::string key(text);
  std::replace(key.begin(), key.end(), '_', '-');
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "rademacher") return EnsembleKind::kRademacher;
  if (key == "real-gaussian") return EnsembleKind::kRealGaussian;
  if (key == "complex-gaussian") return EnsembleKind::kComplexGaussian;
  if (key == "hermitian" || key == "hermitian-circulant") return EnsembleKind::kHermitianCirculant;
  throw ConfigError("unknown ensemble '" + std::string(text) +
                    "' (expected rademacher, real-gaussian, complex-gaussian or hermitian)");
}

void EnsembleSpec::validate() const {
  if (n == 0) throw InvalidInput("ensemble dimension n must be >= 1");
  if (kind == EnsembleKind::kHermitianCirculant && n < 2) {
    throw InvalidInput("hermitian circulant ensemble requires n >= 2");
  }
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : engine_(make_engine(seed, {stream_index})) {}

RngStream::RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> key)
    : engine_(make_engine(seed, key)) {}

std::vector<RngStream> split_streams(std::uint64_t seed, std::size_t count) {
  if (count == 0) throw InvalidInput("split_streams needs count >= 1");
  std::vector<RngStream> streams;
  streams.reserve(count);
  for (std::size_t i = 0; i < count; ++i) streams.emplace_back(seed, static_cast<std::uint64_t>(i));
  return streams;
}

std::uint64_t stream_tag(std::string_view name) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> sample_signs(std::size_t n, RngStream& stream) {
  std::vector<int> signs(n);
  for (auto& s : signs) s = stream.sign();
  return signs;
}

EntryVector sample_row(const EnsembleSpec& spec, RngStream& stream) {
  spec.validate();
  const std::size_t n = spec.n;
  std::vector<Complex> row(n);
  const double half_sd = std::sqrt(0.5);

  switch (spec.kind) {
    case EnsembleKind::kRademacher:
      for (auto& x : row) x = static_cast<double>(stream.sign());
      break;
    case EnsembleKind::kRealGaussian:
      for (auto& x : row) x = stream.normal();
      break;
    case EnsembleKind::kComplexGaussian:
      for (auto& x : row) {
        const double re = stream.normal();
        const double im = stream.normal();
        x = Complex(half_sd * re, half_sd * im);
      }
      break;
    case EnsembleKind::kHermitianCirculant: {
      row[0] = stream.normal();
      for (std::size_t j = 1; 2 * j < n; ++j) {
        const double re = stream.normal();
        const double im = stream.normal();
        row[j] = Complex(half_sd * re, half_sd * im);
        row[n - j] = std::conj(row[j]);
      }
      if (n % 2 == 0) row[n / 2] = stream.normal();
      break;
    }
  }
  return EntryVector(std::move(row));
}

HermitianSpectrum hermitian_spectrum(const EntryVector& row, const FourierPlan& plan) {
  const std::size_t n = row.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex mirror = row[(n - j) % n];
    if (std::abs(mirror - std::conj(row[j])) > kSymmetryTolerance) {
      throw InvalidInput("row is not conjugate-symmetric at index " + std::to_string(j));
    }
  }

  const Spectrum spectrum = plan.eigenvalues(row, Normalization::kUnit);
  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double residue = std::abs(spectrum.values[k].imag());
    out.max_imag_residue = std::max(out.max_imag_residue, residue);
    out.eigenvalues[k] = spectrum.values[k].real();
  }
  if (out.max_imag_residue >= kImagResidueTolerance) {
    throw InternalError("hermitian eigenvalue imaginary residue " + std::to_string(out.max_imag_residue) +
                        " exceeds tolerance");
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const EntryVector& row) {
  return hermitian_spectrum(row, FourierPlan(row.size())).eigenvalues;
}

}  // namespace circulab
