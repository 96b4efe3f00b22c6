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
#include "circulab/dft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "circulab/errors.hpp"

namespace circulab {

namespace {

void require_nonempty(std::size_t n) {
  if (n == 0) throw InvalidInput("circulant row must have at least one entry");
}

double scale_for(Normalization normalization, std::size_t n) {
  return normalization == Normalization::kUnit ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
}

}  // namespace

Complex root_of_unity(std::size_t num, std::size_t den) {
  const std::size_t r = num % den;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

EntryVector::EntryVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  require_nonempty(entries_.size());
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (!std::isfinite(entries_[j].real()) || !std::isfinite(entries_[j].imag())) {
      throw InvalidInput("circulant row entry " + std::to_string(j) + " is not finite");
    }
  }
}

EntryVector EntryVector::from_real(std::span<const double> entries) {
  std::vector<Complex> values(entries.begin(), entries.end());
  return EntryVector(std::move(values));
}

double EntryVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& x : entries_) sum += std::norm(x);
  return sum;
}

FourierPlan::Radix2::Radix2(std::size_t m) : size(m), bit_reverse(m), twiddles(m / 2) {
  const int bits = std::countr_zero(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse[i] = r;
  }
  for (std::size_t j = 0; j < m / 2; ++j) twiddles[j] = root_of_unity(j, m);
}

void FourierPlan::Radix2::run(std::span<Complex> data, int sign) const {
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t r = bit_reverse[i];
    if (i < r) std::swap(data[i], data[r]);
  }
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = size / len;
    for (std::size_t start = 0; start < size; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex w = sign > 0 ? twiddles[j * stride] : std::conj(twiddles[j * stride]);
        const Complex u = data[start + j];
        const Complex v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
}

FourierPlan::FourierPlan(std::size_t n) : n_(n), power_of_two_(std::has_single_bit(n)) {
  require_nonempty(n);
  if (power_of_two_) {
    radix2_ = Radix2(n);
    return;
  }

  const std::size_t padded = std::bit_ceil(2 * n - 1);
  radix2_ = Radix2(padded);

  // j^2 mod 2n keeps the chirp phase argument small for large n.
  chirp_.resize(n);
  const std::size_t two_n = 2 * n;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = (j * j) % two_n;  // exact while n < 2^32
    chirp_[j] = root_of_unity(r, two_n);
  }

  chirp_filter_.assign(padded, Complex{});
  chirp_filter_[0] = std::conj(chirp_[0]);
  for (std::size_t m = 1; m < n; ++m) {
    chirp_filter_[m] = std::conj(chirp_[m]);
    chirp_filter_[padded - m] = std::conj(chirp_[m]);
  }
  radix2_.run(chirp_filter_, -1);
  const double inv = 1.0 / static_cast<double>(padded);
  for (auto& c : chirp_filter_) c *= inv;
}

void FourierPlan::forward(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != n_ || out.size() != n_) {
    throw InvalidInput("transform length " + std::to_string(in.size()) + " does not match plan length " +
                       std::to_string(n_));
  }
  if (power_of_two_) {
    if (out.data() != in.data()) std::copy(in.begin(), in.end(), out.begin());
    radix2_.run(out, +1);
    return;
  }

  std::vector<Complex> work(radix2_.size, Complex{});
  for (std::size_t j = 0; j < n_; ++j) work[j] = in[j] * chirp_[j];
  radix2_.run(work, -1);
  for (std::size_t i = 0; i < work.size(); ++i) work[i] *= chirp_filter_[i];
  radix2_.run(work, +1);
  for (std::size_t k = 0; k < n_; ++k) out[k] = work[k] * chirp_[k];
}

Spectrum FourierPlan::eigenvalues(const EntryVector& row, Normalization normalization) const {
  Spectrum spectrum{std::vector<Complex>(row.size()), normalization};
  forward(row.values(), spectrum.values);
  const double c = scale_for(normalization, n_);
  if (c != 1.0) {
    for (auto& v : spectrum.values) v *= c;
  }
  return spectrum;
}

Spectrum eigenvalues(const EntryVector& row, Normalization normalization) {
  return FourierPlan(row.size()).eigenvalues(row, normalization);
}

Spectrum eigenvalues_direct(const EntryVector& row, Normalization normalization) {
  const std::size_t n = row.size();
  std::vector<Complex> roots(n);
  for (std::size_t r = 0; r < n; ++r) roots[r] = root_of_unity(r, n);

  Spectrum spectrum{std::vector<Complex>(n), normalization};
  const double c = scale_for(normalization, n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex sum{};
    for (std::size_t j = 0; j < n; ++j) {
      sum += roots[(j * k) % n] * row[j];
    }
    spectrum.values[k] = c * sum;
  }
  return spectrum;
}

double verify_eigenpair(const EntryVector& row, std::size_t k) {
  const std::size_t n = row.size();
  if (k >= n) {
    throw InvalidInput("mode index " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  }
  if (n > 4096) throw InvalidInput("verify_eigenpair materializes the matrix; n must be <= 4096");

  const Complex lambda = eigenvalues(row, Normalization::kRaw).values[k];
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = root_of_unity(j * k, n);

  // Row r of C_n is the first row cyclically shifted right by r.
  double residual_sq = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    Complex cv{};
    for (std::size_t c = 0; c < n; ++c) cv += row[(c + n - r) % n] * v[c];
    residual_sq += std::norm(cv - lambda * v[r]);
  }
  const double row_norm = std::sqrt(row.squared_norm());
  return row_norm == 0.0 ? std::sqrt(residual_sq) : std::sqrt(residual_sq) / row_norm;
}

}  // namespace circulab
