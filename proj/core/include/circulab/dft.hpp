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

// Circulant eigenvalues through the discrete Fourier transform of the first
// row. The eigenvalue attached to Fourier mode k is
//
//   lambda_k = c * sum_j exp(2 pi i j k / n) X_j,
//
// with c = 1 for the raw matrix C_n and c = n^{-1/2} for n^{-1/2} C_n. Note
// the positive exponent: this is the "inverse" sign convention of most FFT
// libraries.

#ifndef CIRCULAB_DFT_HPP_
#define CIRCULAB_DFT_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace circulab {

using Complex = std::complex<double>;

enum class Normalization {
  kRaw,   // eigenvalues of C_n
  kUnit,  // eigenvalues of n^{-1/2} C_n
};

// First row X_0..X_{n-1} of a circulant matrix. Non-empty, all finite.
class EntryVector {
 public:
  explicit EntryVector(std::vector<Complex> entries);
  static EntryVector from_real(std::span<const double> entries);

  std::size_t size() const { return entries_.size(); }
  const Complex& operator[](std::size_t j) const { return entries_[j]; }
  std::span<const Complex> values() const { return entries_; }

  // Sum of squared moduli.
  double squared_norm() const;

 private:
  std::vector<Complex> entries_;
};

struct Spectrum {
  std::vector<Complex> values;  // indexed by Fourier mode k
  Normalization normalization = Normalization::kUnit;

  std::size_t size() const { return values.size(); }
};

// Precomputed transform of one length. Immutable after construction and safe
// to share between threads. Power-of-two lengths run an iterative radix-2
// FFT; every other length goes through Bluestein's chirp-z reduction to a
// power-of-two convolution.
class FourierPlan {
 public:
  explicit FourierPlan(std::size_t n);

  std::size_t size() const { return n_; }

  // out[k] = sum_j exp(+2 pi i j k / n) in[j]; in and out may alias.
  void forward(std::span<const Complex> in, std::span<Complex> out) const;

  Spectrum eigenvalues(const EntryVector& row, Normalization normalization) const;

 private:
  struct Radix2 {
    std::size_t size = 0;
    std::vector<std::size_t> bit_reverse;
    std::vector<Complex> twiddles;  // exp(+2 pi i j / size), j < size / 2

    explicit Radix2(std::size_t m = 1);
    // Sign +1 uses twiddles, -1 their conjugates.
    void run(std::span<Complex> data, int sign) const;
  };

  std::size_t n_;
  bool power_of_two_;
  Radix2 radix2_;                     // length n_ or the Bluestein padding
  std::vector<Complex> chirp_;        // exp(+pi i j^2 / n), j < n
  std::vector<Complex> chirp_filter_; // transformed conj(chirp) kernel
};

// Fast path: FFT of the first row.
Spectrum eigenvalues(const EntryVector& row, Normalization normalization);

// O(n^2) literal double sum with exact integer phase reduction; test oracle
// for eigenvalues(), intended for n up to a few thousand.
Spectrum eigenvalues_direct(const EntryVector& row, Normalization normalization);

// || C_n v_k - (sqrt(n) lambda_k) v_k ||_2 / ||row||_2 with v_k = (w^{jk})_j,
// using the dense circulant. Requires k < n and n <= 4096.
double verify_eigenpair(const EntryVector& row, std::size_t k);

// exp(2 pi i num / den) with num reduced modulo den first.
Complex root_of_unity(std::size_t num, std::size_t den);

}  // namespace circulab

#endif  // CIRCULAB_DFT_HPP_
