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
#ifndef CIRCULAB_ENSEMBLES_HPP_
#define CIRCULAB_ENSEMBLES_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "circulab/dft.hpp"

namespace circulab {

enum class EnsembleKind {
  kRademacher,          // uniform on {-1, +1}
  kRealGaussian,        // N(0, 1)
  kComplexGaussian,     // independent N(0, 1/2) real and imaginary parts
  kHermitianCirculant,  // conjugate-symmetric Gaussian row, real spectrum
};

// Canonical CLI spelling: rademacher, real-gaussian, complex-gaussian,
// hermitian. Parsing also accepts underscores and "hermitian-circulant".
std::string_view to_string(EnsembleKind kind);
EnsembleKind parse_ensemble_kind(std::string_view text);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kRademacher;
  std::size_t n = 1;
  std::uint64_t seed = 0;

  // Throws InvalidInput unless n >= 1 (n >= 2 for the Hermitian ensemble).
  void validate() const;
};

// Deterministic pseudorandom stream keyed by (master seed, stream key).
// Identical keys give identical draws regardless of thread schedule. A
// stream is single-owner: move it between threads, never share it.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_index);
  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> key);

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  double normal() { return normal_(engine_); }
  int sign() { return (engine_() >> 63) != 0 ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// Streams 0..count-1 of the master seed.
std::vector<RngStream> split_streams(std::uint64_t seed, std::size_t count);

// Stable 64-bit tag for composing stream keys from names (FNV-1a).
std::uint64_t stream_tag(std::string_view name);

EntryVector sample_row(const EnsembleSpec& spec, RngStream& stream);

// Rademacher row as raw signs, for the exact singularity machinery.
std::vector<int> sample_signs(std::size_t n, RngStream& stream);

struct HermitianSpectrum {
  std::vector<double> eigenvalues;
  double max_imag_residue = 0.0;  // largest discarded |Im lambda_k|
};

// Real eigenvalues of n^{-1/2} C_n for a conjugate-symmetric row
// (X_{n-j} == conj(X_j) to within 1e-12). The imaginary residue of each
// eigenvalue is checked against 1e-9 before being dropped.
HermitianSpectrum hermitian_spectrum(const EntryVector& row, const FourierPlan& plan);
std::vector<double> hermitian_eigenvalues(const EntryVector& row);

}  // namespace circulab

#endif  // CIRCULAB_ENSEMBLES_HPP_
