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

// Exact singularity of circulant sign matrices.
//
// With f(t) = sum_j X_j t^j, the eigenvalues of C_n are f(w^k) for the n-th
// roots of unity w^k. The root w^k has order d = n / gcd(k, n), its minimal
// polynomial is the cyclotomic Phi_d, so C_n is singular exactly when Phi_d
// divides f for some divisor d of n. Everything here is integer arithmetic.

#ifndef CIRCULAB_SINGULARITY_HPP_
#define CIRCULAB_SINGULARITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circulab/ensembles.hpp"
#include "circulab/int_polynomial.hpp"
#include "circulab/number_theory.hpp"

namespace circulab {

// Length-n vector over {-1, +1}, bit-packed: bit j set <=> X_j = +1.
class SignVector {
 public:
  SignVector(std::size_t n, std::vector<std::uint64_t> words);

  // "+-+-" literal; '+' is +1, '-' is -1.
  static SignVector parse(std::string_view literal);
  static SignVector from_signs(std::span<const int> signs);
  // Low n bits of `bits`; n <= 64.
  static SignVector from_bits(std::uint64_t bits, std::size_t n);
  static SignVector random(std::size_t n, RngStream& stream);

  std::size_t size() const { return n_; }
  int operator[](std::size_t j) const { return ((words_[j / 64] >> (j % 64)) & 1u) != 0 ? 1 : -1; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<int> to_signs() const;
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

IntPolynomial poly_from_signs(const SignVector& signs);

struct SingularityReport {
  std::size_t n = 0;
  bool singular = false;
  std::vector<std::uint64_t> witnesses;  // divisors d of n with Phi_d | f, ascending
};

// Cyclotomic route: tests Phi_d | f for every d | n by exact division.
SingularityReport is_singular(const SignVector& signs);

// Independent route: gcd(f, t^n - 1) is nonconstant.
bool is_singular_by_gcd(const SignVector& signs);

// Fast exact tester for one n. For each divisor d it precomputes
// t^i mod Phi_d for phi(d) <= i < d, so that f mod Phi_d is a fixed integer
// linear map of the folded coefficients sum_{j = i mod d} X_j. Tables are
// 64-bit when the worst-case magnitude provably fits, otherwise that divisor
// falls back to exact polynomial division.
class SingularityTester {
 public:
  // Tests every divisor of n, or only `only_divisors` when given (each must
  // divide n).
  explicit SingularityTester(std::size_t n, std::optional<std::vector<std::uint64_t>> only_divisors = {});

  std::size_t n() const { return n_; }
  std::span<const std::uint64_t> divisors() const { return divisor_values_; }

  std::vector<std::uint64_t> witnesses(const SignVector& signs) const;
  bool singular(const SignVector& signs) const;

  struct Counts {
    std::uint64_t vectors = 0;
    std::uint64_t singular = 0;                // vectors with any witness
    std::vector<std::uint64_t> per_divisor;    // aligned with divisors()
  };

  // Enumerates the sign vectors with index in [begin, end) of the binary
  // reflected Gray order over n bits (n <= 63), updating residues
  // incrementally.
  Counts count_gray_range(std::uint64_t begin, std::uint64_t end) const;

 private:
  struct Table {
    std::uint64_t d = 0;
    std::size_t phi = 0;
    bool fast = true;
    // rows[i - phi] = sparse t^i mod Phi_d as (index, coefficient)
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows;
    IntPolynomial cyclotomic;
  };

  bool divisible(const Table& table, const SignVector& signs) const;

  std::size_t n_;
  std::vector<std::uint64_t> divisor_values_;
  std::vector<Table> tables_;
};

constexpr std::size_t kDefaultEnumerationCap = 26;

struct EnumerationResult {
  std::size_t n = 0;
  std::uint64_t vectors = 0;   // 2^n
  std::uint64_t singular = 0;
  std::vector<std::uint64_t> divisors;
  std::vector<std::uint64_t> per_divisor;  // #{f : Phi_d | f}

  Rational probability() const;
};

// Exhaustive count over all 2^n sign vectors. Refuses n > cap with
// InvalidInput. Negation symmetry halves the work.
EnumerationResult enumerate_singular(std::size_t n, std::size_t cap = kDefaultEnumerationCap,
                                     unsigned threads = 0,
                                     std::optional<std::vector<std::uint64_t>> only_divisors = {});

Rational exact_singularity_probability(std::size_t n, std::size_t cap = kDefaultEnumerationCap,
                                       unsigned threads = 0);

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;  // sqrt(p (1 - p) / trials)
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

// Trial t samples from stream (tag("singularity-mc"), t) of the seed.
McEstimate mc_singularity_probability(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads = 0);

// P[f(1) = 0] = C(n, n/2) / 2^n for even n, 0 for odd n.
Rational f1_zero_probability(std::size_t n);

struct BoundsReport {
  std::size_t n = 0;
  Rational f1_zero_prob;
  std::optional<Rational> even_lower;              // even n
  std::optional<double> odd_bound_divisor_form;    // odd n: d(n) / n, constant omitted
  std::optional<Rational> odd_bound_totient_form;  // odd n: sum_{1 < m | n} 2^{-phi(m)}
  std::uint64_t d_n = 0;
  std::vector<std::uint64_t> divisor_list;
};

BoundsReport bounds_report(std::size_t n);

// Order of w_n^k as a root of unity: n / gcd(k, n).
std::uint64_t root_order(std::size_t n, std::size_t k);

// P[f(w_n^k) = 0] = P[Phi_{n / gcd(k, n)} | f].
Rational per_root_zero_probability_exact(std::size_t n, std::size_t k, std::size_t cap = kDefaultEnumerationCap,
                                         unsigned threads = 0);
McEstimate per_root_zero_probability_mc(std::size_t n, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace circulab

#endif  // CIRCULAB_SINGULARITY_HPP_
