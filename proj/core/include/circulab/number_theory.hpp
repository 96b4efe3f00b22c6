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

#ifndef CIRCULAB_NUMBER_THEORY_HPP_
#define CIRCULAB_NUMBER_THEORY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace circulab {

using Rational = mpq_class;

// (prime, exponent) pairs in increasing prime order; empty for m = 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

int mobius(std::uint64_t m);
std::uint64_t totient(std::uint64_t m);

// All positive divisors in increasing order. Checks d(n) < 2 sqrt(n).
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

// "p/q" with q >= 1 (integers keep the "/1"), in lowest terms.
std::string to_fraction_string(const Rational& value);
Rational parse_fraction(const std::string& text);

}  // namespace circulab

#endif  // CIRCULAB_NUMBER_THEORY_HPP_
