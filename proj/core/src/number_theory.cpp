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

#include "circulab/number_theory.hpp"

#include <algorithm>
#include <cmath>

#include "circulab/errors.hpp"

namespace circulab {

namespace {

void require_positive(std::uint64_t m, const char* what) {
  if (m == 0) throw InvalidInput(std::string(what) + " is defined for positive integers only");
}

}  // namespace

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  require_positive(m, "factorize");
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1u);
  return factors;
}

int mobius(std::uint64_t m) {
  require_positive(m, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(m)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t totient(std::uint64_t m) {
  require_positive(m, "totient");
  std::uint64_t result = m;
  for (const auto& [p, e] : factorize(m)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "divisors");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t k = 1; k <= n / k; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  // Divisors pair up as (k, n/k) with k <= sqrt(n).
  if (static_cast<double>(small.size()) >= 2.0 * std::sqrt(static_cast<double>(n))) {
    throw InternalError("divisor count of " + std::to_string(n) + " violates d(n) < 2 sqrt(n)");
  }
  return small;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_fraction_string(const Rational& value) {
  Rational v(value);
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw InvalidInput("'" + text + "' is not an exact rational of the form p/q");
  }
  out.canonicalize();
  return out;
}

}  // namespace circulab
