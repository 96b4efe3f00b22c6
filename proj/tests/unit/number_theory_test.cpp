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

#include <gtest/gtest.h>

#include <numeric>

#include "circulab/errors.hpp"

namespace circulab {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t totient_by_count(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= m; ++a) c += std::gcd(a, m) == 1;
  return c;
}

TEST(Mobius, SmallValues) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(2), -1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_THROW(mobius(0), InvalidInput);
}

TEST(Mobius, SumOverDivisorsIsIndicatorOfOne) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(Totient, SmallValues) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(2), 1u);
  EXPECT_EQ(totient(9), 6u);
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (is_prime(p)) {
      EXPECT_EQ(totient(p), p - 1);
    }
  }
  for (std::uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(totient(m), totient_by_count(m)) << m;
}

TEST(TotientMobiusProperty, MultiplicativeOnCoprimePairs) {
  for (std::uint64_t p = 1; p <= 100; ++p) {
    for (std::uint64_t q = 1; q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ASSERT_EQ(totient(p * q), totient(p) * totient(q)) << p << "," << q;
      ASSERT_EQ(mobius(p * q), mobius(p) * mobius(q)) << p << "," << q;
    }
  }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(13), (std::vector<std::uint64_t>{1, 13}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(divisors(0), InvalidInput);
}

TEST(Divisors, TotientSumsToN) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t s = 0;
    for (auto d : divisors(n)) s += totient(d);
    EXPECT_EQ(s, n);
  }
}

TEST(Factorize, Reconstructs) {
  for (std::uint64_t m : {1ull, 2ull, 360ull, 1001ull, 65536ull, 999983ull, 600851475143ull}) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(m)) {
      EXPECT_TRUE(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, m);
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(24, 12), 2704156);
  EXPECT_EQ(binomial(5, 7), 0);
}

TEST(Fractions, RoundTripAndFormat) {
  EXPECT_EQ(to_fraction_string(Rational(62, 512)), "31/256");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  for (const char* s : {"1/4", "17/64", "-5/3", "0/1"}) EXPECT_EQ(to_fraction_string(parse_fraction(s)), s);
  EXPECT_EQ(parse_fraction("2/4"), Rational(1, 2));
  EXPECT_THROW(parse_fraction("1/0"), InvalidInput);
  EXPECT_THROW(parse_fraction("x"), InvalidInput);
}

}  // namespace
}  // namespace circulab
