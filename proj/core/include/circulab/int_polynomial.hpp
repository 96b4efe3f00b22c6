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

#ifndef CIRCULAB_INT_POLYNOMIAL_HPP_
#define CIRCULAB_INT_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace circulab {

// Polynomial with arbitrary-precision integer coefficients, constant term
// first. Stored trimmed: the last coefficient is nonzero unless the
// polynomial is zero, in which case the coefficient vector is empty.
class IntPolynomial {
 public:
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(std::size_t degree, const mpz_class& coefficient = 1);
  // t^n - 1
  static IntPolynomial power_minus_one(std::size_t n);

  bool is_zero() const { return coeffs_.empty(); }
  // kZeroDegree for the zero polynomial.
  std::ptrdiff_t degree() const;
  const mpz_class& leading() const;
  bool is_monic() const;
  mpz_class coefficient(std::size_t i) const;
  std::span<const mpz_class> coefficients() const { return coeffs_; }

  // In-place multiplication / exact division by (t^e - 1), e >= 1. Division
  // throws InternalError on a nonzero remainder.
  void multiply_by_power_minus_one(std::size_t e);
  void divide_by_power_minus_one(std::size_t e);

  mpz_class content() const;  // nonnegative gcd of coefficients
  IntPolynomial primitive_part() const;  // leading coefficient made positive
  mpz_class evaluate(const mpz_class& t) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Division by a monic divisor; exact over the integers.
PolynomialDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

// True iff p divides f. p must be monic and nonconstant.
bool divides(const IntPolynomial& p, const IntPolynomial& f);

// lc(b)^(deg a - deg b + 1) * a mod b, exact over the integers.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive greatest common divisor over Z[t] (primitive PRS), normalized to
// a positive leading coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// m-th cyclotomic polynomial via the Mobius product
// prod_{e | m} (t^e - 1)^{mu(m / e)}.
IntPolynomial cyclotomic(std::uint64_t m);

}  // namespace circulab

#endif  // CIRCULAB_INT_POLYNOMIAL_HPP_
