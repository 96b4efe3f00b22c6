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

#include "circulab/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "circulab/errors.hpp"
#include "circulab/number_theory.hpp"

namespace circulab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& coefficient) {
  std::vector<mpz_class> c(degree + 1);
  c[degree] = coefficient;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::power_minus_one(std::size_t n) {
  if (n == 0) return IntPolynomial();
  std::vector<mpz_class> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::ptrdiff_t IntPolynomial::degree() const {
  return is_zero() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
}

const mpz_class& IntPolynomial::leading() const {
  if (is_zero()) throw InvalidInput("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPolynomial::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

mpz_class IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

void IntPolynomial::multiply_by_power_minus_one(std::size_t e) {
  if (e == 0) throw InvalidInput("t^0 - 1 is the zero polynomial");
  if (is_zero()) return;
  const std::size_t old_size = coeffs_.size();
  coeffs_.resize(old_size + e);
  // new[i] = old[i - e] - old[i], walking downwards so old values survive.
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    mpz_class v = i >= e ? coeffs_[i - e] : mpz_class(0);
    if (i < old_size) v -= coeffs_[i];
    coeffs_[i] = std::move(v);
  }
  trim();
}

void IntPolynomial::divide_by_power_minus_one(std::size_t e) {
  if (e == 0) throw InvalidInput("t^0 - 1 is the zero polynomial");
  if (is_zero()) return;
  if (coeffs_.size() <= e) throw InternalError("exact division by t^e - 1 left a remainder");
  // Long division by the monic t^e - 1: each leading term c t^i contributes
  // c t^{i-e} to the quotient and adds c to coefficient i - e.
  std::vector<mpz_class> quotient(coeffs_.size() - e);
  for (std::size_t i = coeffs_.size(); i-- > e;) {
    if (sgn(coeffs_[i]) == 0) continue;
    quotient[i - e] = coeffs_[i];
    coeffs_[i - e] += coeffs_[i];
    coeffs_[i] = 0;
  }
  for (std::size_t i = 0; i < e; ++i) {
    if (sgn(coeffs_[i]) != 0) throw InternalError("exact division by t^e - 1 left a remainder");
  }
  coeffs_ = std::move(quotient);
  trim();
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

PolynomialDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) throw InvalidInput("divisor must be monic");
  const auto dd = static_cast<std::size_t>(divisor.degree());
  if (dividend.is_zero() || static_cast<std::size_t>(dividend.degree()) < dd) {
    return {IntPolynomial(), dividend};
  }
  std::vector<mpz_class> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<mpz_class> quot(rem.size() - dd);
  const auto p = divisor.coefficients();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    const mpz_class c = rem[i];
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * p[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& p, const IntPolynomial& f) {
  if (!p.is_monic() || p.degree() < 1) throw InvalidInput("divisibility test needs a monic nonconstant divisor");
  return divide_monic(f, p).remainder.is_zero();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-remainder by the zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return a;
  const auto db = static_cast<std::size_t>(b.degree());
  const mpz_class& lb = b.leading();
  const auto bc = b.coefficients();
  std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
  // deg a - deg b + 1 steps; each scales by lc(b), then cancels the top coefficient.
  for (std::size_t i = r.size(); i-- > db;) {
    const mpz_class c = r[i];
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * bc[j];
  }
  r.resize(db);
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const mpz_class content_gcd = [&] {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return g;
  }();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  IntPolynomial g = x.primitive_part();
  if (content_gcd != 1) {
    std::vector<mpz_class> c(g.coefficients().begin(), g.coefficients().end());
    for (auto& v : c) v *= content_gcd;
    g = IntPolynomial(std::move(c));
  }
  return g;
}

IntPolynomial cyclotomic(std::uint64_t m) {
  if (m == 0) throw InvalidInput("cyclotomic polynomial index must be >= 1");
  const auto divs = divisors(m);
  IntPolynomial result{1};
  // Numerator factors first keeps every later division exact.
  for (auto e : divs) {
    if (mobius(m / e) == 1) result.multiply_by_power_minus_one(e);
  }
  for (auto e : divs) {
    if (mobius(m / e) == -1) result.divide_by_power_minus_one(e);
  }
  if (static_cast<std::uint64_t>(result.degree()) != totient(m) || !result.is_monic()) {
    throw InternalError("cyclotomic(" + std::to_string(m) + ") has the wrong shape");
  }
  return result;
}

}  // namespace circulab
