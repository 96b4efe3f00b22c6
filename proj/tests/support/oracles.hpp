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

// Reference implementations used to cross-check the library. They share no
// code with it and favour obviousness over speed.

#ifndef CIRCULAB_TESTS_ORACLES_HPP_
#define CIRCULAB_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;

// sum_j x_j exp(+2 pi i jk / n), scaled by `scale`.
inline std::vector<LComplex> naive_dft(const std::vector<std::complex<double>>& x, long double scale) {
  const std::size_t n = x.size();
  std::vector<LComplex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    LComplex acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % n) /
                                static_cast<long double>(n);
      acc += LComplex(x[j].real(), x[j].imag()) * LComplex(std::cos(angle), std::sin(angle));
    }
    out[k] = acc * scale;
  }
  return out;
}

// Dense polynomials over int64, lowest degree first, trimmed.
using Poly = std::vector<std::int64_t>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of f modulo a monic g.
inline Poly remainder_monic(Poly f, const Poly& g) {
  trim(f);
  if (g.empty() || g.back() != 1) throw std::logic_error("remainder_monic needs a monic divisor");
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::int64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] -= lead * g[i];
    trim(f);
  }
  return f;
}

inline Poly quotient_monic(Poly f, const Poly& g) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  if (f.size() <= dg) return {};
  Poly q(f.size() - dg, 0);
  while (f.size() > dg) {
    const std::int64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    q[shift] = lead;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] -= lead * g[i];
    trim(f);
  }
  if (!f.empty()) throw std::logic_error("inexact division");
  return q;
}

// Phi_m from t^m - 1 = prod_{d | m} Phi_d, dividing out proper divisors.
inline Poly cyclotomic(std::uint64_t m) {
  static std::map<std::uint64_t, Poly> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  Poly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d == 0) p = quotient_monic(p, cyclotomic(d));
  }
  cache.emplace(m, p);
  return p;
}

// Divisors d of n with f(zeta_d) = 0, f = sum signs_j t^j.
inline std::vector<std::uint64_t> vanishing_orders(const std::vector<int>& signs) {
  const std::uint64_t n = signs.size();
  const Poly f(signs.begin(), signs.end());
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && remainder_monic(f, cyclotomic(d)).empty()) out.push_back(d);
  }
  return out;
}

// min_k |sum_j s_j exp(2 pi i jk/n)| in long double.
inline long double min_abs_dft(const std::vector<int>& signs) {
  std::vector<std::complex<double>> x(signs.begin(), signs.end());
  long double best = INFINITY;
  for (const auto& v : naive_dft(x, 1.0L)) best = std::min(best, std::abs(v));
  return best;
}

inline std::vector<int> signs_from_bits(std::uint64_t bits, std::size_t n) {
  std::vector<int> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = ((bits >> j) & 1u) ? 1 : -1;
  return s;
}

}  // namespace oracle

#endif  // CIRCULAB_TESTS_ORACLES_HPP_
