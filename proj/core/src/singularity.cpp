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

#include "circulab/singularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "circulab/errors.hpp"
#include "circulab/parallel.hpp"

namespace circulab {

namespace {

// Worst-case residue magnitude allowed in the 64-bit tables.
constexpr std::int64_t kResidueLimit = std::int64_t{1} << 62;
// Total sparse table entries above which a divisor uses exact division.
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 25;

std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

Rational power_of_two_inverse(std::uint64_t e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
  return Rational(mpz_class(1), den);
}

Rational ratio_over_power_of_two(std::uint64_t count, std::size_t n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  Rational r(mpz_class(static_cast<unsigned long>(count)), den);
  r.canonicalize();
  return r;
}

McEstimate summarize(std::span<const std::uint8_t> hits) {
  McEstimate out;
  out.trials = hits.size();
  out.successes = static_cast<std::uint64_t>(std::count(hits.begin(), hits.end(), std::uint8_t{1}));
  out.estimate = static_cast<double>(out.successes) / static_cast<double>(out.trials);
  out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(out.trials));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(std::size_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  if (n_ == 0) throw InvalidInput("sign vector must have length >= 1");
  if (words_.size() != (n_ + 63) / 64) throw InvalidInput("sign vector word count does not match length");
  if (n_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

SignVector SignVector::parse(std::string_view literal) {
  std::vector<std::uint64_t> words((literal.size() + 63) / 64, 0);
  for (std::size_t j = 0; j < literal.size(); ++j) {
    if (literal[j] == '+') {
      words[j / 64] |= std::uint64_t{1} << (j % 64);
    } else if (literal[j] != '-') {
      throw InvalidInput("sign literal may contain only '+' and '-', got '" + std::string(literal) + "'");
    }
  }
  return SignVector(literal.size(), std::move(words));
}

SignVector SignVector::from_signs(std::span<const int> signs) {
  std::vector<std::uint64_t> words((signs.size() + 63) / 64, 0);
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == 1) {
      words[j / 64] |= std::uint64_t{1} << (j % 64);
    } else if (signs[j] != -1) {
      throw InvalidInput("sign vector entries must be -1 or +1");
    }
  }
  return SignVector(signs.size(), std::move(words));
}

SignVector SignVector::from_bits(std::uint64_t bits, std::size_t n) {
  if (n > 64) throw InvalidInput("from_bits supports n <= 64");
  return SignVector(n, {bits});
}

SignVector SignVector::random(std::size_t n, RngStream& stream) {
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = stream();
  return SignVector(n, std::move(words));
}

std::vector<int> SignVector::to_signs() const {
  std::vector<int> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = (*this)[j];
  return out;
}

std::string SignVector::to_string() const {
  std::string out(n_, '-');
  for (std::size_t j = 0; j < n_; ++j) {
    if ((*this)[j] == 1) out[j] = '+';
  }
  return out;
}

IntPolynomial poly_from_signs(const SignVector& signs) {
  std::vector<mpz_class> c(signs.size());
  for (std::size_t j = 0; j < signs.size(); ++j) c[j] = signs[j];
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Reference routes

SingularityReport is_singular(const SignVector& signs) {
  const IntPolynomial f = poly_from_signs(signs);
  SingularityReport report;
  report.n = signs.size();
  for (auto d : divisors(signs.size())) {
    if (divides(cyclotomic(d), f)) report.witnesses.push_back(d);
  }
  report.singular = !report.witnesses.empty();
  return report;
}

bool is_singular_by_gcd(const SignVector& signs) {
  const IntPolynomial g = gcd(poly_from_signs(signs), IntPolynomial::power_minus_one(signs.size()));
  return g.degree() >= 1;
}

// ---------------------------------------------------------------------------
// SingularityTester

SingularityTester::SingularityTester(std::size_t n, std::optional<std::vector<std::uint64_t>> only_divisors) : n_(n) {
  if (n == 0) throw InvalidInput("singularity tester needs n >= 1");
  if (only_divisors) {
    divisor_values_ = *only_divisors;
    std::sort(divisor_values_.begin(), divisor_values_.end());
    divisor_values_.erase(std::unique(divisor_values_.begin(), divisor_values_.end()), divisor_values_.end());
    for (auto d : divisor_values_) {
      if (d == 0 || n % d != 0) throw InvalidInput(std::to_string(d) + " does not divide " + std::to_string(n));
    }
  } else {
    divisor_values_ = circulab::divisors(n);
  }

  std::size_t entries = 0;
  for (auto d : divisor_values_) {
    Table table;
    table.d = d;
    table.phi = static_cast<std::size_t>(totient(d));
    table.cyclotomic = cyclotomic(d);

    // r = t^phi mod Phi_d, then repeatedly r <- t r mod Phi_d.
    const auto phi_coeffs = table.cyclotomic.coefficients();
    std::vector<mpz_class> r(table.phi);
    for (std::size_t m = 0; m < table.phi; ++m) r[m] = -phi_coeffs[m];

    const std::uint64_t fold = (n + d - 1) / d;
    mpz_class bound = 1;
    for (std::size_t i = table.phi; i < d && table.fast; ++i) {
      if (i > table.phi) {
        const mpz_class top = r[table.phi - 1];
        for (std::size_t m = table.phi - 1; m > 0; --m) r[m] = r[m - 1];
        r[0] = 0;
        if (sgn(top) != 0) {
          for (std::size_t m = 0; m < table.phi; ++m) r[m] -= top * phi_coeffs[m];
        }
      }
      std::vector<std::pair<std::uint32_t, std::int64_t>> row;
      mpz_class row_max = 0;
      for (std::size_t m = 0; m < table.phi; ++m) {
        if (sgn(r[m]) == 0) continue;
        if (!r[m].fits_slong_p()) {
          table.fast = false;
          break;
        }
        row.emplace_back(static_cast<std::uint32_t>(m), r[m].get_si());
        if (abs(r[m]) > row_max) row_max = abs(r[m]);
      }
      bound += row_max;
      entries += row.size();
      table.rows.push_back(std::move(row));
    }
    if (table.fast && (bound * fold >= kResidueLimit || entries > kMaxTableEntries)) table.fast = false;
    if (!table.fast) table.rows.clear();
    tables_.push_back(std::move(table));
  }
}

bool SingularityTester::divisible(const Table& table, const SignVector& signs) const {
  if (!table.fast) return divides(table.cyclotomic, poly_from_signs(signs));
  const std::size_t d = static_cast<std::size_t>(table.d);
  std::vector<std::int64_t> folded(d, 0);
  for (std::size_t j = 0; j < n_; ++j) folded[j % d] += signs[j];
  std::vector<std::int64_t> residue(folded.begin(), folded.begin() + static_cast<std::ptrdiff_t>(table.phi));
  for (std::size_t i = table.phi; i < d; ++i) {
    const std::int64_t g = folded[i];
    if (g == 0) continue;
    for (const auto& [m, c] : table.rows[i - table.phi]) residue[m] += g * c;
  }
  return std::all_of(residue.begin(), residue.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::uint64_t> SingularityTester::witnesses(const SignVector& signs) const {
  if (signs.size() != n_) throw InvalidInput("sign vector length does not match tester");
  std::vector<std::uint64_t> out;
  for (const auto& table : tables_) {
    if (divisible(table, signs)) out.push_back(table.d);
  }
  return out;
}

bool SingularityTester::singular(const SignVector& signs) const {
  if (signs.size() != n_) throw InvalidInput("sign vector length does not match tester");
  return std::any_of(tables_.begin(), tables_.end(), [&](const Table& t) { return divisible(t, signs); });
}

SingularityTester::Counts SingularityTester::count_gray_range(std::uint64_t begin, std::uint64_t end) const {
  if (n_ > 63) throw InvalidInput("Gray enumeration supports n <= 63");
  Counts counts;
  counts.per_divisor.assign(tables_.size(), 0);
  if (begin >= end) return counts;

  const bool all_fast = std::all_of(tables_.begin(), tables_.end(), [](const Table& t) { return t.fast; });
  if (!all_fast) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const SignVector sv = SignVector::from_bits(gray(idx), n_);
      bool any = false;
      for (std::size_t t = 0; t < tables_.size(); ++t) {
        if (divisible(tables_[t], sv)) {
          ++counts.per_divisor[t];
          any = true;
        }
      }
      counts.singular += any ? 1 : 0;
      ++counts.vectors;
    }
    return counts;
  }

  struct State {
    std::vector<std::int64_t> residue;
    std::size_t nonzero = 0;
  };
  std::vector<State> states(tables_.size());
  std::vector<std::vector<std::uint32_t>> position(tables_.size(), std::vector<std::uint32_t>(n_));

  const SignVector first = SignVector::from_bits(gray(begin), n_);
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    const Table& table = tables_[t];
    const std::size_t d = static_cast<std::size_t>(table.d);
    for (std::size_t j = 0; j < n_; ++j) position[t][j] = static_cast<std::uint32_t>(j % d);
    std::vector<std::int64_t> folded(d, 0);
    for (std::size_t j = 0; j < n_; ++j) folded[j % d] += first[j];
    auto& r = states[t].residue;
    r.assign(folded.begin(), folded.begin() + static_cast<std::ptrdiff_t>(table.phi));
    for (std::size_t i = table.phi; i < d; ++i) {
      for (const auto& [m, c] : table.rows[i - table.phi]) r[m] += folded[i] * c;
    }
    states[t].nonzero = static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](auto v) { return v != 0; }));
  }

  auto tally = [&] {
    bool any = false;
    for (std::size_t t = 0; t < tables_.size(); ++t) {
      if (states[t].nonzero == 0) {
        ++counts.per_divisor[t];
        any = true;
      }
    }
    counts.singular += any ? 1 : 0;
    ++counts.vectors;
  };
  auto bump = [](State& s, std::uint32_t m, std::int64_t delta) {
    std::int64_t& v = s.residue[m];
    const bool was_zero = v == 0;
    v += delta;
    if (was_zero) {
      ++s.nonzero;
    } else if (v == 0) {
      --s.nonzero;
    }
  };

  tally();
  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    // Moving from gray(idx - 1) to gray(idx) flips bit ctz(idx).
    const unsigned j = static_cast<unsigned>(std::countr_zero(idx));
    const std::int64_t delta = ((gray(idx) >> j) & 1u) != 0 ? 2 : -2;
    for (std::size_t t = 0; t < tables_.size(); ++t) {
      const Table& table = tables_[t];
      const std::uint32_t i = position[t][j];
      if (i < table.phi) {
        bump(states[t], i, delta);
      } else {
        for (const auto& [m, c] : table.rows[i - table.phi]) bump(states[t], m, delta * c);
      }
    }
    tally();
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Probabilities

Rational EnumerationResult::probability() const { return ratio_over_power_of_two(singular, n); }

EnumerationResult enumerate_singular(std::size_t n, std::size_t cap, unsigned threads,
                                     std::optional<std::vector<std::uint64_t>> only_divisors) {
  if (n == 0) throw InvalidInput("n must be >= 1");
  if (n > cap) {
    throw InvalidInput("exhaustive enumeration refused: n = " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(cap));
  }
  if (n > 63) throw InvalidInput("exhaustive enumeration supports n <= 63");

  const SingularityTester tester(n, std::move(only_divisors));
  // f and -f have the same divisors, so enumerate the half with X_{n-1} = -1
  // (Gray indices below 2^{n-1}) and double.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  const std::uint64_t block = std::min<std::uint64_t>(half, std::uint64_t{1} << 16);
  const std::uint64_t blocks = (half + block - 1) / block;

  std::vector<SingularityTester::Counts> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::uint64_t lo = b * block;
    partial[b] = tester.count_gray_range(lo, std::min(half, lo + block));
  });

  EnumerationResult result;
  result.n = n;
  result.divisors.assign(tester.divisors().begin(), tester.divisors().end());
  result.per_divisor.assign(result.divisors.size(), 0);
  std::uint64_t seen = 0;
  for (const auto& c : partial) {
    seen += c.vectors;
    result.singular += c.singular;
    for (std::size_t t = 0; t < c.per_divisor.size(); ++t) result.per_divisor[t] += c.per_divisor[t];
  }
  if (seen != half) throw InternalError("enumeration visited the wrong number of sign vectors");
  result.vectors = 2 * half;
  result.singular *= 2;
  for (auto& c : result.per_divisor) c *= 2;
  return result;
}

Rational exact_singularity_probability(std::size_t n, std::size_t cap, unsigned threads) {
  return enumerate_singular(n, cap, threads).probability();
}

McEstimate mc_singularity_probability(std::size_t n, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (n == 0) throw InvalidInput("n must be >= 1");
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  const SingularityTester tester(n);
  const std::uint64_t tag = stream_tag("singularity-mc");
  std::vector<std::uint8_t> hits(trials, 0);
  parallel_for(trials, threads, [&](std::size_t t) {
    RngStream stream(seed, {tag, static_cast<std::uint64_t>(t)});
    hits[t] = tester.singular(SignVector::random(n, stream)) ? 1 : 0;
  });
  return summarize(hits);
}

Rational f1_zero_probability(std::size_t n) {
  if (n == 0) throw InvalidInput("n must be >= 1");
  if (n % 2 == 1) return Rational(0);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
  Rational r(binomial(n, n / 2), den);
  r.canonicalize();
  return r;
}

BoundsReport bounds_report(std::size_t n) {
  if (n < 2) throw InvalidInput("bounds_report needs n >= 2");
  BoundsReport report;
  report.n = n;
  report.f1_zero_prob = f1_zero_probability(n);
  report.divisor_list = divisors(n);
  report.d_n = report.divisor_list.size();
  if (n % 2 == 0) {
    report.even_lower = report.f1_zero_prob;
  } else {
    Rational sum(0);
    for (auto m : report.divisor_list) {
      if (m > 1) sum += power_of_two_inverse(totient(m));
    }
    sum.canonicalize();
    report.odd_bound_totient_form = sum;
    report.odd_bound_divisor_form = static_cast<double>(report.d_n) / static_cast<double>(n);
  }
  return report;
}

std::uint64_t root_order(std::size_t n, std::size_t k) {
  if (n == 0) throw InvalidInput("n must be >= 1");
  if (k >= n) throw InvalidInput("root index k = " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  return n / std::gcd(k, n);
}

Rational per_root_zero_probability_exact(std::size_t n, std::size_t k, std::size_t cap, unsigned threads) {
  const std::uint64_t d = root_order(n, k);
  const EnumerationResult r = enumerate_singular(n, cap, threads, std::vector<std::uint64_t>{d});
  return ratio_over_power_of_two(r.per_divisor.front(), n);
}

McEstimate per_root_zero_probability_mc(std::size_t n, std::size_t k, std::uint64_t trials, std::uint64_t seed,
                                        unsigned threads) {
  const std::uint64_t d = root_order(n, k);
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  const SingularityTester tester(n, std::vector<std::uint64_t>{d});
  const std::uint64_t tag = stream_tag("per-root");
  std::vector<std::uint8_t> hits(trials, 0);
  parallel_for(trials, threads, [&](std::size_t t) {
    RngStream stream(seed, {tag, static_cast<std::uint64_t>(t)});
    hits[t] = tester.singular(SignVector::random(n, stream)) ? 1 : 0;
  });
  return summarize(hits);
}

}  // namespace circulab
