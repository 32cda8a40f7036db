// Copyright 2026 The lambdacount Authors
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

#include "lambdacount/bigint.hpp"

#include <cmath>

#include "lambdacount/error.hpp"

namespace lambdacount {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial: negative top " + std::to_string(n));
  BigInt r;
  if (k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return r;
}

std::vector<std::vector<BigInt>> pascal_triangle(std::size_t n_max) {
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = 1;
    rows[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) {
      rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
  return rows;
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text), 10);
}

double log_of(const BigInt& x) {
  if (sgn(x) <= 0) throw DomainError("log_of: argument must be positive");
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

double log_of(const BigRational& x) {
  if (sgn(x) <= 0) throw DomainError("log_of: argument must be positive");
  return log_of(BigInt(x.get_num())) - log_of(BigInt(x.get_den()));
}

double to_double(const BigRational& x) {
  if (sgn(x) == 0) return 0.0;
  // mpq_get_d truncates; go through logs only when the magnitude demands it.
  double direct = x.get_d();
  if (std::isfinite(direct) && direct != 0.0) return direct;
  double mag = std::exp(log_of(BigRational(abs(x))));
  return sgn(x) < 0 ? -mag : mag;
}

BigRational ratio(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("ratio: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt require_integer(const BigRational& q, std::string_view what) {
  if (q.get_den() != 1) {
    throw IntegralityError(std::string(what) + ": expected an integer, got " +
                           q.get_str());
  }
  return q.get_num();
}

BigInt exact_divide(const BigInt& a, const BigInt& b, std::string_view what) {
  if (sgn(b) == 0) throw DomainError(std::string(what) + ": division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw IntegralityError(std::string(what) + ": " + a.get_str() +
                           " is not divisible by " + b.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace lambdacount
