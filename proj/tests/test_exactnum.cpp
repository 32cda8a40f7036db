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

#include <random>

#include "doctest.h"
#include "lambdacount/bigint.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"
#include "lambdacount/series.hpp"
#include "support.hpp"

using namespace lambdacount;
using lambdacount::testing::random_series;

namespace {

Series<BigInt> from_list(std::initializer_list<long> xs, std::size_t order) {
  Series<BigInt> s(order);
  std::size_t i = 0;
  for (long x : xs) s[i++] = x;
  return s;
}

}  // namespace

TEST_CASE("[bigint] binomial, factorial, decimal round trip") {
  CHECK(binomial(18, 9) == 48620);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 2), DomainError);
  CHECK(factorial(20) == from_decimal("2432902008176640000"));
  const BigInt big = power(BigInt(3), 200) - 1;
  CHECK(from_decimal(to_decimal(big)) == big);
  CHECK(from_decimal("-42") == -42);
  CHECK_THROWS_AS(from_decimal("12a"), DomainError);
  CHECK_THROWS_AS(from_decimal(""), DomainError);
  CHECK(log_of(power(BigInt(10), 400)) == doctest::Approx(400 * std::log(10.0)));
}

TEST_CASE("[bigint] ratio is canonical and require_integer is strict") {
  const BigRational q = ratio(BigInt(16), BigInt(2));
  CHECK(q.get_den() == 1);
  CHECK(require_integer(q, "test") == 8);
  CHECK_THROWS_AS(require_integer(ratio(BigInt(3), BigInt(2)), "test"), IntegralityError);
  CHECK_THROWS_AS(ratio(BigInt(1), BigInt(0)), DomainError);
  CHECK(exact_divide(BigInt(48620), BigInt(10), "c") == 4862);
  CHECK_THROWS_AS(exact_divide(BigInt(7), BigInt(2), "c"), IntegralityError);
}

TEST_CASE("[series] multiplication examples") {
  const auto one_plus_z = from_list({1, 1}, 5);
  const auto sq = one_plus_z * one_plus_z;
  CHECK(sq[0] == 1);
  CHECK(sq[1] == 2);
  CHECK(sq[2] == 1);
  CHECK(sq[3] == 0);
  // Truncation is the smaller order.
  CHECK((from_list({1, 1}, 3) * from_list({1, 1}, 7)).order() == 3);
  // 1/(1-z) times (1-z) = 1.
  Series<BigInt> geom(10);
  for (std::size_t i = 0; i <= 10; ++i) geom[i] = 1;
  CHECK(geom * from_list({1, -1}, 10) == Series<BigInt>::monomial(0, BigInt(1), 10));
  CHECK_THROWS_AS(geom[11], DomainError);
}

TEST_CASE("[series] associativity and commutativity up to N=60") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_series(rng, 60, -1000, 1000);
    const auto b = random_series(rng, 60, -1000, 1000);
    const auto c = random_series(rng, 60, -1000, 1000);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("[series] compose with z/(1-z)") {
  const auto z = Series<BigInt>::monomial(1, BigInt(1), 8);
  const auto bz = series_compose_geom(z, 8);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(bz[n] == 1);
  CHECK(bz[0] == 0);

  const auto z2 = Series<BigInt>::monomial(2, BigInt(1), 8);
  const auto bz2 = series_compose_geom(z2, 8);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(bz2[n] == static_cast<long>(n) - 1);

  // Y-series of BCK(1) up to z^5: 1 at z^2, 5 at z^5.
  auto y = Series<BigInt>(5);
  y[2] = 1;
  y[5] = 5;
  const auto f = series_compose_geom(y, 5);
  CHECK(f[2] == 1);
  CHECK(f[3] == 2);
  CHECK(f[4] == 3);

  CHECK_THROWS_AS(series_compose_geom(Series<BigInt>::monomial(0, BigInt(1), 4), 4),
                  DomainError);
}

TEST_CASE("[series] compose round trip through z/(1+z)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_series(rng, 40, -50, 50);
    a[0] = 0;
    CHECK(series_compose_geom_inverse(series_compose_geom(a, 40), 40) == a);
    CHECK(series_compose_geom(series_compose_geom_inverse(a, 40), 40) == a);
  }
}

TEST_CASE("[series] generalized binomial") {
  CHECK(gen_binomial(ratio(BigInt(5), BigInt(2)), 1) == ratio(BigInt(5), BigInt(2)));
  CHECK(gen_binomial(ratio(BigInt(5), BigInt(2)), 2) == ratio(BigInt(15), BigInt(8)));
  CHECK(gen_binomial(ratio(BigInt(5), BigInt(2)), 0) == 1);
  // 4 gen_binomial(3n/2 - 1/2, 1) at n = 1 is Q_1(1).
  CHECK(4 * gen_binomial(ratio(BigInt(1), BigInt(1)), 1) == BigRational(q_poly(1, 1)));
  for (long m = 0; m <= 30; ++m) {
    for (long k = 0; k <= m; ++k) {
      CHECK(gen_binomial(BigRational(m), static_cast<std::size_t>(k)) == BigRational(binomial(m, k)));
    }
  }
}

TEST_CASE("[series] inverse square root powers") {
  // 1/sqrt(1-4u): central binomial coefficients.
  const auto s = inverse_sqrt_power(1, 10);
  for (std::size_t m = 0; m <= 10; ++m) CHECK(s[m] == binomial(2 * m, m));
  // (1-4u)^{-1} = sum 4^m u^m.
  const auto t = inverse_sqrt_power(2, 10);
  for (std::size_t m = 0; m <= 10; ++m) CHECK(t[m] == power(BigInt(4), m));
  // (1-4u)^{-3/2} = s * t.
  CHECK(inverse_sqrt_power(3, 10) == s * t);
}

TEST_CASE("[series] bivariate extraction") {
  const auto m = motzkin_bivar(8, 4);
  CHECK(bivar_extract_u(m, 0).is_zero());
  CHECK(bivar_extract_u(m, 2)[3] == 1);
  CHECK_THROWS_AS(bivar_extract_u(m, 5), DomainError);

  for (std::size_t p = 0; p <= 6; ++p) {
    const auto f = inverse_sqrt_power(1, 6);
    const auto g = BivarSeries<BigInt>::from_u_series(f, 3);
    const auto zg = bivar_mul(BivarSeries<BigInt>::from_z_series(
                                  Series<BigInt>::monomial(1, BigInt(1), 3), 6),
                              g);
    const auto slice = bivar_extract_u(zg, p);
    CHECK(slice[1] == binomial(2 * p, p));
    CHECK(slice[0] == 0);
  }
}

TEST_CASE("[series] extraction commutes with addition and pure-z products") {
  std::mt19937_64 rng(3);
  const std::size_t nz = 12, nu = 5;
  auto random_bivar = [&] {
    BivarSeries<BigInt> b(nz, nu);
    std::uniform_int_distribution<long> d(-20, 20);
    for (std::size_t i = 0; i <= nz; ++i)
      for (std::size_t j = 0; j <= nu; ++j) b(i, j) = d(rng);
    return b;
  };
  for (int trial = 0; trial < 4; ++trial) {
    const auto a = random_bivar();
    const auto b = random_bivar();
    const auto c = random_series(rng, nz, -9, 9);
    for (std::size_t p = 0; p <= nu; ++p) {
      CHECK(bivar_extract_u(a + b, p) == bivar_extract_u(a, p) + bivar_extract_u(b, p));
      CHECK(bivar_extract_u(bivar_mul(BivarSeries<BigInt>::from_z_series(c, nu), a), p) ==
            c * bivar_extract_u(a, p));
    }
  }
}

TEST_CASE("[series] bivariate helpers") {
  BivarSeries<BigInt> x(6, 2);
  x(1, 0) = 1;  // x = z
  const auto w = bivar_inverse_one_minus(x);
  for (std::size_t i = 0; i <= 6; ++i) CHECK(w(i, 0) == 1);
  BivarSeries<BigInt> bad(3, 1);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(bivar_inverse_one_minus(bad), DomainError);

  BivarSeries<BigInt> u(2, 4);
  u(0, 1) = 1;  // u / (1 - u) = u + u^2 + ...
  const auto d = bivar_div_one_minus_u(u);
  CHECK(d(0, 0) == 0);
  for (std::size_t j = 1; j <= 4; ++j) CHECK(d(0, j) == 1);
}
