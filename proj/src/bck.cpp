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

#include "lambdacount/delta.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"

namespace lambdacount {

namespace {

void check_bck_args(unsigned p, std::size_t n_max) {
  if (p < 1) throw DomainError("BCK: p must be >= 1");
  if (n_max < 1) throw DomainError("BCK: n_max must be >= 1");
}

CountTable table_from_series(Family family, std::string route,
                             const Series<BigInt>& s) {
  CountTable table(family, std::move(route));
  for (std::size_t n = 0; n <= s.order(); ++n) table.append(s[n]);
  return table;
}

}  // namespace

Series<BigInt> bck_y_series(unsigned p, std::size_t n_max) {
  check_bck_args(p, n_max);
  std::vector<std::vector<BigInt>> alpha_rows(p + 1);
  for (unsigned l = 1; l <= p; ++l) alpha_rows[l] = QPoly(l).alpha_row();
  const auto cat = catalan_numbers(p);

  Series<BigInt> y(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt v;
    if (n % 2 == 0 && n / 2 <= p) v += cat[n / 2 - 1];
    for (std::size_t i = 1; i + 2 <= n; ++i) v += y[i] * y[n - 1 - i];
    for (unsigned l = 1; l <= p; ++l) {
      if (n < 2 * l + 2) continue;
      const std::size_t k = n - 2 * l - 1;
      if (sgn(y[k]) == 0) continue;
      BigInt weight;
      for (unsigned m = 1; m <= l; ++m) {
        weight += alpha_rows[l][m] * binomial(static_cast<std::int64_t>(k), m);
      }
      v += weight * y[k];
    }
    y[n] = std::move(v);
  }
  return y;
}

CountTable bck_counts(unsigned p, std::size_t n_max) {
  return table_from_series(Family::bck(p), "Y-route",
                           series_compose_geom(bck_y_series(p, n_max), n_max));
}

Series<BigInt> solve_bck_bivariate(unsigned p, std::size_t n_max,
                                   std::size_t* iterations) {
  check_bck_args(p, n_max);
  const auto m = motzkin_bivar(n_max, p);
  const Series<BigInt> seed =
      shift_up(bivar_extract_u(bivar_div_one_minus_u(m), p), 1);

  BivarSeries<BigInt> two_z_m(n_max, p);
  for (std::size_t i = 0; i < n_max; ++i)
    for (std::size_t j = 0; j <= p; ++j) two_z_m(i + 1, j) = 2 * m(i, j);
  const auto w_powers = bivar_powers(bivar_inverse_one_minus(two_z_m), n_max);

  Series<BigInt> f(n_max);
  std::size_t passes = 0;
  for (;;) {
    ++passes;
    if (passes > n_max + 2) {
      throw Error("solve_bck_bivariate: fixed point did not stabilize");
    }
    const auto substituted = bivar_compose_scaled(f, w_powers);
    Series<BigInt> next = seed + shift_up(f * f, 1) +
                          shift_up(bivar_extract_u(bivar_div_one_minus_u(substituted), p), 1);
    if (next == f) break;
    f = std::move(next);
  }
  if (iterations != nullptr) *iterations = passes;
  return f;
}

CountTable bck_counts_bivar(unsigned p, std::size_t n_max) {
  CountTable table = table_from_series(Family::bck(p), "bivariate",
                                       solve_bck_bivariate(p, n_max));
  require_same(table, bck_counts(p, n_max));
  return table;
}

CountTable bck_counts_delta_route(unsigned p, std::size_t n_max) {
  check_bck_args(p, n_max);
  const auto bounded = motzkin_leaf_bounded(p, n_max);
  const DeltaCache delta(n_max, p);
  std::vector<BigInt> f(n_max + 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    BigInt v = bounded[n - 1];
    for (std::size_t i = 1; i + 2 <= n; ++i) v += f[i] * f[n - 1 - i];
    for (std::size_t l = 1; l + 1 <= n; ++l) {
      if (sgn(f[l]) != 0) v += delta(n, l) * f[l];
    }
    f[n] = std::move(v);
  }
  CountTable table(Family::bck(p), "truncated-delta");
  for (auto& v : f) table.append(std::move(v));
  return table;
}

CountTable bck_counts_delta(unsigned p, std::size_t n_max) {
  CountTable table = bck_counts_delta_route(p, n_max);
  require_same(table, bck_counts(p, n_max));
  return table;
}

}  // namespace lambdacount
