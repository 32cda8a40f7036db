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

// sum_{i+j=s, i,j>=1} v_i v_j added into acc.
void add_self_convolution(BigInt& acc, const std::vector<BigInt>& v, std::size_t s) {
  for (std::size_t i = 1; 2 * i < s; ++i) {
    if (sgn(v[i]) == 0 || sgn(v[s - i]) == 0) continue;
    BigInt prod = v[i] * v[s - i];
    acc += prod;
    acc += prod;
  }
  if (s % 2 == 0 && s >= 2) {
    mpz_addmul(acc.get_mpz_t(), v[s / 2].get_mpz_t(), v[s / 2].get_mpz_t());
  }
}

constexpr const char* kDeltaRoute = "delta-recurrence";

}  // namespace

CountTable closed_counts(std::size_t n_max, const CountTable* prefix) {
  if (n_max < 1) throw DomainError("closed_counts: n_max must be >= 1");
  std::vector<BigInt> lam(n_max + 1);
  std::size_t known = 0;  // lam[0..known] already final
  if (prefix != nullptr && !prefix->empty()) {
    if (prefix->family() != Family::closed()) {
      throw DomainError("closed_counts: prefix table is not a closed-term table");
    }
    known = std::min(prefix->extent(), n_max);
    for (std::size_t i = 0; i <= known; ++i) lam[i] = prefix->at(i);
  }

  const auto motz = motzkin_numbers(n_max);
  const bool fast = delta_fast_status().ok;
  std::optional<DeltaRowGenerator> rows;
  std::optional<DeltaCache> cache;
  if (fast) {
    rows.emplace();
  } else {
    cache.emplace(n_max);
  }

  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::vector<BigInt>* delta_row = nullptr;
    if (fast) delta_row = &rows->next();
    if (n <= known) continue;
    BigInt acc = motz[n - 1];
    add_self_convolution(acc, lam, n - 1);
    for (std::size_t l = 2; l + 1 <= n; ++l) {  // lambda_1 = 0
      const BigInt& d = fast ? (*delta_row)[l] : (*cache)(n, l);
      if (sgn(d) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), d.get_mpz_t(), lam[l].get_mpz_t());
    }
    lam[n] = std::move(acc);
  }

  CountTable table(Family::closed(), kDeltaRoute);
  for (auto& v : lam) table.append(std::move(v));
  return table;
}

Series<BigInt> closed_tilde_series(std::size_t n_max) {
  Series<BigInt> lt(n_max);
  const auto cat = catalan_numbers(n_max / 2 + 1);
  // Contributions of z*Lambda~(z/sqrt(1-4z^2)) - z*Lambda~(z), scattered
  // forward as each coefficient becomes final:
  // lt_k z^{k+1} sum_{m>=1} 4^m binom(m + k/2 - 1, m) z^{2m}.
  std::vector<BigInt> pending(n_max + 1);
  std::vector<BigInt> lt_vec(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt v = std::move(pending[n]);
    if (n % 2 == 0) v += cat[n / 2 - 1];
    add_self_convolution(v, lt_vec, n - 1);
    lt_vec[n] = v;
    if (sgn(v) == 0) continue;
    BigInt kernel = 1;  // [z^{2m}] (1-4z^2)^{-n/2}
    for (std::size_t m = 1; n + 1 + 2 * m <= n_max; ++m) {
      kernel *= static_cast<unsigned long>(2 * (2 * m + n - 2));
      mpz_divexact_ui(kernel.get_mpz_t(), kernel.get_mpz_t(),
                      static_cast<unsigned long>(m));
      mpz_addmul(pending[n + 1 + 2 * m].get_mpz_t(), kernel.get_mpz_t(),
                 v.get_mpz_t());
    }
  }
  for (std::size_t n = 0; n <= n_max; ++n) lt[n] = std::move(lt_vec[n]);
  return lt;
}

CountTable closed_counts_indirect_route(std::size_t n_max) {
  if (n_max < 1) throw DomainError("closed_counts_indirect: n_max must be >= 1");
  const auto lam = series_compose_geom(closed_tilde_series(n_max), n_max);
  CountTable table(Family::closed(), "indirect");
  for (std::size_t n = 0; n <= n_max; ++n) table.append(lam[n]);
  return table;
}

CountTable closed_counts_indirect(std::size_t n_max) {
  CountTable table = closed_counts_indirect_route(n_max);
  require_same(table, closed_counts(n_max));
  return table;
}

DeBruijnTable::DeBruijnTable(std::size_t n_max, std::size_t k_extra)
    : n_max_(n_max), k_extra_(k_extra), rows_(n_max + 1) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t kmax = k_max(n);
    auto& row = rows_[n];
    row.resize(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) {
      if (n == 1) {
        row[k] = static_cast<unsigned long>(k);
        continue;
      }
      BigInt acc = rows_[n - 1][k + 1];
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const BigInt& a = rows_[i][k];
        const BigInt& b = rows_[n - 1 - i][k];
        if (sgn(a) == 0 || sgn(b) == 0) continue;
        mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
      row[k] = std::move(acc);
    }
  }
}

std::size_t DeBruijnTable::k_max(std::size_t n) const {
  return n_max_ - n + k_extra_;
}

const BigInt& DeBruijnTable::operator()(std::size_t n, std::size_t k) const {
  if (n == 0) return zero_;
  if (n > n_max_ || k > k_max(n)) {
    throw DomainError("T_{" + std::to_string(n) + "," + std::to_string(k) +
                      "} outside the computed de Bruijn table");
  }
  return rows_[n][k];
}

DeBruijnTable tnk_table(std::size_t n_max) { return DeBruijnTable(n_max); }

CountTable closed_counts_debruijn_route(std::size_t n_max) {
  if (n_max < 1) throw DomainError("closed_counts_debruijn: n_max must be >= 1");
  const DeBruijnTable t(n_max);
  CountTable table(Family::closed(), "debruijn");
  table.append(BigInt(0));
  for (std::size_t n = 1; n <= n_max; ++n) table.append(t(n, 0));
  return table;
}

CountTable closed_counts_debruijn(std::size_t n_max) {
  CountTable table = closed_counts_debruijn_route(n_max);
  require_same(table, closed_counts(n_max));
  return table;
}

}  // namespace lambdacount
