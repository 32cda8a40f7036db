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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdacount/bigint.hpp"

namespace lambdacount {

// zeta_{s,r} = [z^s] (2 z M(z))^r. The Lagrange-inversion sum
//   2^r (r/(s-r)) sum_{b+2c=s-2r} multinomial(s-r; a, b, c)
// is compared with the direct series power; RouteMismatch on disagreement.
BigInt zeta(std::size_t s, std::size_t r);
BigInt zeta_lagrange(std::size_t s, std::size_t r);
BigInt zeta_series(std::size_t s, std::size_t r);

// Table zeta_{s,r} for s <= s_max, r <= s_max/2, from series powers.
class ZetaTable {
 public:
  explicit ZetaTable(std::size_t s_max);
  std::size_t s_max() const noexcept { return s_max_; }
  // Zero outside the support.
  BigInt operator()(std::size_t s, std::size_t r) const;

 private:
  std::size_t s_max_;
  std::vector<std::vector<BigInt>> by_r_;  // by_r_[r][s]
};

// delta_{n,l} from the factorial double sum (r >= 1 terms) plus the r = 0
// boundary term [l = n-1]. With `p_cap`, t additionally runs only up to
// p_cap, which bounds the number of pointers of the new root.
// DomainError unless 1 <= l <= n-1.
BigInt delta_direct(std::size_t n, std::size_t l,
                    std::optional<unsigned> p_cap = std::nullopt);

// delta_{n,l} = sum_r binom(l-1+r, l-1) zeta_{n-l-1,r}.
BigInt delta_by_zeta(std::size_t n, std::size_t l);

// b_{n,l,t}, the inner sum of delta_direct for fixed t (asserted integral).
BigInt delta_inner_b(std::size_t n, std::size_t l, std::size_t t);

// Generates delta rows n = 2, 3, ... with the second-order D-finite
// recurrence in n:
//   (n-l)(n+1-l) d_{n+2,l} = (n-l)(2n-l) d_{n+1,l} - l(n-1) d_{n+1,l+1}
//                            - 4l(n-1) d_{n,l+1} + (n-1)(3n-2l+1) d_{n,l},
// seeded by d_{m,m-1} = 1 and d_{m,m-2} = 0. Holds two rows at a time.
class DeltaRowGenerator {
 public:
  DeltaRowGenerator();
  // Row index of the row returned by the next call to next().
  std::size_t next_n() const noexcept { return next_n_; }
  // Returns row n = next_n(): entries [0..n-1], entry 0 unused (zero).
  const std::vector<BigInt>& next();

 private:
  std::size_t next_n_ = 2;
  std::vector<BigInt> older_;   // row next_n_ - 2
  std::vector<BigInt> newer_;   // row next_n_ - 1
  std::vector<BigInt> current_;
};

struct DeltaValidation {
  bool ok = false;
  std::size_t n_max = 0;
  std::size_t values_checked = 0;
  // First (n, l) where the fast rows differ from delta_direct.
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
  // First (n, l) where the companion recurrence (mixed shifts in n and l)
  // leaves a nonzero residual on the generated rows.
  std::optional<std::pair<std::size_t, std::size_t>> companion_failure;
  std::string summary() const;
};

// Exhaustive comparison of the fast rows against delta_direct for all
// 2 <= n <= n_max, 1 <= l <= n-1, plus the companion recurrence residual.
DeltaValidation validate_delta_fast(std::size_t n_max = 60);

// Result of validate_delta_fast(60), computed once per process.
const DeltaValidation& delta_fast_status();

// delta_{n,l} through the recurrence rows. Throws DeltaFastDisabled when
// delta_fast_status() failed.
BigInt delta_fast(std::size_t n, std::size_t l);

struct BSystemReport {
  bool ok = false;
  std::size_t triples_checked = 0;
  std::optional<std::string> first_failure;
};

// Checks the two first-order recurrences for b_{n,l,t} against
// delta_inner_b on n <= n_max.
BSystemReport validate_b_system(std::size_t n_max);

// delta_{n,l} for 2 <= n <= n_max, optionally capped at p pointers.
// Uncapped caches come from the zeta sum; capped ones from delta_direct.
class DeltaCache {
 public:
  explicit DeltaCache(std::size_t n_max,
                      std::optional<unsigned> p_cap = std::nullopt);
  std::size_t n_max() const noexcept { return n_max_; }
  std::optional<unsigned> p_cap() const noexcept { return p_cap_; }
  const BigInt& operator()(std::size_t n, std::size_t l) const;

 private:
  std::size_t n_max_;
  std::optional<unsigned> p_cap_;
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace lambdacount
