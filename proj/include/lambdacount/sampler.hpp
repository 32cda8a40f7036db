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
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "lambdacount/bigint.hpp"
#include "lambdacount/sequences.hpp"
#include "lambdacount/terms.hpp"

namespace lambdacount {

// Exact tables for unranking BCI(p)-terms with up to j_max unary nodes.
class BciTables {
 public:
  BciTables(unsigned p, std::size_t j_max);

  unsigned p() const noexcept { return p_; }
  std::size_t j_max() const noexcept { return phi_.size() - 1; }
  const BigInt& phi(std::size_t j) const { return phi_.at(j); }
  const BigInt& q(std::size_t j) const { return q_.at(j); }
  // Weighted compositions of q hits over m edges; equals alpha_{m,q}.
  const BigInt& hits(std::size_t m, std::size_t q) const { return hits_.at(m).at(q); }
  // Sequences of left/right attached binary trees with i leaves in total.
  const BigInt& sequences(std::size_t i) const { return seq_.at(i); }
  const BigInt& catalan(std::size_t n) const { return cat_.at(n); }

 private:
  unsigned p_;
  std::vector<BigInt> phi_;
  std::vector<BigInt> q_;
  std::vector<std::vector<BigInt>> hits_;
  std::vector<BigInt> seq_;
  std::vector<BigInt> cat_;
};

// Seeded random source plus lazily built counting tables. One per thread.
class SamplerState {
 public:
  explicit SamplerState(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  // Uniform on [0, bound), by rejection from the smallest power-of-two
  // cover. DomainError if bound <= 0.
  BigInt uniform_below(const BigInt& bound);

  const DeBruijnTable& debruijn(std::size_t n);
  const BciTables& bci(unsigned p, std::size_t j);

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::unique_ptr<DeBruijnTable> debruijn_;
  std::map<unsigned, std::unique_ptr<BciTables>> bci_;
};

// Uniform closed term of size n: at each node (size m, free level k) a
// branch is drawn with weights Var (k, for m = 1), Abs (T_{m-1,k+1}),
// App with left size i (T_{i,k} T_{m-1-i,k}). DomainError if lambda_n = 0.
LambdaTermDB sample_closed(std::size_t n, SamplerState& state);

// Ranks order Var branches first, then Abs, then App splits by increasing
// left size; inside a split the left rank is major. DomainError when rank
// is outside [0, lambda_n).
LambdaTermDB unrank_closed(std::size_t n, const BigInt& rank);
LambdaTermDB unrank_closed(const DeBruijnTable& table, std::size_t n,
                           const BigInt& rank);
BigInt rank_closed(const LambdaTermDB& term);
BigInt rank_closed(const DeBruijnTable& table, const LambdaTermDB& term);

// Number of unary nodes of a BCI(p)-term of the given size; DomainError
// off the support (size + 1 not a multiple of 2p + 1).
std::size_t bci_unary_count(unsigned p, std::size_t size);

// Ranks order the minimal term (j = 1), then root splits by increasing
// left unary count, then root expansions. An expansion rank is
// (inner rank) * Q_p(j-1) + decoration rank.
EnrichedTree unrank_bci(const BciTables& tables, std::size_t size, const BigInt& rank);
EnrichedTree unrank_bci(unsigned p, std::size_t size, const BigInt& rank);
EnrichedTree sample_bci(unsigned p, std::size_t size, SamplerState& state);

}  // namespace lambdacount
