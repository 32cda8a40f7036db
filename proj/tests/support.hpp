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
#include <random>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "lambdacount/bigint.hpp"
#include "lambdacount/series.hpp"
#include "lambdacount/terms.hpp"

namespace lambdacount::testing {

// Every de Bruijn term of size n whose free indices are <= k, built from
// the grammar directly without any counting table.
inline std::vector<LambdaTermDB> naive_terms(std::size_t n, std::size_t k) {
  std::vector<LambdaTermDB> out;
  if (n == 1) {
    for (std::size_t i = 1; i <= k; ++i) out.push_back(LambdaTermDB::var(static_cast<std::int32_t>(i)));
    return out;
  }
  for (const auto& body : naive_terms(n - 1, k + 1)) out.push_back(LambdaTermDB::abs(body));
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const auto left = naive_terms(i, k);
    const auto right = naive_terms(n - 1 - i, k);
    for (const auto& l : left)
      for (const auto& r : right) out.push_back(LambdaTermDB::app(l, r));
  }
  return out;
}

// Upper-tail p-value of Pearson's statistic for uniform expectations.
template <typename Key>
double chi_square_uniform_pvalue(const std::map<Key, std::size_t>& counts,
                                 std::size_t support, std::size_t samples) {
  const double expected = static_cast<double>(samples) / static_cast<double>(support);
  double stat = 0;
  std::size_t seen = 0;
  for (const auto& [key, c] : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
    ++seen;
  }
  stat += static_cast<double>(support - seen) * expected;  // unseen cells
  boost::math::chi_squared dist(static_cast<double>(support - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

inline Series<BigInt> random_series(std::mt19937_64& rng, std::size_t order, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  Series<BigInt> s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = d(rng);
  return s;
}

}  // namespace lambdacount::testing
