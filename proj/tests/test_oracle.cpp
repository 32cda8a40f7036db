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

#include <set>

#include "doctest.h"
#include "lambdacount/error.hpp"
#include "lambdacount/oracle.hpp"
#include "lambdacount/sequences.hpp"
#include "support.hpp"

using namespace lambdacount;

namespace {

EnrichedTree identity_tree() {
  return EnrichedTree({{NodeKind::kUnary, -1}, {NodeKind::kLeaf, 0}});
}

}  // namespace

TEST_CASE("[oracle] small enumerations") {
  const auto two = collect_terms(2, Constraint::closed());
  REQUIRE(two.size() == 1);
  CHECK(two[0] == identity_tree());
  CHECK(collect_terms(5, Constraint::bci(1)).size() == 5);
  CHECK(collect_terms(4, Constraint::closed()).size() == 4);
  CHECK(count_via_oracle(3, Constraint::closed()) == 2);
  CHECK(count_via_oracle(4, Constraint::bck(1)) == 3);
  CHECK(count_via_oracle(1, Constraint::closed()) == 0);
  for (unsigned p = 1; p <= 5; ++p) CHECK(count_via_oracle(2 * p, Constraint::bci(p)) == catalan(p - 1));
}

TEST_CASE("[oracle] the size-4 closed terms") {
  // Three unary chains and one cherry under a root binder.
  std::set<LambdaTermDB> got;
  for (const auto& t : collect_terms(4, Constraint::closed())) got.insert(to_debruijn(t));
  const auto v1 = LambdaTermDB::var(1);
  const std::set<LambdaTermDB> expected{
      LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::abs(v1))),
      LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::var(2)))),
      LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::var(3)))),
      LambdaTermDB::abs(LambdaTermDB::app(v1, v1))};
  CHECK(got == expected);
}

TEST_CASE("[oracle] agrees with naive de Bruijn generation") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<LambdaTermDB> from_oracle;
    enumerate_terms(n, Constraint::closed(),
                    [&](const EnrichedTree& t) { from_oracle.insert(to_debruijn(t)); });
    const auto naive = lambdacount::testing::naive_terms(n, 0);
    const std::set<LambdaTermDB> naive_set(naive.begin(), naive.end());
    CHECK(naive_set.size() == naive.size());
    CHECK(from_oracle == naive_set);
    CHECK(count_via_oracle(n, Constraint::closed()) == naive.size());
  }
}

TEST_CASE("[oracle] deterministic order, no duplicates") {
  const auto a = collect_terms(8, Constraint::closed());
  const auto b = collect_terms(8, Constraint::closed());
  CHECK(a == b);
  CHECK(std::set<EnrichedTree>(a.begin(), a.end()).size() == a.size());
  CHECK(a.size() == 506);
}

TEST_CASE("[oracle] BCI structure and refinement") {
  for (unsigned p = 1; p <= 3; ++p) {
    for (std::size_t n = 1; n <= 13; ++n) {
      const auto bci = collect_terms(n, Constraint::bci(p));
      if ((n + 1) % (2 * p + 1) != 0) {
        CHECK(bci.empty());
        continue;
      }
      const std::size_t j = (n + 1) / (2 * p + 1);
      for (const auto& t : bci) {
        CHECK(t.count(NodeKind::kUnary) == j);
        CHECK(t.count(NodeKind::kLeaf) == p * j);
        CHECK(t.count(NodeKind::kBinary) == p * j - 1);
        CHECK(t.size() == n);
        CHECK(satisfies(t, Constraint::bci(p)));
      }
    }
  }
  for (unsigned p = 1; p <= 2; ++p) {
    for (std::size_t n = 2; n <= 9; ++n) {
      const auto bci = collect_terms(n, Constraint::bci(p));
      const auto bck = collect_terms(n, Constraint::bck(p));
      const auto closed = collect_terms(n, Constraint::closed());
      const std::set<EnrichedTree> bck_set(bck.begin(), bck.end());
      const std::set<EnrichedTree> closed_set(closed.begin(), closed.end());
      for (const auto& t : bci) CHECK(bck_set.count(t) == 1);
      for (const auto& t : bck) {
        CHECK(closed_set.count(t) == 1);
        CHECK(satisfies(t, Constraint::bck(p)));
      }
      std::size_t filtered = 0;
      for (const auto& t : closed) filtered += satisfies(t, Constraint::bck(p));
      CHECK(filtered == bck.size());
    }
  }
}

TEST_CASE("[oracle] cap and argument errors") {
  CHECK_THROWS_AS(count_via_oracle(17, Constraint::closed()), OracleCapExceeded);
  CHECK_THROWS_AS(count_via_oracle(0, Constraint::closed()), DomainError);
  CHECK(count_via_oracle(3, Constraint::closed(), OracleConfig{3}) == 2);
  CHECK_THROWS_AS(count_via_oracle(4, Constraint::closed(), OracleConfig{3}), OracleCapExceeded);
  CHECK_THROWS_AS(Constraint::bci(0), DomainError);
}

TEST_CASE("[terms] de Bruijn conversion") {
  CHECK(to_debruijn(identity_tree()) == LambdaTermDB::abs(LambdaTermDB::var(1)));
  // (\x.(x x)) (\y.y)
  const EnrichedTree fig({{NodeKind::kBinary, -1},
                          {NodeKind::kUnary, -1},
                          {NodeKind::kBinary, -1},
                          {NodeKind::kLeaf, 1},
                          {NodeKind::kLeaf, 1},
                          {NodeKind::kUnary, -1},
                          {NodeKind::kLeaf, 5}});
  const auto v1 = LambdaTermDB::var(1);
  const auto expected = LambdaTermDB::app(LambdaTermDB::abs(LambdaTermDB::app(v1, v1)),
                                          LambdaTermDB::abs(v1));
  CHECK(to_debruijn(fig) == expected);
  CHECK(from_debruijn(expected) == fig);

  for (std::size_t n = 1; n <= 8; ++n) {
    enumerate_terms(n, Constraint::closed(), [&](const EnrichedTree& t) {
      const auto db = to_debruijn(t);
      CHECK(db.size() == t.size());
      CHECK(db.is_closed());
      CHECK(from_debruijn(db) == t);
    });
  }

  const auto open = LambdaTermDB::abs(LambdaTermDB::var(2));
  CHECK_FALSE(open.is_closed());
  CHECK_THROWS_AS(from_debruijn(open), DomainError);
}

TEST_CASE("[terms] malformed input is rejected") {
  // Leaf bound by a non-ancestor.
  CHECK_THROWS_AS(EnrichedTree({{NodeKind::kBinary, -1},
                                {NodeKind::kUnary, -1},
                                {NodeKind::kLeaf, 1},
                                {NodeKind::kLeaf, 1}}),
                  DomainError);
  // Incomplete tree.
  CHECK_THROWS_AS(EnrichedTree({{NodeKind::kUnary, -1}}), DomainError);
  // Trailing nodes.
  CHECK_THROWS_AS(LambdaTermDB({1, 1}), DomainError);
  CHECK_THROWS_AS(LambdaTermDB({-2}), DomainError);
  CHECK_THROWS_AS(LambdaTermDB::var(0), DomainError);
  const EnrichedTree t({{NodeKind::kUnary, -1},
                        {NodeKind::kBinary, -1},
                        {NodeKind::kLeaf, 0},
                        {NodeKind::kLeaf, 0}});
  CHECK(t.children(0) == std::vector<std::size_t>{1});
  CHECK(t.children(1) == std::vector<std::size_t>{2, 3});
  CHECK(t.pointer_counts()[0] == 2);
}
