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

#include <map>
#include <set>

#include "doctest.h"
#include "lambdacount/error.hpp"
#include "lambdacount/oracle.hpp"
#include "lambdacount/render.hpp"
#include "lambdacount/sampler.hpp"
#include "support.hpp"

using namespace lambdacount;
using lambdacount::testing::chi_square_uniform_pvalue;

TEST_CASE("[random] uniform_below") {
  SamplerState s(42);
  CHECK(s.uniform_below(BigInt(1)) == 0);
  CHECK_THROWS_AS(s.uniform_below(BigInt(0)), DomainError);
  const BigInt bound = power(BigInt(2), 100) + 3;
  for (int i = 0; i < 200; ++i) {
    const BigInt x = s.uniform_below(bound);
    CHECK(sgn(x) >= 0);
    CHECK(x < bound);
  }
  std::map<unsigned long, std::size_t> counts;
  const std::size_t samples = 60000;
  for (std::size_t i = 0; i < samples; ++i) ++counts[s.uniform_below(BigInt(6)).get_ui()];
  CHECK(counts.size() == 6);
  CHECK(chi_square_uniform_pvalue(counts, 6, samples) > 0.001);
}

TEST_CASE("[random] same seed, same stream") {
  SamplerState a(7), b(7), c(8);
  std::vector<LambdaTermDB> xa, xb, xc;
  for (int i = 0; i < 50; ++i) {
    xa.push_back(sample_closed(12, a));
    xb.push_back(sample_closed(12, b));
    xc.push_back(sample_closed(12, c));
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
}

TEST_CASE("[closed] unranking") {
  CHECK(unrank_closed(2, BigInt(0)) == LambdaTermDB::abs(LambdaTermDB::var(1)));
  const auto t30 = unrank_closed(3, BigInt(0));
  const auto t31 = unrank_closed(3, BigInt(1));
  CHECK(t30 != t31);
  CHECK(t30.size() == 3);
  CHECK_THROWS_AS(unrank_closed(3, BigInt(2)), DomainError);
  CHECK_THROWS_AS(unrank_closed(3, BigInt(-1)), DomainError);
  CHECK_THROWS_AS(unrank_closed(1, BigInt(0)), DomainError);

  std::set<LambdaTermDB> five;
  for (long r = 0; r < 13; ++r) five.insert(unrank_closed(5, BigInt(r)));
  std::set<LambdaTermDB> oracle5;
  enumerate_terms(5, Constraint::closed(), [&](const EnrichedTree& t) { oracle5.insert(to_debruijn(t)); });
  CHECK(five == oracle5);
}

TEST_CASE("[closed] rank and unrank are inverse for n <= 9") {
  const DeBruijnTable table(9);
  for (std::size_t n = 2; n <= 9; ++n) {
    const BigInt total = table(n, 0);
    std::set<LambdaTermDB> seen;
    for (BigInt r = 0; r < total; ++r) {
      const auto t = unrank_closed(table, n, r);
      CHECK(t.is_closed());
      CHECK(t.size() == n);
      CHECK(rank_closed(table, t) == r);
      seen.insert(t);
    }
    CHECK(seen.size() == total.get_ui());
  }
  for (const auto& t : lambdacount::testing::naive_terms(7, 0)) {
    CHECK(unrank_closed(7, rank_closed(t)) == t);
  }
}

TEST_CASE("[closed] sampling is uniform at n = 8") {
  SamplerState s(2024);
  std::map<LambdaTermDB, std::size_t> counts;
  const std::size_t samples = 100000;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto t = sample_closed(8, s);
    REQUIRE(t.size() == 8);
    REQUIRE(t.is_closed());
    ++counts[t];
  }
  CHECK(counts.size() == 506);
  CHECK(chi_square_uniform_pvalue(counts, 506, samples) > 0.001);
  SamplerState two(1);
  for (int i = 0; i < 5; ++i) CHECK(sample_closed(2, two) == LambdaTermDB::abs(LambdaTermDB::var(1)));
}

TEST_CASE("[bci] unranking reaches every term exactly once") {
  struct Case {
    unsigned p;
    std::size_t size;
  };
  for (const Case c : {Case{1, 2}, Case{1, 5}, Case{1, 8}, Case{1, 11}, Case{2, 4}, Case{2, 9},
                       Case{3, 6}, Case{3, 13}}) {
    INFO("p=" << c.p << " size=" << c.size);
    const BciTables tables(c.p, bci_unary_count(c.p, c.size));
    const BigInt total = tables.phi(bci_unary_count(c.p, c.size));
    std::set<EnrichedTree> got;
    for (BigInt r = 0; r < total; ++r) {
      const auto t = unrank_bci(tables, c.size, r);
      CHECK(t.size() == c.size);
      CHECK(satisfies(t, Constraint::bci(c.p)));
      got.insert(t);
    }
    CHECK(got.size() == total.get_ui());
    const auto oracle = collect_terms(c.size, Constraint::bci(c.p));
    CHECK(got == std::set<EnrichedTree>(oracle.begin(), oracle.end()));
  }
}

TEST_CASE("[bci] decoration tables") {
  for (unsigned p = 1; p <= 6; ++p) {
    const BciTables t(p, 3);
    for (std::size_t i = 0; i <= p; ++i) CHECK(t.sequences(i) == binomial(2 * i, i));
    for (unsigned m = 1; m <= p; ++m) CHECK(t.hits(m, p) == alpha(m, p));
  }
}

TEST_CASE("[bci] sampling is uniform") {
  struct Case {
    unsigned p;
    std::size_t size;
    std::size_t support;
  };
  for (const Case c : {Case{1, 5, 5}, Case{2, 9, 49}}) {
    SamplerState s(99);
    std::map<EnrichedTree, std::size_t> counts;
    const std::size_t samples = 100000;
    for (std::size_t i = 0; i < samples; ++i) ++counts[sample_bci(c.p, c.size, s)];
    CHECK(counts.size() == c.support);
    CHECK(chi_square_uniform_pvalue(counts, c.support, samples) > 0.001);
  }
  SamplerState s(5);
  const EnrichedTree id({{NodeKind::kUnary, -1}, {NodeKind::kLeaf, 0}});
  for (int i = 0; i < 5; ++i) CHECK(sample_bci(1, 2, s) == id);
  CHECK_THROWS_AS(sample_bci(1, 4, s), DomainError);
  CHECK_THROWS_AS(bci_unary_count(2, 5), DomainError);
}

TEST_CASE("[render] formats") {
  const auto v1 = LambdaTermDB::var(1);
  const auto id = LambdaTermDB::abs(v1);
  const auto t = LambdaTermDB::app(LambdaTermDB::abs(LambdaTermDB::app(v1, v1)), id);
  CHECK(render_named(id) == "(\\x1. x1)");
  CHECK(render_named(t) == "((\\x1. (x1 x1)) (\\x2. x2))");
  CHECK(render_sexpr(t) == "(app (lam (app 1 1)) (lam 1))");
  CHECK(render_named(LambdaTermDB::abs(LambdaTermDB::abs(LambdaTermDB::var(2)))) ==
        "(\\x1. (\\x2. x1))");
  const auto j = render_json(id);
  CHECK(j["type"] == "abs");
  CHECK(j["body"]["index"] == 1);
  const std::string dot = render_dot(from_debruijn(t));
  std::size_t dashed = 0;
  for (std::size_t pos = dot.find("dashed"); pos != std::string::npos; pos = dot.find("dashed", pos + 1)) ++dashed;
  CHECK(dashed == 3);
  CHECK(dot.rfind("digraph", 0) == 0);
}
