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
#include <functional>
#include <string>
#include <vector>

#include "lambdacount/bigint.hpp"
#include "lambdacount/terms.hpp"

namespace lambdacount {

enum class ConstraintKind { kClosed, kBci, kBck };

// Closed: any binders. BCI(p): every unary node binds exactly p leaves.
// BCK(p): at most p.
struct Constraint {
  ConstraintKind kind = ConstraintKind::kClosed;
  unsigned p = 0;

  static Constraint closed() { return {}; }
  static Constraint bci(unsigned p);
  static Constraint bck(unsigned p);
  std::string label() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

bool satisfies(const EnrichedTree& t, const Constraint& c);

struct OracleConfig {
  std::size_t cap = 16;
};

using TreeVisitor = std::function<void(const EnrichedTree&)>;

// Visits every enriched tree of size n satisfying c exactly once. Order:
// preorder node kinds leaf < unary < binary, then binders from the
// outermost ancestor inward. OracleCapExceeded when n > config.cap;
// DomainError when n < 1.
void enumerate_terms(std::size_t n, const Constraint& c, const TreeVisitor& visit,
                     const OracleConfig& config = {});
std::vector<EnrichedTree> collect_terms(std::size_t n, const Constraint& c,
                                        const OracleConfig& config = {});
BigInt count_via_oracle(std::size_t n, const Constraint& c,
                        const OracleConfig& config = {});

}  // namespace lambdacount
