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

#include "lambdacount/table_builder.hpp"

#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"

namespace lambdacount {

namespace {

CountTable from_vector(const Family& family, std::string route,
                       const std::vector<BigInt>& values) {
  CountTable table(family, std::move(route));
  for (const auto& v : values) table.append(v);
  return table;
}

CountTable sparse_table(const Family& family, std::size_t max_size, bool linearized) {
  const unsigned p = *family.p;
  const std::size_t j_max = (max_size + 1) / (2 * static_cast<std::size_t>(p) + 1);
  CountTable table = j_max == 0 ? CountTable(family, linearized ? "Q-product" : "phi-recurrence")
                     : linearized ? linearized_counts(p, j_max)
                                  : bci_counts(p, j_max);
  table.pad_to(max_size);
  return table;
}

}  // namespace

CountTable compute_table(const Family& family, std::size_t max_size,
                         const CountTable* resume) {
  if (resume != nullptr && resume->family() != family) {
    throw DomainError("compute_table: resume table belongs to " +
                      resume->family().label() + ", not " + family.label());
  }
  if (Family::needs_p(family.kind) && (!family.p || *family.p < 1)) {
    throw DomainError(family.tag() + " needs p >= 1");
  }
  const std::size_t n = std::max<std::size_t>(max_size, 1);
  CountTable table(family, "");
  switch (family.kind) {
    case FamilyKind::kCatalan:
      table = from_vector(family, "ratio", catalan_numbers(max_size));
      break;
    case FamilyKind::kMotzkin:
      table = from_vector(family, "quadratic", motzkin_numbers(n));
      break;
    case FamilyKind::kMotzkinLeafBounded:
      table = from_vector(family, "bivariate", motzkin_leaf_bounded(*family.p, n));
      break;
    case FamilyKind::kBci:
      table = sparse_table(family, max_size, false);
      break;
    case FamilyKind::kBciLinearized:
      table = sparse_table(family, max_size, true);
      break;
    case FamilyKind::kBck:
      table = bck_counts(*family.p, n);
      break;
    case FamilyKind::kClosed:
      return closed_counts(n, resume);
    case FamilyKind::kClosedDeBruijn:
      table = from_vector(family, "debruijn", closed_counts_debruijn_route(n).values());
      break;
  }
  if (resume != nullptr) require_same(*resume, table);
  return table;
}

}  // namespace lambdacount
