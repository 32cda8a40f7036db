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
#include <string_view>
#include <vector>

#include "lambdacount/bigint.hpp"

namespace lambdacount {

enum class FamilyKind {
  kCatalan,
  kMotzkin,
  kMotzkinLeafBounded,
  kBci,
  kBciLinearized,
  kBck,
  kClosed,
  kClosedDeBruijn,
};

// A counting family, parameterized by p where the family needs one.
struct Family {
  FamilyKind kind = FamilyKind::kClosed;
  std::optional<unsigned> p;

  static Family catalan() { return {FamilyKind::kCatalan, {}}; }
  static Family motzkin() { return {FamilyKind::kMotzkin, {}}; }
  static Family motzkin_leaf_bounded(unsigned p);
  static Family bci(unsigned p);
  static Family bci_linearized(unsigned p);
  static Family bck(unsigned p);
  static Family closed() { return {FamilyKind::kClosed, {}}; }
  static Family closed_debruijn() { return {FamilyKind::kClosedDeBruijn, {}}; }

  static bool needs_p(FamilyKind kind);

  // Stable identifiers used on the command line and in cache files:
  // catalan, motzkin, motzkin-bounded, bci, bci-linearized, bck, closed,
  // closed-debruijn.
  std::string tag() const;
  // Human-readable, e.g. "BCI(2)".
  std::string label() const;
  static Family parse(std::string_view tag, std::optional<unsigned> p);

  // First index at which the family is tabulated (0 for Catalan, else 1).
  std::size_t first_index() const;

  friend bool operator==(const Family&, const Family&) = default;
};

// Memoized sequence values for one family, dense over indices
// 0..extent(). Off-support indices hold zero. Tables only grow.
class CountTable {
 public:
  CountTable(Family family, std::string route);

  const Family& family() const noexcept { return family_; }
  const std::string& route() const noexcept { return route_; }

  bool empty() const noexcept { return values_.empty(); }
  // Highest index covered; only meaningful when !empty().
  std::size_t extent() const noexcept { return values_.size() - 1; }
  // Number of indices covered (extent() + 1, or 0).
  std::size_t size() const noexcept { return values_.size(); }

  // Appends the value for index size(). Values must be nonnegative.
  void append(BigInt value);
  // Extends with zeros up to `index`.
  void pad_to(std::size_t index);

  // Throws DomainError beyond extent().
  const BigInt& at(std::size_t index) const;
  const BigInt& operator[](std::size_t index) const { return at(index); }
  const std::vector<BigInt>& values() const noexcept { return values_; }

 private:
  Family family_;
  std::string route_;
  std::vector<BigInt> values_;
};

// Index of the first entry where the two tables differ on their common
// range, or nullopt when they agree there.
std::optional<std::size_t> first_difference(const CountTable& a,
                                            const CountTable& b);

// Throws RouteMismatch unless the tables agree on their common range.
void require_same(const CountTable& a, const CountTable& b);

}  // namespace lambdacount
