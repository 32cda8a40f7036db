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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lambdacount {

enum class NodeKind : std::uint8_t { kLeaf = 0, kUnary = 1, kBinary = 2 };

struct EnrichedNode {
  NodeKind kind = NodeKind::kLeaf;
  // For leaves: preorder index of the binding unary node. -1 otherwise.
  std::int32_t binder = -1;
  friend auto operator<=>(const EnrichedNode&, const EnrichedNode&) = default;
};

// A Motzkin tree in preorder together with the leaf -> binder map. Every
// binder is a unary ancestor of its leaf.
class EnrichedTree {
 public:
  EnrichedTree() = default;
  // Validates shape and binders; DomainError on malformed input.
  explicit EnrichedTree(std::vector<EnrichedNode> preorder);

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<EnrichedNode>& nodes() const noexcept { return nodes_; }
  const EnrichedNode& operator[](std::size_t i) const { return nodes_.at(i); }

  std::size_t count(NodeKind kind) const;
  // Entry i: number of leaves bound by node i (zero for non-unary nodes).
  std::vector<std::size_t> pointer_counts() const;
  // Preorder indices of the children of node i.
  std::vector<std::size_t> children(std::size_t i) const;
  // One past the last preorder index of the subtree rooted at i.
  std::size_t subtree_end(std::size_t i) const;

  friend auto operator<=>(const EnrichedTree&, const EnrichedTree&) = default;

 private:
  std::vector<EnrichedNode> nodes_;
};

// A lambda term in de Bruijn notation, stored as prefix tokens:
// 0 = abstraction, -1 = application, k >= 1 = variable with index k.
class LambdaTermDB {
 public:
  static constexpr std::int32_t kAbs = 0;
  static constexpr std::int32_t kApp = -1;

  LambdaTermDB() = default;
  // DomainError unless the tokens form exactly one well-formed term.
  explicit LambdaTermDB(std::vector<std::int32_t> tokens);

  static LambdaTermDB var(std::int32_t index);
  static LambdaTermDB abs(const LambdaTermDB& body);
  static LambdaTermDB app(const LambdaTermDB& left, const LambdaTermDB& right);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::int32_t>& tokens() const noexcept { return tokens_; }
  // Every variable index is at most its abstraction depth.
  bool is_closed() const;

  friend auto operator<=>(const LambdaTermDB&, const LambdaTermDB&) = default;

 private:
  std::vector<std::int32_t> tokens_;
};

LambdaTermDB to_debruijn(const EnrichedTree& t);
// DomainError on open terms (a variable index beyond its depth).
EnrichedTree from_debruijn(const LambdaTermDB& t);

}  // namespace lambdacount
