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

#include "lambdacount/terms.hpp"

#include <string>
#include <utility>

#include "lambdacount/error.hpp"

namespace lambdacount {

namespace {

std::size_t arity(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLeaf:
      return 0;
    case NodeKind::kUnary:
      return 1;
    case NodeKind::kBinary:
      return 2;
  }
  return 0;
}

// Walks a preorder arity sequence, keeping the stack of open ancestors.
// Calls on_node(i, unary_ancestors) before node i is pushed.
template <typename Kind, typename OnNode>
void walk_preorder(std::size_t n, Kind kind_of, OnNode on_node) {
  struct Open {
    std::size_t remaining;
    bool unary;
  };
  std::vector<Open> open;
  std::vector<std::size_t> unary_stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && open.empty()) {
      throw DomainError("preorder sequence has trailing nodes at " +
                        std::to_string(i));
    }
    const NodeKind kind = kind_of(i);
    on_node(i, unary_stack);
    if (kind == NodeKind::kLeaf) {
      while (!open.empty()) {
        if (--open.back().remaining > 0) break;
        if (open.back().unary) unary_stack.pop_back();
        open.pop_back();
      }
    } else {
      open.push_back({arity(kind), kind == NodeKind::kUnary});
      if (kind == NodeKind::kUnary) unary_stack.push_back(i);
    }
  }
  if (n == 0 || !open.empty()) {
    throw DomainError("preorder sequence does not form a complete tree");
  }
}

NodeKind token_kind(std::int32_t token) {
  if (token == LambdaTermDB::kAbs) return NodeKind::kUnary;
  if (token == LambdaTermDB::kApp) return NodeKind::kBinary;
  if (token >= 1) return NodeKind::kLeaf;
  throw DomainError("invalid de Bruijn token " + std::to_string(token));
}

}  // namespace

EnrichedTree::EnrichedTree(std::vector<EnrichedNode> preorder)
    : nodes_(std::move(preorder)) {
  walk_preorder(
      nodes_.size(), [&](std::size_t i) { return nodes_[i].kind; },
      [&](std::size_t i, const std::vector<std::size_t>& ancestors) {
        const auto& node = nodes_[i];
        if (node.kind != NodeKind::kLeaf) {
          if (node.binder != -1) {
            throw DomainError("non-leaf node " + std::to_string(i) +
                              " carries a binder");
          }
          return;
        }
        for (std::size_t a : ancestors) {
          if (static_cast<std::int32_t>(a) == node.binder) return;
        }
        throw DomainError("leaf " + std::to_string(i) +
                          " is not bound by a unary ancestor");
      });
}

std::size_t EnrichedTree::count(NodeKind kind) const {
  std::size_t c = 0;
  for (const auto& node : nodes_) c += node.kind == kind;
  return c;
}

std::vector<std::size_t> EnrichedTree::pointer_counts() const {
  std::vector<std::size_t> counts(nodes_.size());
  for (const auto& node : nodes_) {
    if (node.kind == NodeKind::kLeaf) ++counts[node.binder];
  }
  return counts;
}

std::size_t EnrichedTree::subtree_end(std::size_t i) const {
  std::size_t slots = 1;
  for (; slots > 0; ++i) slots = slots - 1 + arity(nodes_.at(i).kind);
  return i;
}

std::vector<std::size_t> EnrichedTree::children(std::size_t i) const {
  std::vector<std::size_t> out;
  std::size_t c = i + 1;
  for (std::size_t k = 0; k < arity(nodes_.at(i).kind); ++k) {
    out.push_back(c);
    c = subtree_end(c);
  }
  return out;
}

LambdaTermDB::LambdaTermDB(std::vector<std::int32_t> tokens)
    : tokens_(std::move(tokens)) {
  walk_preorder(
      tokens_.size(), [&](std::size_t i) { return token_kind(tokens_[i]); },
      [](std::size_t, const std::vector<std::size_t>&) {});
}

LambdaTermDB LambdaTermDB::var(std::int32_t index) {
  if (index < 1) throw DomainError("de Bruijn index must be >= 1");
  return LambdaTermDB(std::vector<std::int32_t>{index});
}

LambdaTermDB LambdaTermDB::abs(const LambdaTermDB& body) {
  std::vector<std::int32_t> tokens{kAbs};
  tokens.insert(tokens.end(), body.tokens_.begin(), body.tokens_.end());
  return LambdaTermDB(std::move(tokens));
}

LambdaTermDB LambdaTermDB::app(const LambdaTermDB& left,
                               const LambdaTermDB& right) {
  std::vector<std::int32_t> tokens{kApp};
  tokens.insert(tokens.end(), left.tokens_.begin(), left.tokens_.end());
  tokens.insert(tokens.end(), right.tokens_.begin(), right.tokens_.end());
  return LambdaTermDB(std::move(tokens));
}

bool LambdaTermDB::is_closed() const {
  bool closed = true;
  walk_preorder(
      tokens_.size(), [&](std::size_t i) { return token_kind(tokens_[i]); },
      [&](std::size_t i, const std::vector<std::size_t>& ancestors) {
        if (tokens_[i] >= 1 &&
            static_cast<std::size_t>(tokens_[i]) > ancestors.size()) {
          closed = false;
        }
      });
  return closed;
}

LambdaTermDB to_debruijn(const EnrichedTree& t) {
  const auto& nodes = t.nodes();
  std::vector<std::int32_t> tokens(nodes.size());
  walk_preorder(
      nodes.size(), [&](std::size_t i) { return nodes[i].kind; },
      [&](std::size_t i, const std::vector<std::size_t>& ancestors) {
        switch (nodes[i].kind) {
          case NodeKind::kUnary:
            tokens[i] = LambdaTermDB::kAbs;
            return;
          case NodeKind::kBinary:
            tokens[i] = LambdaTermDB::kApp;
            return;
          case NodeKind::kLeaf:
            break;
        }
        for (std::size_t k = ancestors.size(); k-- > 0;) {
          if (static_cast<std::int32_t>(ancestors[k]) == nodes[i].binder) {
            tokens[i] = static_cast<std::int32_t>(ancestors.size() - k);
            return;
          }
        }
        throw DomainError("leaf binder is not an ancestor");
      });
  return LambdaTermDB(std::move(tokens));
}

EnrichedTree from_debruijn(const LambdaTermDB& t) {
  const auto& tokens = t.tokens();
  std::vector<EnrichedNode> nodes(tokens.size());
  walk_preorder(
      tokens.size(), [&](std::size_t i) { return token_kind(tokens[i]); },
      [&](std::size_t i, const std::vector<std::size_t>& ancestors) {
        nodes[i].kind = token_kind(tokens[i]);
        if (nodes[i].kind != NodeKind::kLeaf) return;
        const auto index = static_cast<std::size_t>(tokens[i]);
        if (index > ancestors.size()) {
          throw DomainError("open term: variable index " + std::to_string(index) +
                            " exceeds abstraction depth " +
                            std::to_string(ancestors.size()));
        }
        nodes[i].binder = static_cast<std::int32_t>(ancestors[ancestors.size() - index]);
      });
  return EnrichedTree(std::move(nodes));
}

}  // namespace lambdacount
