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

#include "lambdacount/oracle.hpp"

#include <cstdint>
#include <string>

#include "lambdacount/error.hpp"

namespace lambdacount {

namespace {

template <typename Emit>
class Enumerator {
 public:
  Enumerator(std::size_t n, const Constraint& c, Emit& emit)
      : n_(n), c_(c), emit_(emit), nodes_(n), pointers_(n) {}

  void run() { step(0); }

 private:
  struct Open {
    std::size_t remaining;
    std::int32_t unary_index;  // -1 for binary nodes
  };

  bool bounded() const { return c_.kind != ConstraintKind::kClosed; }
  bool exact() const { return c_.kind == ConstraintKind::kBci; }

  static bool feasible(std::size_t slots, std::size_t r) {
    return slots <= r && ((slots == 0) == (r == 0));
  }

  void step(std::size_t i) {
    const std::size_t r = n_ - i;
    if (r == 0) {
      emit_(nodes_);
      return;
    }
    if (exact()) {
      std::size_t need = 0;
      for (auto u : unary_stack_) need += c_.p - pointers_[u];
      if (need > r) return;
    }
    place_leaf(i, r);
    if (feasible(slots_, r - 1)) {
      nodes_[i] = {NodeKind::kUnary, -1};
      open_.push_back({1, static_cast<std::int32_t>(i)});
      unary_stack_.push_back(static_cast<std::int32_t>(i));
      step(i + 1);
      unary_stack_.pop_back();
      open_.pop_back();
    }
    if (feasible(slots_ + 1, r - 1)) {
      nodes_[i] = {NodeKind::kBinary, -1};
      open_.push_back({2, -1});
      ++slots_;
      step(i + 1);
      --slots_;
      open_.pop_back();
    }
  }

  void place_leaf(std::size_t i, std::size_t r) {
    if (unary_stack_.empty() || !feasible(slots_ - 1, r - 1)) return;
    --slots_;
    for (std::size_t k = 0; k < unary_stack_.size(); ++k) {
      const std::int32_t b = unary_stack_[k];
      if (bounded() && pointers_[b] >= c_.p) continue;
      nodes_[i] = {NodeKind::kLeaf, b};
      ++pointers_[b];

      // Close every ancestor whose subtree this leaf completes.
      std::vector<Open> closed;
      bool ok = true;
      bool decremented = false;
      while (!open_.empty()) {
        if (--open_.back().remaining > 0) {
          decremented = true;
          break;
        }
        const Open done = open_.back();
        open_.pop_back();
        closed.push_back(done);
        if (done.unary_index >= 0) {
          unary_stack_.pop_back();
          if (exact() && pointers_[done.unary_index] != c_.p) ok = false;
        }
      }
      if (ok) step(i + 1);
      for (auto it = closed.rbegin(); it != closed.rend(); ++it) {
        if (it->unary_index >= 0) unary_stack_.push_back(it->unary_index);
        open_.push_back({1, it->unary_index});
      }
      // The loop above restored the popped entries in their original
      // order; the entry that was only decremented sits below them.
      if (decremented) ++open_[open_.size() - 1 - closed.size()].remaining;
      --pointers_[b];
    }
    ++slots_;
  }

  std::size_t n_;
  Constraint c_;
  Emit& emit_;
  std::vector<EnrichedNode> nodes_;
  std::vector<unsigned> pointers_;
  std::vector<Open> open_;
  std::vector<std::int32_t> unary_stack_;
  std::size_t slots_ = 1;
};

void check_request(std::size_t n, const Constraint& c, const OracleConfig& config) {
  if (n < 1) throw DomainError("oracle: size must be >= 1");
  if (n > config.cap) {
    throw OracleCapExceeded("oracle: size " + std::to_string(n) +
                            " exceeds the configured cap " +
                            std::to_string(config.cap));
  }
  if (c.kind != ConstraintKind::kClosed && c.p < 1) {
    throw DomainError("oracle: constraint needs p >= 1");
  }
}

}  // namespace

Constraint Constraint::bci(unsigned p) {
  if (p < 1) throw DomainError("BCI(p) needs p >= 1");
  return {ConstraintKind::kBci, p};
}

Constraint Constraint::bck(unsigned p) {
  if (p < 1) throw DomainError("BCK(p) needs p >= 1");
  return {ConstraintKind::kBck, p};
}

std::string Constraint::label() const {
  switch (kind) {
    case ConstraintKind::kClosed:
      return "Closed";
    case ConstraintKind::kBci:
      return "BCI(" + std::to_string(p) + ")";
    case ConstraintKind::kBck:
      return "BCK(" + std::to_string(p) + ")";
  }
  return "?";
}

bool satisfies(const EnrichedTree& t, const Constraint& c) {
  if (c.kind == ConstraintKind::kClosed) return true;
  const auto counts = t.pointer_counts();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind != NodeKind::kUnary) continue;
    if (counts[i] > c.p) return false;
    if (c.kind == ConstraintKind::kBci && counts[i] != c.p) return false;
  }
  return true;
}

void enumerate_terms(std::size_t n, const Constraint& c, const TreeVisitor& visit,
                     const OracleConfig& config) {
  check_request(n, c, config);
  auto emit = [&](const std::vector<EnrichedNode>& nodes) {
    visit(EnrichedTree(nodes));
  };
  Enumerator<decltype(emit)>(n, c, emit).run();
}

std::vector<EnrichedTree> collect_terms(std::size_t n, const Constraint& c,
                                        const OracleConfig& config) {
  std::vector<EnrichedTree> out;
  enumerate_terms(n, c, [&](const EnrichedTree& t) { out.push_back(t); }, config);
  return out;
}

BigInt count_via_oracle(std::size_t n, const Constraint& c,
                        const OracleConfig& config) {
  check_request(n, c, config);
  std::uint64_t count = 0;
  auto emit = [&](const std::vector<EnrichedNode>&) { ++count; };
  Enumerator<decltype(emit)>(n, c, emit).run();
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(count), 0, 0, &count);
  return out;
}

}  // namespace lambdacount
