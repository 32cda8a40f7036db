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

#include "lambdacount/sampler.hpp"

#include <string>
#include <utility>

#include "lambdacount/error.hpp"

namespace lambdacount {

// --- Tables and random source -------------------------------------------

BciTables::BciTables(unsigned p, std::size_t j_max)
    : p_(p), phi_(bci_phi(p, j_max)), q_(j_max + 1), hits_(p + 1), seq_(p + 1),
      cat_(catalan_numbers(p)) {
  for (std::size_t j = 1; j <= j_max; ++j) q_[j] = q_poly(p, j);
  seq_[0] = 1;
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t a = 1; a <= i; ++a) seq_[i] += 2 * cat_[a - 1] * seq_[i - a];
  }
  for (auto& row : hits_) row.assign(p + 1, BigInt(0));
  hits_[0][0] = 1;
  for (std::size_t m = 1; m <= p; ++m) {
    for (std::size_t q = m; q <= p; ++q) {
      for (std::size_t i = 1; i + (m - 1) <= q; ++i) {
        hits_[m][q] += seq_[i] * hits_[m - 1][q - i];
      }
    }
  }
}

SamplerState::SamplerState(std::uint64_t seed) : seed_(seed), rng_(seed) {}

BigInt SamplerState::uniform_below(const BigInt& bound) {
  if (sgn(bound) <= 0) throw DomainError("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const BigInt top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  BigInt x;
  for (;;) {
    for (auto& w : buf) w = rng_();
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x < bound) return x;
  }
}

const DeBruijnTable& SamplerState::debruijn(std::size_t n) {
  if (!debruijn_ || debruijn_->n_max() < n) {
    debruijn_ = std::make_unique<DeBruijnTable>(n);
  }
  return *debruijn_;
}

const BciTables& SamplerState::bci(unsigned p, std::size_t j) {
  auto& slot = bci_[p];
  if (!slot || slot->j_max() < j) slot = std::make_unique<BciTables>(p, j);
  return *slot;
}

// --- Closed terms --------------------------------------------------------

namespace {

void require_closed_size(const DeBruijnTable& table, std::size_t n) {
  if (n > table.n_max()) {
    throw DomainError("de Bruijn table covers sizes up to " +
                      std::to_string(table.n_max()) + ", requested " +
                      std::to_string(n));
  }
  if (n < 2) {
    throw DomainError("there are no closed terms of size " + std::to_string(n));
  }
}

// Walks the grammar top-down. With `state` set, every node draws a fresh
// uniform rank; otherwise ranks are split from `rank`.
LambdaTermDB build_closed(const DeBruijnTable& t, std::size_t n, const BigInt& rank,
                          SamplerState* state) {
  struct Frame {
    std::size_t m;
    std::size_t k;
    BigInt rank;
  };
  std::vector<std::int32_t> tokens;
  tokens.reserve(n);
  std::vector<Frame> stack;
  stack.push_back({n, 0, rank});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (state != nullptr) f.rank = state->uniform_below(t(f.m, f.k));
    if (f.m == 1) {
      tokens.push_back(static_cast<std::int32_t>(f.rank.get_ui()) + 1);
      continue;
    }
    const BigInt& abs_weight = t(f.m - 1, f.k + 1);
    if (f.rank < abs_weight) {
      tokens.push_back(LambdaTermDB::kAbs);
      stack.push_back({f.m - 1, f.k + 1, std::move(f.rank)});
      continue;
    }
    f.rank -= abs_weight;
    bool placed = false;
    for (std::size_t i = 1; i + 2 <= f.m; ++i) {
      const BigInt& right = t(f.m - 1 - i, f.k);
      const BigInt w = t(i, f.k) * right;
      if (f.rank < w) {
        tokens.push_back(LambdaTermDB::kApp);
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.rank.get_mpz_t(), right.get_mpz_t());
        stack.push_back({f.m - 1 - i, f.k, std::move(r)});
        stack.push_back({i, f.k, std::move(q)});
        placed = true;
        break;
      }
      f.rank -= w;
    }
    if (!placed) throw Error("closed-term rank exceeded the branch weights");
  }
  return LambdaTermDB(std::move(tokens));
}

std::vector<std::size_t> subtree_sizes(const std::vector<std::int32_t>& tokens) {
  std::vector<std::size_t> sizes(tokens.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = tokens.size(); i-- > 0;) {
    std::size_t s = 1;
    if (tokens[i] == LambdaTermDB::kAbs) {
      s += stack.back();
      stack.pop_back();
    } else if (tokens[i] == LambdaTermDB::kApp) {
      s += stack.back();
      stack.pop_back();
      s += stack.back();
      stack.pop_back();
    }
    sizes[i] = s;
    stack.push_back(s);
  }
  return sizes;
}

BigInt rank_at(const DeBruijnTable& t, const std::vector<std::int32_t>& tokens,
               const std::vector<std::size_t>& sizes, std::size_t i, std::size_t k) {
  const std::size_t m = sizes[i];
  const std::int32_t tok = tokens[i];
  if (tok >= 1) {
    if (static_cast<std::size_t>(tok) > k) throw DomainError("rank_closed: open term");
    return BigInt(static_cast<unsigned long>(tok - 1));
  }
  if (tok == LambdaTermDB::kAbs) return rank_at(t, tokens, sizes, i + 1, k + 1);
  BigInt offset = t(m - 1, k + 1);
  const std::size_t left = i + 1;
  const std::size_t ls = sizes[left];
  for (std::size_t j = 1; j < ls; ++j) offset += t(j, k) * t(m - 1 - j, k);
  return offset + rank_at(t, tokens, sizes, left, k) * t(m - 1 - ls, k) +
         rank_at(t, tokens, sizes, left + ls, k);
}

}  // namespace

LambdaTermDB sample_closed(std::size_t n, SamplerState& state) {
  const DeBruijnTable& t = state.debruijn(std::max<std::size_t>(n, 1));
  require_closed_size(t, n);
  return build_closed(t, n, BigInt(0), &state);
}

LambdaTermDB unrank_closed(const DeBruijnTable& table, std::size_t n,
                           const BigInt& rank) {
  require_closed_size(table, n);
  if (sgn(rank) < 0 || rank >= table(n, 0)) {
    throw DomainError("unrank_closed: rank " + to_decimal(rank) +
                      " outside [0, " + to_decimal(table(n, 0)) + ")");
  }
  return build_closed(table, n, rank, nullptr);
}

LambdaTermDB unrank_closed(std::size_t n, const BigInt& rank) {
  return unrank_closed(DeBruijnTable(std::max<std::size_t>(n, 1)), n, rank);
}

BigInt rank_closed(const DeBruijnTable& table, const LambdaTermDB& term) {
  require_closed_size(table, term.size());
  return rank_at(table, term.tokens(), subtree_sizes(term.tokens()), 0, 0);
}

BigInt rank_closed(const LambdaTermDB& term) {
  return rank_closed(DeBruijnTable(std::max<std::size_t>(term.size(), 1)), term);
}

// --- BCI(p) terms --------------------------------------------------------

std::size_t bci_unary_count(unsigned p, std::size_t size) {
  if (p < 1) throw DomainError("BCI(p) needs p >= 1");
  const std::size_t period = 2 * static_cast<std::size_t>(p) + 1;
  if (size < 2 * static_cast<std::size_t>(p) || (size + 1) % period != 0) {
    throw DomainError("size " + std::to_string(size) + " is off the BCI(" +
                      std::to_string(p) + ") support");
  }
  return (size + 1) / period;
}

namespace {

struct SequenceElement {
  std::size_t leaves;
  bool left;  // attached tree is the left child of the path node
  BigInt tree_rank;
};

class BciBuilder {
 public:
  explicit BciBuilder(const BciTables& t) : t_(t), p_(t.p()) {}

  std::vector<EnrichedNode> build(std::size_t j, BigInt rank) {
    std::vector<EnrichedNode> out;
    if (j == 1) {
      out.push_back({NodeKind::kUnary, -1});
      append_binary_tree(out, p_, std::move(rank), 0);
      return out;
    }
    for (std::size_t l = 1; l < j; ++l) {
      const BigInt& right = t_.phi(j - l);
      const BigInt w = t_.phi(l) * right;
      if (rank < w) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rank.get_mpz_t(), right.get_mpz_t());
        out.push_back({NodeKind::kBinary, -1});
        append_shifted(out, build(l, std::move(q)));
        append_shifted(out, build(j - l, std::move(r)));
        return out;
      }
      rank -= w;
    }
    const BigInt& qw = t_.q(j - 1);
    BigInt inner, dec;
    mpz_tdiv_qr(inner.get_mpz_t(), dec.get_mpz_t(), rank.get_mpz_t(), qw.get_mpz_t());
    return expand(build(j - 1, std::move(inner)), std::move(dec));
  }

 private:
  static void append_shifted(std::vector<EnrichedNode>& out,
                             const std::vector<EnrichedNode>& part) {
    const auto shift = static_cast<std::int32_t>(out.size());
    for (auto node : part) {
      if (node.kind == NodeKind::kLeaf) node.binder += shift;
      out.push_back(node);
    }
  }

  void append_binary_tree(std::vector<EnrichedNode>& out, std::size_t leaves,
                          BigInt rank, std::int32_t binder) const {
    if (leaves == 1) {
      out.push_back({NodeKind::kLeaf, binder});
      return;
    }
    for (std::size_t b = 1; b < leaves; ++b) {
      const BigInt& right = t_.catalan(leaves - b - 1);
      const BigInt w = t_.catalan(b - 1) * right;
      if (rank < w) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rank.get_mpz_t(), right.get_mpz_t());
        out.push_back({NodeKind::kBinary, -1});
        append_binary_tree(out, b, std::move(q), binder);
        append_binary_tree(out, leaves - b, std::move(r), binder);
        return;
      }
      rank -= w;
    }
    throw Error("binary tree rank exceeded the Catalan weights");
  }

  std::vector<SequenceElement> decode_sequence(std::size_t leaves, BigInt rank) const {
    std::vector<SequenceElement> seq;
    while (leaves > 0) {
      bool placed = false;
      for (std::size_t a = 1; a <= leaves && !placed; ++a) {
        const BigInt& rest = t_.sequences(leaves - a);
        const BigInt w = t_.catalan(a - 1) * rest;
        for (bool left : {true, false}) {
          if (rank < w) {
            BigInt q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rank.get_mpz_t(), rest.get_mpz_t());
            seq.push_back({a, left, std::move(q)});
            rank = std::move(r);
            leaves -= a;
            placed = true;
            break;
          }
          rank -= w;
        }
      }
      if (!placed) throw Error("sequence rank exceeded its weights");
    }
    return seq;
  }

  static std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t m, BigInt rank) {
    std::vector<std::size_t> out;
    std::size_t c = 0;
    for (std::size_t s = 0; s < m; ++s) {
      for (;; ++c) {
        const BigInt cnt = binomial(static_cast<std::int64_t>(n - 1 - c),
                                    static_cast<std::int64_t>(m - 1 - s));
        if (rank < cnt) break;
        rank -= cnt;
      }
      out.push_back(c++);
    }
    return out;
  }

  // New unary root over `inner`, with p new leaves placed on path nodes
  // inserted above the chosen nodes of `inner`.
  std::vector<EnrichedNode> expand(const std::vector<EnrichedNode>& inner, BigInt dec) {
    const std::size_t n = inner.size();
    std::size_t m = 1;
    for (;; ++m) {
      if (m > p_ || m > n) throw Error("decoration rank exceeded Q_p");
      const BigInt w = t_.hits(m, p_) * binomial(static_cast<std::int64_t>(n),
                                                  static_cast<std::int64_t>(m));
      if (dec < w) break;
      dec -= w;
    }
    BigInt subset_rank, comp;
    mpz_tdiv_qr(subset_rank.get_mpz_t(), comp.get_mpz_t(), dec.get_mpz_t(),
                t_.hits(m, p_).get_mpz_t());
    const auto nodes = unrank_subset(n, m, std::move(subset_rank));

    std::vector<std::vector<SequenceElement>> edges(n);
    std::size_t hits_left = p_;
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t after = m - e - 1;
      bool placed = false;
      for (std::size_t i = 1; i + after <= hits_left; ++i) {
        const BigInt& rest = t_.hits(after, hits_left - i);
        const BigInt w = t_.sequences(i) * rest;
        if (comp < w) {
          BigInt q, r;
          mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), comp.get_mpz_t(), rest.get_mpz_t());
          edges[nodes[e]] = decode_sequence(i, std::move(q));
          comp = std::move(r);
          hits_left -= i;
          placed = true;
          break;
        }
        comp -= w;
      }
      if (!placed) throw Error("composition rank exceeded its weights");
    }

    std::vector<EnrichedNode> out;
    out.reserve(n + 1 + 2 * p_);
    out.push_back({NodeKind::kUnary, -1});
    std::vector<std::int32_t> remap(n, -1);
    std::size_t next = 0;
    emit_subtree(inner, edges, remap, next, out);
    return out;
  }

  void emit_subtree(const std::vector<EnrichedNode>& inner,
                    const std::vector<std::vector<SequenceElement>>& edges,
                    std::vector<std::int32_t>& remap, std::size_t& next,
                    std::vector<EnrichedNode>& out) {
    const std::size_t v = next;
    emit_chain(inner, edges, remap, next, out, edges[v], 0);
  }

  void emit_chain(const std::vector<EnrichedNode>& inner,
                  const std::vector<std::vector<SequenceElement>>& edges,
                  std::vector<std::int32_t>& remap, std::size_t& next,
                  std::vector<EnrichedNode>& out,
                  const std::vector<SequenceElement>& chain, std::size_t k) {
    if (k == chain.size()) {
      const std::size_t v = next++;
      remap[v] = static_cast<std::int32_t>(out.size());
      EnrichedNode node = inner[v];
      if (node.kind == NodeKind::kLeaf) node.binder = remap[node.binder];
      out.push_back(node);
      const std::size_t arity = node.kind == NodeKind::kBinary  ? 2
                                : node.kind == NodeKind::kUnary ? 1
                                                                : 0;
      for (std::size_t c = 0; c < arity; ++c) emit_subtree(inner, edges, remap, next, out);
      return;
    }
    const SequenceElement& e = chain[k];
    out.push_back({NodeKind::kBinary, -1});
    if (e.left) {
      append_binary_tree(out, e.leaves, e.tree_rank, 0);
      emit_chain(inner, edges, remap, next, out, chain, k + 1);
    } else {
      emit_chain(inner, edges, remap, next, out, chain, k + 1);
      append_binary_tree(out, e.leaves, e.tree_rank, 0);
    }
  }

  const BciTables& t_;
  std::size_t p_;
};

}  // namespace

EnrichedTree unrank_bci(const BciTables& tables, std::size_t size, const BigInt& rank) {
  const std::size_t j = bci_unary_count(tables.p(), size);
  if (j > tables.j_max()) {
    throw DomainError("BCI tables cover " + std::to_string(tables.j_max()) +
                      " unary nodes, requested " + std::to_string(j));
  }
  if (sgn(rank) < 0 || rank >= tables.phi(j)) {
    throw DomainError("unrank_bci: rank " + to_decimal(rank) + " outside [0, " +
                      to_decimal(tables.phi(j)) + ")");
  }
  return EnrichedTree(BciBuilder(tables).build(j, rank));
}

EnrichedTree unrank_bci(unsigned p, std::size_t size, const BigInt& rank) {
  return unrank_bci(BciTables(p, bci_unary_count(p, size)), size, rank);
}

EnrichedTree sample_bci(unsigned p, std::size_t size, SamplerState& state) {
  const std::size_t j = bci_unary_count(p, size);
  const BciTables& tables = state.bci(p, j);
  return unrank_bci(tables, size, state.uniform_below(tables.phi(j)));
}

}  // namespace lambdacount
