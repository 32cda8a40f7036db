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
#include <vector>

#include "lambdacount/bigint.hpp"
#include "lambdacount/family.hpp"
#include "lambdacount/series.hpp"

namespace lambdacount {

// --- Trees ---------------------------------------------------------------

// C_n = binom(2n, n) / (n + 1).
BigInt catalan(std::size_t n);
std::vector<BigInt> catalan_numbers(std::size_t n_max);

// Motzkin trees with n nodes, from M = z + zM + zM^2. M_0 = 0.
BigInt motzkin(std::size_t n);
std::vector<BigInt> motzkin_numbers(std::size_t n_max);

// M(z, u) = uz + zM + zM^2; [z^n u^k] counts Motzkin trees with n nodes
// and k leaves.
BivarSeries<BigInt> motzkin_bivar(std::size_t order_z, std::size_t order_u);

// Motzkin trees with n nodes and at most p leaves, n = 0..n_max.
std::vector<BigInt> motzkin_leaf_bounded(unsigned p, std::size_t n_max);

// --- Pointer decorations -------------------------------------------------

// Weighted ways p pointer hits spread over l distinct edges, by the
// multinomial sum over hit-multiplicity profiles. Cross-checked against
// [u^p](1/sqrt(1-4u) - 1)^l; RouteMismatch on disagreement.
// DomainError unless 1 <= l <= p.
BigInt alpha(unsigned l, unsigned p);
BigInt alpha_multinomial(unsigned l, unsigned p);
BigInt alpha_via_series(unsigned l, unsigned p);

// Q_p(n) = sum_m alpha_{m,p} binom(n(2p+1)-1, m), asserted equal to
// 4^p gen_binomial((p+1/2)n + p - 3/2, p).
BigInt q_poly(unsigned p, std::size_t n);
BigInt q_poly_sum(unsigned p, std::size_t n);
BigInt q_poly_closed_form(unsigned p, std::size_t n);

// Evaluates Q_p(n) repeatedly for one p with the alpha row cached.
class QPoly {
 public:
  explicit QPoly(unsigned p);
  unsigned p() const noexcept { return p_; }
  // Both routes, compared; RouteMismatch on disagreement.
  BigInt operator()(std::size_t n) const;
  BigInt sum_route(std::size_t n) const;
  const std::vector<BigInt>& alpha_row() const noexcept { return alpha_; }

 private:
  unsigned p_;
  std::vector<BigInt> alpha_;  // alpha_[l] = alpha_{l,p}, l = 1..p
};

// --- BCI(p) --------------------------------------------------------------

// phi_j = number of BCI(p)-terms of size (2p+1)j - 1, j = 0..j_max
// (phi_0 = 0):
//   phi_1 = C_{p-1},
//   phi_j = sum_{l+m=j} phi_l phi_m + Q_p(j-1) phi_{j-1}.
std::vector<BigInt> bci_phi(unsigned p, std::size_t j_max);

// Dense table over sizes 0..(2p+1)j_max - 1.
CountTable bci_counts(unsigned p, std::size_t j_max);

// l_{p,(2p+1)j-1} = C_{p-1} prod_{i<j} Q_p(i), j = 0..j_max.
std::vector<BigInt> linearized_phi(unsigned p, std::size_t j_max);
CountTable linearized_counts(unsigned p, std::size_t j_max);

// Delta_p a(z). The coefficient route
//   [z^n] = sum_l alpha_{l,p} binom(n-2p-1, l) a_{n-2p-1}
// is compared against z^{2p+1} [u^p] a(z / sqrt(1-4u)); RouteMismatch if
// they differ. The result keeps a's truncation order.
Series<BigInt> delta_apply(unsigned p, const Series<BigInt>& a);
Series<BigInt> delta_apply_coefficients(unsigned p, const Series<BigInt>& a);
Series<BigInt> delta_apply_bivariate(unsigned p, const Series<BigInt>& a);

// --- BCK(p) --------------------------------------------------------------

// Y_n, n = 0..n_max, from
//   Y = sum_{l<=p} C_{l-1} z^{2l} + zY^2 + (sum_{l<=p} Delta_l) Y.
Series<BigInt> bck_y_series(unsigned p, std::size_t n_max);

// f_n = [z^n] Y(z/(1-z)).
CountTable bck_counts(unsigned p, std::size_t n_max);

// Fixed-point solution of
//   F = z[u^p] M/(1-u) + zF^2 + z[u^p] F(z/(1-2zM)) / (1-u)
// on truncated bivariate series. `iterations` receives the number of
// passes until the coefficients stabilized.
Series<BigInt> solve_bck_bivariate(unsigned p, std::size_t n_max,
                                   std::size_t* iterations = nullptr);
// As above, compared against bck_counts; RouteMismatch on disagreement.
CountTable bck_counts_bivar(unsigned p, std::size_t n_max);

// f_n = #Motzkin(n-1, <= p leaves) + sum f_l f_q + sum delta^{(p)}_{n,l} f_l.
CountTable bck_counts_delta_route(unsigned p, std::size_t n_max);
// As above, compared against bck_counts.
CountTable bck_counts_delta(unsigned p, std::size_t n_max);

// --- Closed terms --------------------------------------------------------

// lambda_n = M_{n-1} + sum_{l+q=n-1} lambda_l lambda_q
//            + sum_{1<=l<=n-1} delta_{n,l} lambda_l.
// Uses delta_fast rows when the fast path validated, the zeta-sum
// definition of delta otherwise. `prefix`, when given, must hold values of
// this route for indices 0..k; only indices beyond k are computed.
CountTable closed_counts(std::size_t n_max, const CountTable* prefix = nullptr);

// Lambda~ = C(z) + z Lambda~^2 + z Lambda~(z/sqrt(1-4z^2)) - z Lambda~,
// then Lambda(z) = Lambda~(z/(1-z)).
Series<BigInt> closed_tilde_series(std::size_t n_max);
CountTable closed_counts_indirect_route(std::size_t n_max);
CountTable closed_counts_indirect(std::size_t n_max);

// T_{n,k}: terms of size n whose free de Bruijn indices are all <= k.
class DeBruijnTable {
 public:
  // Covers T_{n,k} for 1 <= n <= n_max, 0 <= k <= n_max - n + k_extra.
  explicit DeBruijnTable(std::size_t n_max, std::size_t k_extra = 0);

  std::size_t n_max() const noexcept { return n_max_; }
  std::size_t k_max(std::size_t n) const;
  // Zero for n == 0; DomainError outside the covered region.
  const BigInt& operator()(std::size_t n, std::size_t k) const;

 private:
  std::size_t n_max_;
  std::size_t k_extra_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n][k]
  BigInt zero_;
};

DeBruijnTable tnk_table(std::size_t n_max);
CountTable closed_counts_debruijn_route(std::size_t n_max);
CountTable closed_counts_debruijn(std::size_t n_max);

}  // namespace lambdacount
