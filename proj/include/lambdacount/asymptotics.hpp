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
#include <vector>

#include "lambdacount/bigint.hpp"
#include "lambdacount/family.hpp"

namespace lambdacount {

// Convergence report for a_p = lim K_p(n), where
//   K_p(n) = prod_{j=1}^{n-1} (1 + Gamma_j / Q_p(j)),
//   Gamma_j = sum_{l+m=j+1} phi_l phi_m / phi_j.
struct ApReport {
  unsigned p = 0;
  std::size_t n_terms = 0;
  double partial_product = 0;    // K_p(n_terms), product of float factors
  double exact_ratio = 0;        // phi_n / (C_{p-1} prod Q_p(j)) from exact values
  double extrapolated = 0;       // Richardson from n_terms and n_terms/2, exponent p-1
  double last_step_change = 0;   // |K(n) / K(n-1) - 1|
};

struct BciConstants {
  unsigned p = 0;
  double beta_p = 0;
  double gamma_p = 0;
  double B_p = 0;
  double a_p = 0;       // extrapolated limit
  double a_p_raw = 0;   // partial product at n_terms
  double A_p = 0;
  double bar_beta_p = 0;
  double bar_gamma_p = 0;
  double bar_A_p = 0;
};

double beta_p(unsigned p);
double gamma_p(unsigned p);

// C_{p-1} prod_{k=1}^p 1 / Gamma(1 + (2(p-k)-1)/(2p+1)).
double compute_Bp(unsigned p);
// exp(-int_1^2 log Gamma(x) dx), by adaptive Gauss-Kronrod quadrature.
double em_base_constant();
// C_{p-1} em_base_constant()^{(2p+1)/2}.
double Bp_euler_maclaurin(unsigned p);

// DomainError if p < 2 or n_terms < 4; DomainError if `phi` is given and
// has fewer than n_terms + 1 entries. Without `phi`, the table is computed.
ApReport compute_ap(unsigned p, std::size_t n_terms,
                    const std::vector<BigInt>* phi = nullptr);

BciConstants bci_constants(unsigned p, std::size_t n_terms = 500);

// log(A_p beta_p^{n-1} n^{gamma_p} (n-1)!^p) for phi_n, n >= 1.
double bci_estimate(const BciConstants& c, std::size_t n);
double bci_estimate(unsigned p, std::size_t n);
// Same quantity through the Stirling form bar_A bar_beta^{n-1} n^{bar_gamma} n^{np}.
double bci_estimate_stirling(const BciConstants& c, std::size_t n);
// log(B_p beta_p^{n-1} n^{gamma_p} (n-1)!^p), the linearized-table estimate.
double linearized_estimate(unsigned p, std::size_t n);

// (n/3) log(2n/e) - (1/6) log n for sizes n = 2 (mod 3); DomainError else.
double bci1_growth(std::size_t n);

struct GrowthPoint {
  std::size_t n = 0;
  double log_ratio = 0;  // log g_n - bci1_growth(n)
};

// Log ratios of the exact BCI(1) counts to bci1_growth over every support
// point 2 <= n <= size_max. The fitted constant is exp of the last ratio.
std::vector<GrowthPoint> bci1_ratio_profile(std::size_t size_max);

struct BoundReport {
  std::size_t n = 0;
  double log_lambda = 0;
  double lower_exponent = 0;
  double upper_exponent = 0;
  double epsilon = 0;
  // (2/n) log lambda_n - log(n / log n)
  double normalized() const;
  double normalized_lower() const;
  double normalized_upper() const;
};

// Corridor for normalized(), with slack 0.5 around log 4 - 1 and log 9 - 1.
double corridor_low();
double corridor_high();

// DomainError unless n >= 3 and epsilon > 0.
BoundReport lambda_bounds(std::size_t n, double epsilon, const BigInt& lambda_n);
BoundReport lambda_bounds(std::size_t n, double epsilon, const CountTable& closed);
BoundReport lambda_bounds(std::size_t n, double epsilon);

// Principal branch W(x) for x >= 0; DomainError for x < 0.
double lambert_w(double x);

struct LambertCheck {
  double n = 0;
  double w = 0;            // W(e n)
  double expansion = 0;    // log n - log log n + 1
  double n_u = 0;          // n / W(e n)
  double bracket_low = 0;  // n / log n
  double bracket_high = 0; // n / (log n - log log n)
  bool in_bracket() const { return bracket_low <= n_u && n_u <= bracket_high; }
};
LambertCheck lambert_check(double n);

}  // namespace lambdacount
