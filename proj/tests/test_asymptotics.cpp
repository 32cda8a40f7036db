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

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/lambert_w.hpp>

#include "doctest.h"
#include "lambdacount/asymptotics.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"

using namespace lambdacount;

TEST_CASE("[constants] beta, gamma, B_p") {
  CHECK(beta_p(2) == doctest::Approx(50).epsilon(1e-14));
  CHECK(gamma_p(2) == 0.0);
  CHECK(gamma_p(5) == doctest::Approx(15.0 / 11.0));
  const double b2 = 1.0 / (std::tgamma(1.2) * std::tgamma(0.8));
  CHECK(compute_Bp(2) == doctest::Approx(b2).epsilon(1e-13));
  // Reflection: Gamma(1.2) Gamma(0.8) = 0.2 pi / sin(0.2 pi).
  CHECK(compute_Bp(2) == doctest::Approx(std::sin(0.2 * std::numbers::pi) / (0.2 * std::numbers::pi)).epsilon(1e-13));
  CHECK(compute_Bp(2) == doctest::Approx(0.9354892).epsilon(1e-7));
  // B_1 = C_0 / Gamma(1 - 1/3).
  CHECK(compute_Bp(1) == doctest::Approx(1.0 / std::tgamma(2.0 / 3.0)).epsilon(1e-13));
}

TEST_CASE("[constants] Euler-Maclaurin base constant") {
  // int_1^2 log Gamma = log(2 pi)/2 - 1.
  const double exact = std::exp(1.0 - 0.5 * std::log(2.0 * std::numbers::pi));
  CHECK(em_base_constant() == doctest::Approx(exact).epsilon(1e-13));
  CHECK(em_base_constant() == doctest::Approx(1.08443755141923).epsilon(1e-13));
}

TEST_CASE("[constants] product form versus Euler-Maclaurin form") {
  double prev = 1e9;
  for (unsigned p = 2; p <= 100; ++p) {
    const double gap = Bp_euler_maclaurin(p) / compute_Bp(p) - 1.0;
    CHECK(gap > 0);
    CHECK(gap < prev);
    CHECK(p * gap > 0.6);
    CHECK(p * gap < 0.75);
    prev = gap;
  }
  CHECK(Bp_euler_maclaurin(2) / compute_Bp(2) - 1.0 == doctest::Approx(0.3091).epsilon(1e-3));
}

TEST_CASE("[a_p] Table 1 values") {
  const ApReport r2 = compute_ap(2, 200);
  CHECK(r2.partial_product == doctest::Approx(r2.exact_ratio).epsilon(1e-12));
  CHECK(std::abs(r2.extrapolated / 1.048668 - 1) < 1e-4);
  const ApReport r3 = compute_ap(3, 300);
  CHECK(std::abs(r3.partial_product / 1.0046726194 - 1) < 1e-6);
  const ApReport r5 = compute_ap(5, 300);
  CHECK(std::abs(r5.partial_product / 1.0001221936 - 1) < 1e-7);
  CHECK(r5.last_step_change < 1e-12);
  CHECK_THROWS_AS(compute_ap(1, 100), DomainError);
  const auto phi = bci_phi(2, 50);
  CHECK_THROWS_AS(compute_ap(2, 51, &phi), DomainError);
  CHECK(compute_ap(2, 50, &phi).partial_product == doctest::Approx(compute_ap(2, 50).partial_product));
}

TEST_CASE("[a_p] the partial products increase toward the limit") {
  const auto phi = bci_phi(2, 300);
  double prev = 0;
  for (std::size_t n = 10; n <= 300; n += 10) {
    const double k = compute_ap(2, n, &phi).partial_product;
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("[estimate] exact table against the asymptotic form") {
  const BciConstants c = bci_constants(2);
  CHECK(c.A_p == doctest::Approx(c.a_p * c.B_p));
  CHECK(c.bar_beta_p == doctest::Approx(50 / std::exp(2.0)));
  CHECK(c.bar_gamma_p == doctest::Approx(-1.0));
  const auto phi = bci_phi(2, 300);
  const double ratio300 = std::exp(log_of(phi[300]) - bci_estimate(c, 300));
  CHECK(ratio300 > 0.99);
  CHECK(ratio300 < 1.01);
  // Both forms describe the same growth up to Stirling's O(1/n).
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const double diff = bci_estimate(c, n) - bci_estimate_stirling(c, n);
    CHECK(std::abs(diff - 2.0 / (12.0 * n)) < 1e-3 / n);
  }
}

TEST_CASE("[estimate] linearized table ratio tends to one") {
  for (unsigned p = 2; p <= 4; ++p) {
    const auto ell = linearized_phi(p, 400);
    double prev_gap = 1e9;
    for (std::size_t n = 50; n <= 400; n += 50) {
      const double gap = std::abs(log_of(ell[n]) - linearized_estimate(p, n));
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(prev_gap < 1e-2);
  }
}

TEST_CASE("[bci1] growth shape") {
  CHECK_THROWS_AS(bci1_growth(3), DomainError);
  CHECK_THROWS_AS(bci1_growth(4), DomainError);
  CHECK(std::isfinite(bci1_growth(2)));
  const auto profile = bci1_ratio_profile(302);
  CHECK(profile.front().n == 2);
  CHECK(std::isfinite(profile.front().log_ratio));
  CHECK(profile.back().n == 302);
  const double last = profile.back().log_ratio;
  const double earlier = profile[profile.size() - 11].log_ratio;
  CHECK(std::abs(std::expm1(last - earlier)) < 0.01);
}

TEST_CASE("[bounds] closed-term corridor") {
  const auto lam = closed_counts(400);
  for (std::size_t n = 100; n <= 400; ++n) {
    const BoundReport r = lambda_bounds(n, 0.1, lam);
    CHECK(r.normalized() >= corridor_low());
    CHECK(r.normalized() <= corridor_high());
    CHECK(r.lower_exponent < r.upper_exponent);
  }
  const BoundReport small = lambda_bounds(3, 0.5);
  CHECK(small.log_lambda == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(lambda_bounds(2, 0.1), DomainError);
  CHECK_THROWS_AS(lambda_bounds(10, 0.0), DomainError);
  CHECK_THROWS_AS(lambda_bounds(500, 0.1, lam), DomainError);
}

TEST_CASE("[lambert] values and round trips") {
  CHECK(lambert_w(0.0) == 0.0);
  CHECK(lambert_w(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(lambert_w(-1.0), DomainError);
  double prev = -1;
  for (double x = 0.0; x <= 50.0; x += 0.25) {
    const double w = lambert_w(x * std::exp(x));
    CHECK(std::abs(w - x) <= 1e-10 * std::max(1.0, x));
    CHECK(w > prev);
    prev = w;
  }
  for (double x : {1e-8, 0.3, 1.0, 7.5, 1e3, 1e8, 1e150}) {
    const double w = lambert_w(x);
    CHECK(w == doctest::Approx(boost::math::lambert_w0(x)).epsilon(1e-12));
    CHECK(w * std::exp(w) == doctest::Approx(x).epsilon(1e-12));
  }
}

TEST_CASE("[lambert] bracket for the chain length") {
  const LambertCheck c = lambert_check(1e6);
  CHECK(c.in_bracket());
  CHECK(std::abs(c.w - c.expansion) < 2 * std::log(std::log(1e6)) / std::log(1e6));
  CHECK_THROWS_AS(lambert_check(1.0), DomainError);
}
