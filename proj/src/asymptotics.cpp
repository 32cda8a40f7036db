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

#include "lambdacount/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"

namespace lambdacount {

namespace {

double log_catalan(unsigned p) { return log_of(catalan(p - 1)); }

void require_p2(unsigned p) {
  if (p < 2) throw DomainError("asymptotics: p must be >= 2");
}

}  // namespace

double beta_p(unsigned p) {
  return std::exp(p * std::log(4.0 * p + 2.0) - std::lgamma(p + 1.0));
}

double gamma_p(unsigned p) {
  return static_cast<double>(p) * (static_cast<double>(p) - 2.0) / (2.0 * p + 1.0);
}

double compute_Bp(unsigned p) {
  if (p < 1) throw DomainError("compute_Bp: p must be >= 1");
  double log_b = log_catalan(p);
  for (unsigned k = 1; k <= p; ++k) {
    const double x = (2.0 * (static_cast<double>(p) - k) - 1.0) / (2.0 * p + 1.0);
    log_b -= std::lgamma(1.0 + x);
  }
  return std::exp(log_b);
}

double em_base_constant() {
  using boost::math::quadrature::gauss_kronrod;
  const double integral = gauss_kronrod<double, 61>::integrate(
      [](double x) { return std::lgamma(x); }, 1.0, 2.0, 15, 1e-15);
  return std::exp(-integral);
}

double Bp_euler_maclaurin(unsigned p) {
  if (p < 1) throw DomainError("Bp_euler_maclaurin: p must be >= 1");
  return std::exp(log_catalan(p) + (2.0 * p + 1.0) / 2.0 * std::log(em_base_constant()));
}

ApReport compute_ap(unsigned p, std::size_t n_terms, const std::vector<BigInt>* phi) {
  require_p2(p);
  if (n_terms < 4) throw DomainError("compute_ap: n_terms must be >= 4");
  std::vector<BigInt> own;
  if (phi == nullptr) {
    own = bci_phi(p, n_terms);
    phi = &own;
  }
  if (phi->size() < n_terms + 1) {
    throw DomainError("compute_ap: phi table has " + std::to_string(phi->size()) +
                      " entries, need " + std::to_string(n_terms + 1));
  }
  const QPoly q(p);
  // k[n] = K_p(n); K_p(1) is the empty product.
  std::vector<double> k(n_terms + 1, 1.0);
  BigInt prod_q = 1;  // prod_{j<n} Q_p(j), for the exact ratio
  for (std::size_t j = 1; j + 1 <= n_terms; ++j) {
    const BigInt qj = q.sum_route(j);
    const BigInt linear = qj * (*phi)[j];
    const BigInt conv = (*phi)[j + 1] - linear;  // sum_{l+m=j+1} phi_l phi_m
    BigRational gamma_over_q(conv, linear);
    gamma_over_q.canonicalize();
    k[j + 1] = k[j] * (1.0 + gamma_over_q.get_d());
    prod_q *= qj;
  }
  ApReport r;
  r.p = p;
  r.n_terms = n_terms;
  r.partial_product = k[n_terms];
  r.exact_ratio = std::exp(log_of((*phi)[n_terms]) - log_of(prod_q) -
                           log_of(catalan(p - 1)));
  const double w = std::pow(2.0, static_cast<double>(p) - 1.0);
  r.extrapolated = (w * k[n_terms] - k[n_terms / 2]) / (w - 1.0);
  r.last_step_change = std::abs(k[n_terms] / k[n_terms - 1] - 1.0);
  return r;
}

BciConstants bci_constants(unsigned p, std::size_t n_terms) {
  require_p2(p);
  BciConstants c;
  c.p = p;
  c.beta_p = beta_p(p);
  c.gamma_p = gamma_p(p);
  c.B_p = compute_Bp(p);
  const ApReport ap = compute_ap(p, n_terms);
  c.a_p = ap.extrapolated;
  c.a_p_raw = ap.partial_product;
  c.A_p = c.a_p * c.B_p;
  c.bar_beta_p = c.beta_p / std::exp(static_cast<double>(p));
  c.bar_gamma_p = -5.0 * p / (4.0 * p + 2.0);
  c.bar_A_p = std::pow(2.0 * std::numbers::pi / std::exp(2.0), p / 2.0) * c.A_p;
  return c;
}

double bci_estimate(const BciConstants& c, std::size_t n) {
  if (n < 1) throw DomainError("bci_estimate: n must be >= 1");
  const double nd = static_cast<double>(n);
  return std::log(c.A_p) + (nd - 1.0) * std::log(c.beta_p) +
         c.gamma_p * std::log(nd) + c.p * std::lgamma(nd);
}

double bci_estimate(unsigned p, std::size_t n) {
  return bci_estimate(bci_constants(p), n);
}

double bci_estimate_stirling(const BciConstants& c, std::size_t n) {
  if (n < 1) throw DomainError("bci_estimate_stirling: n must be >= 1");
  const double nd = static_cast<double>(n);
  return std::log(c.bar_A_p) + (nd - 1.0) * std::log(c.bar_beta_p) +
         c.bar_gamma_p * std::log(nd) + nd * c.p * std::log(nd);
}

double linearized_estimate(unsigned p, std::size_t n) {
  if (n < 1) throw DomainError("linearized_estimate: n must be >= 1");
  const double nd = static_cast<double>(n);
  return std::log(compute_Bp(p)) + (nd - 1.0) * std::log(beta_p(p)) +
         gamma_p(p) * std::log(nd) + p * std::lgamma(nd);
}

double bci1_growth(std::size_t n) {
  if (n % 3 != 2) {
    throw DomainError("bci1_growth: size " + std::to_string(n) +
                      " is not 2 mod 3; the BCI(1) count there is zero");
  }
  const double nd = static_cast<double>(n);
  return nd / 3.0 * std::log(2.0 * nd / std::numbers::e) - std::log(nd) / 6.0;
}

std::vector<GrowthPoint> bci1_ratio_profile(std::size_t size_max) {
  if (size_max < 2) throw DomainError("bci1_ratio_profile: size_max must be >= 2");
  const std::size_t j_max = (size_max + 1) / 3;
  const auto g = bci_phi(1, j_max);
  std::vector<GrowthPoint> out;
  for (std::size_t j = 1; j <= j_max; ++j) {
    const std::size_t n = 3 * j - 1;
    out.push_back({n, log_of(g[j]) - bci1_growth(n)});
  }
  return out;
}

namespace {
double log_n_over_log_n(std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::log(nd / std::log(nd));
}
}  // namespace

double BoundReport::normalized() const {
  return 2.0 / static_cast<double>(n) * log_lambda - log_n_over_log_n(n);
}
double BoundReport::normalized_lower() const {
  return 2.0 / static_cast<double>(n) * lower_exponent - log_n_over_log_n(n);
}
double BoundReport::normalized_upper() const {
  return 2.0 / static_cast<double>(n) * upper_exponent - log_n_over_log_n(n);
}

double corridor_low() { return std::log(4.0) - 1.0 - 0.5; }
double corridor_high() { return std::log(9.0) - 1.0 + 0.5; }

BoundReport lambda_bounds(std::size_t n, double epsilon, const BigInt& lambda_n) {
  if (n < 3) throw DomainError("lambda_bounds: n must be >= 3");
  if (!(epsilon > 0)) throw DomainError("lambda_bounds: epsilon must be > 0");
  const double nd = static_cast<double>(n);
  const double ln = std::log(nd);
  const double lln = std::log(ln);
  BoundReport r;
  r.n = n;
  r.epsilon = epsilon;
  r.log_lambda = log_of(lambda_n);
  r.lower_exponent = nd / 2.0 * std::log(4.0 * nd / (std::numbers::e * ln)) +
                     0.5 * lln - ln;
  r.upper_exponent =
      nd / 2.0 * std::log(9.0 * (1.0 + epsilon) * nd / (std::numbers::e * ln)) +
      nd / (2.0 * ln) * lln - 1.5 * ln;
  return r;
}

BoundReport lambda_bounds(std::size_t n, double epsilon, const CountTable& closed) {
  if (closed.family() != Family::closed() || n > closed.extent()) {
    throw DomainError("lambda_bounds: closed-term table does not reach n = " +
                      std::to_string(n));
  }
  return lambda_bounds(n, epsilon, closed.at(n));
}

BoundReport lambda_bounds(std::size_t n, double epsilon) {
  if (n < 3) throw DomainError("lambda_bounds: n must be >= 3");
  return lambda_bounds(n, epsilon, closed_counts(n));
}

double lambert_w(double x) {
  if (!(x >= 0)) throw DomainError("lambert_w: x must be >= 0");
  if (x == 0) return 0;
  if (std::isinf(x)) return x;
  double w;
  if (x < 3.0) {
    w = std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

LambertCheck lambert_check(double n) {
  if (!(n > std::numbers::e)) throw DomainError("lambert_check: n must exceed e");
  LambertCheck c;
  c.n = n;
  c.w = lambert_w(std::numbers::e * n);
  const double ln = std::log(n);
  const double lln = std::log(ln);
  c.expansion = ln - lln + 1.0;
  c.n_u = n / c.w;
  c.bracket_low = n / ln;
  c.bracket_high = n / (ln - lln);
  return c;
}

}  // namespace lambdacount
