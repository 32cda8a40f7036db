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

#include "lambdacount/sequences.hpp"

#include <functional>

#include "lambdacount/error.hpp"

namespace lambdacount {

// --- Family / CountTable -------------------------------------------------

Family Family::motzkin_leaf_bounded(unsigned p) {
  return {FamilyKind::kMotzkinLeafBounded, p};
}
Family Family::bci(unsigned p) { return {FamilyKind::kBci, p}; }
Family Family::bci_linearized(unsigned p) {
  return {FamilyKind::kBciLinearized, p};
}
Family Family::bck(unsigned p) { return {FamilyKind::kBck, p}; }

bool Family::needs_p(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kMotzkinLeafBounded:
    case FamilyKind::kBci:
    case FamilyKind::kBciLinearized:
    case FamilyKind::kBck:
      return true;
    default:
      return false;
  }
}

std::string Family::tag() const {
  switch (kind) {
    case FamilyKind::kCatalan: return "catalan";
    case FamilyKind::kMotzkin: return "motzkin";
    case FamilyKind::kMotzkinLeafBounded: return "motzkin-bounded";
    case FamilyKind::kBci: return "bci";
    case FamilyKind::kBciLinearized: return "bci-linearized";
    case FamilyKind::kBck: return "bck";
    case FamilyKind::kClosed: return "closed";
    case FamilyKind::kClosedDeBruijn: return "closed-debruijn";
  }
  return "unknown";
}

std::string Family::label() const {
  std::string base;
  switch (kind) {
    case FamilyKind::kCatalan: return "Catalan";
    case FamilyKind::kMotzkin: return "Motzkin";
    case FamilyKind::kClosed: return "Closed";
    case FamilyKind::kClosedDeBruijn: return "ClosedDeBruijn";
    case FamilyKind::kMotzkinLeafBounded: base = "MotzkinLeafBounded"; break;
    case FamilyKind::kBci: base = "BCI"; break;
    case FamilyKind::kBciLinearized: base = "BCILinearized"; break;
    case FamilyKind::kBck: base = "BCK"; break;
  }
  return base + "(" + (p ? std::to_string(*p) : std::string("?")) + ")";
}

Family Family::parse(std::string_view tag, std::optional<unsigned> p) {
  static const std::pair<std::string_view, FamilyKind> kTags[] = {
      {"catalan", FamilyKind::kCatalan},
      {"motzkin", FamilyKind::kMotzkin},
      {"motzkin-bounded", FamilyKind::kMotzkinLeafBounded},
      {"bci", FamilyKind::kBci},
      {"bci-linearized", FamilyKind::kBciLinearized},
      {"bck", FamilyKind::kBck},
      {"closed", FamilyKind::kClosed},
      {"closed-debruijn", FamilyKind::kClosedDeBruijn},
  };
  for (const auto& [name, kind] : kTags) {
    if (name != tag) continue;
    if (needs_p(kind)) {
      if (!p) throw DomainError("family '" + std::string(tag) + "' requires p");
      if (*p < 1) throw DomainError("p must be >= 1");
      return {kind, p};
    }
    if (p) throw DomainError("family '" + std::string(tag) + "' takes no p");
    return {kind, {}};
  }
  throw DomainError("unknown family '" + std::string(tag) + "'");
}

std::size_t Family::first_index() const {
  return kind == FamilyKind::kCatalan ? 0 : 1;
}

CountTable::CountTable(Family family, std::string route)
    : family_(family), route_(std::move(route)) {}

void CountTable::append(BigInt value) {
  if (sgn(value) < 0) {
    throw DomainError(family_.label() + ": negative count at index " +
                      std::to_string(values_.size()));
  }
  values_.push_back(std::move(value));
}

void CountTable::pad_to(std::size_t index) {
  while (values_.size() <= index) values_.emplace_back(0);
}

const BigInt& CountTable::at(std::size_t index) const {
  if (index >= values_.size()) {
    throw DomainError(family_.label() + " table covers indices up to " +
                      std::to_string(values_.size()) + "-1, requested " +
                      std::to_string(index));
  }
  return values_[index];
}

std::optional<std::size_t> first_difference(const CountTable& a,
                                            const CountTable& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.values()[i] != b.values()[i]) return i;
  }
  return std::nullopt;
}

void require_same(const CountTable& a, const CountTable& b) {
  if (auto idx = first_difference(a, b)) {
    throw RouteMismatch(a.family().label() + ": route '" + a.route() +
                            "' gives " + to_decimal(a.at(*idx)) + ", route '" +
                            b.route() + "' gives " + to_decimal(b.at(*idx)),
                        *idx);
  }
}

// --- Trees ---------------------------------------------------------------

BigInt catalan(std::size_t n) {
  return exact_divide(binomial(2 * static_cast<std::int64_t>(n),
                               static_cast<std::int64_t>(n)),
                      BigInt(static_cast<unsigned long>(n + 1)), "catalan");
}

std::vector<BigInt> catalan_numbers(std::size_t n_max) {
  std::vector<BigInt> c(n_max + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    // C_n = C_{n-1} * 2(2n-1) / (n+1)
    c[n] = exact_divide(c[n - 1] * static_cast<unsigned long>(2 * (2 * n - 1)),
                        BigInt(static_cast<unsigned long>(n + 1)), "catalan");
  }
  return c;
}

std::vector<BigInt> motzkin_numbers(std::size_t n_max) {
  std::vector<BigInt> m(n_max + 1);
  if (n_max >= 1) m[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    BigInt acc = m[n - 1];
    // sum_{i+j=n-1, i,j>=1} M_i M_j, folded by symmetry.
    const std::size_t s = n - 1;
    for (std::size_t i = 1; 2 * i < s; ++i) {
      mpz_addmul(acc.get_mpz_t(), m[i].get_mpz_t(), m[s - i].get_mpz_t());
      mpz_addmul(acc.get_mpz_t(), m[i].get_mpz_t(), m[s - i].get_mpz_t());
    }
    if (s % 2 == 0 && s >= 2) {
      mpz_addmul(acc.get_mpz_t(), m[s / 2].get_mpz_t(), m[s / 2].get_mpz_t());
    }
    m[n] = std::move(acc);
  }
  return m;
}

BigInt motzkin(std::size_t n) {
  if (n < 1) throw DomainError("motzkin: n must be >= 1");
  return motzkin_numbers(n)[n];
}

BivarSeries<BigInt> motzkin_bivar(std::size_t order_z, std::size_t order_u) {
  if (order_z < 1 || order_u < 1) {
    throw DomainError("motzkin_bivar: orders must be >= 1");
  }
  BivarSeries<BigInt> m(order_z, order_u);
  m(1, 1) = 1;
  for (std::size_t n = 2; n <= order_z; ++n) {
    for (std::size_t k = 0; k <= order_u; ++k) m(n, k) = m(n - 1, k);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const std::size_t j = n - 1 - i;
      for (std::size_t k1 = 0; k1 <= order_u; ++k1) {
        if (sgn(m(i, k1)) == 0) continue;
        for (std::size_t k2 = 0; k1 + k2 <= order_u; ++k2) {
          if (sgn(m(j, k2)) == 0) continue;
          mpz_addmul(m(n, k1 + k2).get_mpz_t(), m(i, k1).get_mpz_t(),
                     m(j, k2).get_mpz_t());
        }
      }
    }
  }
  return m;
}

std::vector<BigInt> motzkin_leaf_bounded(unsigned p, std::size_t n_max) {
  std::vector<BigInt> out(n_max + 1);
  if (n_max == 0) return out;
  const auto m = motzkin_bivar(n_max, std::max(1u, p));
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= p; ++k) out[n] += m(n, k);
  }
  return out;
}

// --- Pointer decorations -------------------------------------------------

namespace {

void check_alpha_args(unsigned l, unsigned p) {
  if (l < 1 || p < 1) throw DomainError("alpha: need l >= 1 and p >= 1");
  if (l > p) {
    throw DomainError("alpha_{" + std::to_string(l) + "," + std::to_string(p) +
                      "}: l > p (the coefficient is structurally zero)");
  }
}

}  // namespace

BigInt alpha_multinomial(unsigned l, unsigned p) {
  check_alpha_args(l, p);
  std::vector<BigInt> central(p + 1);
  for (unsigned m = 0; m <= p; ++m) central[m] = binomial(2 * m, m);
  const BigInt l_fact = factorial(l);

  // Profiles s_1..s_p with sum s_i = l and sum i s_i = p: choose the
  // multiplicity of the largest part first.
  BigInt total;
  std::vector<unsigned> s(p + 1, 0);
  std::function<void(unsigned, unsigned, unsigned)> walk =
      [&](unsigned part, unsigned parts_left, unsigned weight_left) {
        if (part == 0) {
          if (parts_left != 0 || weight_left != 0) return;
          BigInt term = l_fact;
          for (unsigned m = 1; m <= p; ++m) {
            if (s[m] == 0) continue;
            term = exact_divide(term, factorial(s[m]), "alpha multinomial");
            term *= power(central[m], s[m]);
          }
          total += term;
          return;
        }
        for (unsigned k = 0; k <= parts_left && k * part <= weight_left; ++k) {
          s[part] = k;
          walk(part - 1, parts_left - k, weight_left - k * part);
        }
        s[part] = 0;
      };
  walk(p, l, p);
  return total;
}

BigInt alpha_via_series(unsigned l, unsigned p) {
  check_alpha_args(l, p);
  Series<BigInt> f_minus_one = inverse_sqrt_power(1, p);
  f_minus_one[0] = 0;
  Series<BigInt> acc = Series<BigInt>::monomial(0, BigInt(1), p);
  for (unsigned i = 0; i < l; ++i) acc = acc * f_minus_one;
  return acc[p];
}

BigInt alpha(unsigned l, unsigned p) {
  BigInt a = alpha_multinomial(l, p);
  BigInt b = alpha_via_series(l, p);
  if (a != b) {
    throw RouteMismatch("alpha_{" + std::to_string(l) + "," + std::to_string(p) +
                            "}: multinomial sum " + to_decimal(a) +
                            " vs series " + to_decimal(b),
                        l);
  }
  return a;
}

QPoly::QPoly(unsigned p) : p_(p), alpha_(p + 1) {
  if (p < 1) throw DomainError("Q_p: p must be >= 1");
  for (unsigned l = 1; l <= p; ++l) alpha_[l] = alpha(l, p);
}

BigInt QPoly::sum_route(std::size_t n) const {
  if (n < 1) throw DomainError("Q_p(n): n must be >= 1");
  const auto top = static_cast<std::int64_t>(n * (2 * p_ + 1) - 1);
  BigInt q;
  for (unsigned m = 1; m <= p_; ++m) q += alpha_[m] * binomial(top, m);
  return q;
}

BigInt q_poly_closed_form(unsigned p, std::size_t n) {
  if (p < 1 || n < 1) throw DomainError("Q_p(n): need p >= 1 and n >= 1");
  // (p + 1/2) n + p - 3/2 = ((2p+1) n + 2p - 3) / 2
  BigRational top(BigInt(static_cast<long>((2 * p + 1) * n + 2 * p) - 3),
                  BigInt(2));
  top.canonicalize();
  BigRational value = BigRational(power(BigInt(4), p)) * gen_binomial(top, p);
  return require_integer(value, "Q_p closed form");
}

BigInt QPoly::operator()(std::size_t n) const {
  BigInt a = sum_route(n);
  BigInt b = q_poly_closed_form(p_, n);
  if (a != b) {
    throw RouteMismatch("Q_" + std::to_string(p_) + "(" + std::to_string(n) +
                            "): alpha sum " + to_decimal(a) +
                            " vs closed form " + to_decimal(b),
                        n);
  }
  return a;
}

BigInt q_poly_sum(unsigned p, std::size_t n) { return QPoly(p).sum_route(n); }

BigInt q_poly(unsigned p, std::size_t n) { return QPoly(p)(n); }

// --- BCI(p) --------------------------------------------------------------

std::vector<BigInt> bci_phi(unsigned p, std::size_t j_max) {
  if (p < 1 || j_max < 1) throw DomainError("bci: need p >= 1 and j_max >= 1");
  const QPoly q(p);
  std::vector<BigInt> phi(j_max + 1);
  phi[1] = catalan(p - 1);
  for (std::size_t j = 2; j <= j_max; ++j) {
    BigInt acc = q(j - 1) * phi[j - 1];
    for (std::size_t l = 1; 2 * l < j; ++l) {
      BigInt prod = phi[l] * phi[j - l];
      acc += prod;
      acc += prod;
    }
    if (j % 2 == 0) {
      mpz_addmul(acc.get_mpz_t(), phi[j / 2].get_mpz_t(), phi[j / 2].get_mpz_t());
    }
    phi[j] = std::move(acc);
  }
  return phi;
}

namespace {

CountTable spread_over_support(Family family, std::string route, unsigned p,
                               const std::vector<BigInt>& by_j) {
  CountTable table(family, std::move(route));
  const std::size_t stride = 2 * p + 1;
  for (std::size_t j = 1; j < by_j.size(); ++j) {
    table.pad_to(stride * j - 2);
    table.append(by_j[j]);
  }
  if (table.empty()) table.pad_to(0);
  return table;
}

}  // namespace

CountTable bci_counts(unsigned p, std::size_t j_max) {
  return spread_over_support(Family::bci(p), "phi-recurrence", p,
                             bci_phi(p, j_max));
}

std::vector<BigInt> linearized_phi(unsigned p, std::size_t j_max) {
  if (p < 1 || j_max < 1) {
    throw DomainError("linearized: need p >= 1 and j_max >= 1");
  }
  const QPoly q(p);
  std::vector<BigInt> ell(j_max + 1);
  ell[1] = catalan(p - 1);
  for (std::size_t j = 2; j <= j_max; ++j) ell[j] = q(j - 1) * ell[j - 1];
  return ell;
}

CountTable linearized_counts(unsigned p, std::size_t j_max) {
  return spread_over_support(Family::bci_linearized(p), "Q-product", p,
                             linearized_phi(p, j_max));
}

Series<BigInt> delta_apply_coefficients(unsigned p, const Series<BigInt>& a) {
  const QPoly q(p);
  const auto& alpha_row = q.alpha_row();
  Series<BigInt> r(a.order());
  const std::size_t shift = 2 * p + 1;
  for (std::size_t n = shift; n <= a.order(); ++n) {
    const std::size_t k = n - shift;
    if (sgn(a[k]) == 0) continue;
    BigInt weight;
    for (unsigned l = 1; l <= p; ++l) {
      weight += alpha_row[l] * binomial(static_cast<std::int64_t>(k), l);
    }
    r[n] = weight * a[k];
  }
  return r;
}

Series<BigInt> delta_apply_bivariate(unsigned p, const Series<BigInt>& a) {
  if (p < 1) throw DomainError("Delta_p: p must be >= 1");
  // a(z f(u)) with f(u) = 1/sqrt(1-4u).
  const auto f = BivarSeries<BigInt>::from_u_series(inverse_sqrt_power(1, p),
                                                    a.order());
  const auto composed = bivar_compose_scaled(a, bivar_powers(f, a.order()));
  return shift_up(bivar_extract_u(composed, p), 2 * p + 1);
}

Series<BigInt> delta_apply(unsigned p, const Series<BigInt>& a) {
  Series<BigInt> by_coeffs = delta_apply_coefficients(p, a);
  Series<BigInt> by_bivar = delta_apply_bivariate(p, a);
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (by_coeffs[n] != by_bivar[n]) {
      throw RouteMismatch("Delta_" + std::to_string(p) +
                              ": coefficient route and bivariate route differ",
                          n);
    }
  }
  return by_coeffs;
}

}  // namespace lambdacount
