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

#include "lambdacount/delta.hpp"

#include <sstream>

#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"
#include "lambdacount/series.hpp"

namespace lambdacount {

namespace {

Series<BigInt> two_z_motzkin(std::size_t order) {
  const auto m = motzkin_numbers(order);
  Series<BigInt> base(order);
  for (std::size_t s = 2; s <= order; ++s) base[s] = 2 * m[s - 1];
  return base;
}

std::vector<BigInt> factorials(std::size_t n_max) {
  std::vector<BigInt> f(n_max + 1);
  f[0] = 1;
  for (std::size_t i = 1; i <= n_max; ++i) f[i] = f[i - 1] * static_cast<unsigned long>(i);
  return f;
}

// Row entry with the convention delta_{m,l} = 0 outside 1 <= l <= m-1.
const BigInt& row_entry(const std::vector<BigInt>& row, std::size_t m,
                        std::size_t l) {
  static const BigInt kZero;
  return (l >= 1 && l + 1 <= m) ? row[l] : kZero;
}

void check_delta_args(std::size_t n, std::size_t l) {
  if (l < 1 || l + 1 > n) {
    throw DomainError("delta_{" + std::to_string(n) + "," + std::to_string(l) +
                      "}: need 1 <= l <= n-1");
  }
}

}  // namespace

BigInt zeta_lagrange(std::size_t s, std::size_t r) {
  if (r == 0) return BigInt(s == 0 ? 1 : 0);
  if (s < 2 * r) return BigInt(0);
  const std::size_t total = s - r;  // nodes of the Motzkin forest
  const std::size_t spare = s - 2 * r;  // b + 2c
  const auto fact = factorials(total);
  BigInt sum;
  for (std::size_t c = 0; 2 * c <= spare; ++c) {
    const std::size_t b = spare - 2 * c;
    if (b + c > total) continue;
    const std::size_t a = total - b - c;
    sum += fact[total] / (fact[a] * fact[b] * fact[c]);
  }
  BigInt numer = power(BigInt(2), r) * static_cast<unsigned long>(r) * sum;
  return exact_divide(numer, BigInt(static_cast<unsigned long>(total)),
                      "zeta Lagrange sum");
}

BigInt zeta_series(std::size_t s, std::size_t r) {
  const Series<BigInt> base = two_z_motzkin(s);
  Series<BigInt> acc = Series<BigInt>::monomial(0, BigInt(1), s);
  for (std::size_t i = 0; i < r; ++i) acc = acc * base;
  return acc[s];
}

BigInt zeta(std::size_t s, std::size_t r) {
  BigInt a = zeta_lagrange(s, r);
  BigInt b = zeta_series(s, r);
  if (a != b) {
    throw RouteMismatch("zeta_{" + std::to_string(s) + "," + std::to_string(r) +
                            "}: Lagrange " + to_decimal(a) + " vs series " +
                            to_decimal(b),
                        s);
  }
  return a;
}

ZetaTable::ZetaTable(std::size_t s_max) : s_max_(s_max) {
  const Series<BigInt> base = two_z_motzkin(s_max);
  Series<BigInt> acc = Series<BigInt>::monomial(0, BigInt(1), s_max);
  for (std::size_t r = 0; 2 * r <= s_max; ++r) {
    by_r_.push_back(acc.coefficients());
    acc = acc * base;
  }
}

BigInt ZetaTable::operator()(std::size_t s, std::size_t r) const {
  if (s > s_max_) throw DomainError("ZetaTable: s beyond table");
  if (r >= by_r_.size()) return BigInt(0);
  return by_r_[r][s];
}

BigInt delta_direct(std::size_t n, std::size_t l, std::optional<unsigned> p_cap) {
  check_delta_args(n, l);
  const std::size_t s = n - l - 1;
  std::size_t t_max = s / 2;
  if (p_cap) t_max = std::min<std::size_t>(t_max, *p_cap);
  const auto fact = factorials(n + l);
  BigRational sum;
  for (std::size_t t = 1; t <= t_max; ++t) {
    for (std::size_t r = 1; r <= t; ++r) {
      // r 2^r binom(l-1+r, r) (n-l-2-r)! / (t! (t-r)! (n-l-1-2t)!)
      BigInt numer = static_cast<unsigned long>(r) * power(BigInt(2), r) *
                     binomial(static_cast<std::int64_t>(l - 1 + r),
                              static_cast<std::int64_t>(r)) *
                     fact[s - 1 - r];
      BigInt denom = fact[t] * fact[t - r] * fact[s - 2 * t];
      sum += ratio(numer, denom);
    }
  }
  BigInt value = require_integer(sum, "delta_direct");
  if (l + 1 == n) value += 1;  // r = 0: zeta_{0,0} = 1
  return value;
}

BigInt delta_by_zeta(std::size_t n, std::size_t l) {
  check_delta_args(n, l);
  const std::size_t s = n - l - 1;
  const ZetaTable zt(s);
  BigInt sum;
  for (std::size_t r = 0; 2 * r <= s; ++r) {
    sum += binomial(static_cast<std::int64_t>(l - 1 + r),
                    static_cast<std::int64_t>(l - 1)) *
           zt(s, r);
  }
  return sum;
}

BigInt delta_inner_b(std::size_t n, std::size_t l, std::size_t t) {
  if (l < 1 || n < l + 1 + 2 * t) return BigInt(0);
  const std::size_t s = n - l - 1;
  const auto fact = factorials(n + l);
  BigRational sum;
  for (std::size_t r = 1; r <= t; ++r) {
    BigInt numer = static_cast<unsigned long>(r) * power(BigInt(2), r) *
                   binomial(static_cast<std::int64_t>(l - 1 + r),
                            static_cast<std::int64_t>(r)) *
                   fact[s - 1 - r];
    BigInt denom = fact[t] * fact[t - r] * fact[s - 2 * t];
    sum += ratio(numer, denom);
  }
  return require_integer(sum, "b_{n,l,t}");
}

DeltaRowGenerator::DeltaRowGenerator() = default;

const std::vector<BigInt>& DeltaRowGenerator::next() {
  const std::size_t n = next_n_;
  std::vector<BigInt> fresh(n);
  if (n >= 4) {
    const long np = static_cast<long>(n) - 2;  // recurrence written at n' = n - 2
    for (long l = 1; l <= np - 1; ++l) {
      const auto ul = static_cast<std::size_t>(l);
      BigInt acc;
      mpz_mul_si(acc.get_mpz_t(), row_entry(newer_, n - 1, ul).get_mpz_t(),
                 (np - l) * (2 * np - l));
      mpz_submul_ui(acc.get_mpz_t(), row_entry(newer_, n - 1, ul + 1).get_mpz_t(),
                    static_cast<unsigned long>(l * (np - 1)));
      mpz_submul_ui(acc.get_mpz_t(), row_entry(older_, n - 2, ul + 1).get_mpz_t(),
                    static_cast<unsigned long>(4 * l * (np - 1)));
      mpz_addmul_ui(acc.get_mpz_t(), row_entry(older_, n - 2, ul).get_mpz_t(),
                    static_cast<unsigned long>((np - 1) * (3 * np - 2 * l + 1)));
      const auto lead = static_cast<unsigned long>((np - l) * (np - l + 1));
      if (!mpz_divisible_ui_p(acc.get_mpz_t(), lead)) {
        throw IntegralityError("delta recurrence: non-integral value at (" +
                               std::to_string(n) + "," + std::to_string(l) + ")");
      }
      mpz_divexact_ui(fresh[ul].get_mpz_t(), acc.get_mpz_t(), lead);
    }
  }
  // fresh[n-2] stays 0 (zeta_{1,r} = 0); fresh[n-1] = 1 (zeta_{0,0}).
  fresh[n - 1] = 1;
  older_ = std::move(newer_);
  newer_ = std::move(fresh);
  ++next_n_;
  return newer_;
}

std::string DeltaValidation::summary() const {
  std::ostringstream os;
  if (ok) {
    os << "delta_fast validated against delta_direct on all " << values_checked
       << " values with n <= " << n_max;
  } else {
    os << "delta_fast DISABLED";
    if (first_mismatch) {
      os << ": first disagreement with delta_direct at (n,l) = ("
         << first_mismatch->first << "," << first_mismatch->second << ")";
    }
    if (companion_failure) {
      os << "; companion recurrence fails at (n,l) = ("
         << companion_failure->first << "," << companion_failure->second << ")";
    }
  }
  return os.str();
}

DeltaValidation validate_delta_fast(std::size_t n_max) {
  DeltaValidation v;
  v.n_max = n_max;
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  try {
    DeltaRowGenerator gen;
    for (std::size_t n = 2; n <= n_max; ++n) rows[n] = gen.next();
  } catch (const IntegralityError&) {
    v.first_mismatch = std::make_pair(std::size_t{0}, std::size_t{0});
    return v;
  }
  for (std::size_t n = 2; n <= n_max && !v.first_mismatch; ++n) {
    for (std::size_t l = 1; l + 1 <= n; ++l) {
      ++v.values_checked;
      if (rows[n][l] != delta_direct(n, l)) {
        v.first_mismatch = std::make_pair(n, l);
        break;
      }
    }
  }
  // Companion recurrence, mixed shifts:
  //   (n-l)(n+1-l)(n-2l-2) d_{n+2,l} - (n-l)(2n^2-6nl-5n+2l^2+3l+1) d_{n+1,l}
  //   - (n-1)(3n^2-2nl+n-l^2-9l-8) d_{n,l} + 20(n-1)l(l+1) d_{n,l+2}
  //   + 2(n-1)(5n-9l-12) l d_{n,l+1} = 0
  auto d = [&](std::size_t m, std::size_t l) -> BigInt {
    if (m >= rows.size() || m < 2) return BigInt(0);
    return row_entry(rows[m], m, l);
  };
  for (std::size_t un = 1; un + 2 <= n_max && !v.companion_failure; ++un) {
    for (std::size_t ul = 1; ul + 2 <= n_max && ul <= un + 1; ++ul) {
      const long n = static_cast<long>(un);
      const long l = static_cast<long>(ul);
      BigInt res = BigInt((n - l) * (n + 1 - l) * (n - 2 * l - 2)) * d(un + 2, ul) -
                   BigInt((n - l) * (2 * n * n - 6 * n * l - 5 * n + 2 * l * l + 3 * l + 1)) *
                       d(un + 1, ul) -
                   BigInt((n - 1) * (3 * n * n - 2 * n * l + n - l * l - 9 * l - 8)) *
                       d(un, ul) +
                   BigInt(20 * (n - 1) * l * (l + 1)) * d(un, ul + 2) +
                   BigInt(2 * (n - 1) * (5 * n - 9 * l - 12) * l) * d(un, ul + 1);
      if (sgn(res) != 0) {
        v.companion_failure = std::make_pair(un, ul);
        break;
      }
    }
  }
  v.ok = !v.first_mismatch && !v.companion_failure;
  return v;
}

const DeltaValidation& delta_fast_status() {
  static const DeltaValidation status = validate_delta_fast(60);
  return status;
}

BigInt delta_fast(std::size_t n, std::size_t l) {
  check_delta_args(n, l);
  const auto& status = delta_fast_status();
  if (!status.ok) throw DeltaFastDisabled(status.summary());
  DeltaRowGenerator gen;
  while (gen.next_n() < n) gen.next();
  return gen.next()[l];
}

BSystemReport validate_b_system(std::size_t n_max) {
  BSystemReport rep;
  auto b = [](long n, long l, long t) -> BigInt {
    if (n < 0 || l < 1 || t < 0) return BigInt(0);
    return delta_inner_b(static_cast<std::size_t>(n), static_cast<std::size_t>(l),
                         static_cast<std::size_t>(t));
  };
  for (long n = 3; n + 1 <= static_cast<long>(n_max); ++n) {
    for (long l = 1; l <= n - 1; ++l) {
      for (long t = 0; 2 * t <= n - l - 1; ++t) {
        ++rep.triples_checked;
        BigInt first =
            BigInt(-l * l - 2 * n * t - 2 * l * t - l - n + n * n) * b(n, l, t) +
            BigInt(2 * l * t - 2 * n * l + 2 * l * l + 4 * l) * b(n, l + 1, t) +
            BigInt(-4 * t * t - 2 * t + 4 * n * t - 4 * l * t - n * n + 2 * n * l -
                   l + n - l * l) *
                b(n + 1, l, t);
        BigInt second =
            BigInt((2 * n - t - 2) * (n - l - 2 * t - 2) * (n - l - 2 * t - 1)) *
                b(n, l, t) -
            BigInt(t * (t + 1) * (n - l - t - 2)) * b(n, l, t + 1) -
            BigInt((n - l - 2 * t - 2) * (n - l - 2 * t - 1) * (n - l - 2 * t)) *
                b(n + 1, l, t);
        if (sgn(first) != 0 || sgn(second) != 0) {
          rep.first_failure = "(n,l,t) = (" + std::to_string(n) + "," +
                              std::to_string(l) + "," + std::to_string(t) + ")" +
                              (sgn(first) != 0 ? " first" : " second") +
                              " recurrence";
          return rep;
        }
      }
    }
  }
  rep.ok = true;
  return rep;
}

DeltaCache::DeltaCache(std::size_t n_max, std::optional<unsigned> p_cap)
    : n_max_(n_max), p_cap_(p_cap), rows_(n_max + 1) {
  if (p_cap) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      rows_[n].resize(n);
      for (std::size_t l = 1; l + 1 <= n; ++l) rows_[n][l] = delta_direct(n, l, p_cap);
    }
    return;
  }
  const ZetaTable zt(n_max >= 2 ? n_max - 2 : 0);
  for (std::size_t n = 2; n <= n_max; ++n) {
    rows_[n].resize(n);
    for (std::size_t l = 1; l + 1 <= n; ++l) {
      const std::size_t s = n - l - 1;
      BigInt sum;
      for (std::size_t r = 0; 2 * r <= s; ++r) {
        sum += binomial(static_cast<std::int64_t>(l - 1 + r),
                        static_cast<std::int64_t>(l - 1)) *
               zt(s, r);
      }
      rows_[n][l] = std::move(sum);
    }
  }
}

const BigInt& DeltaCache::operator()(std::size_t n, std::size_t l) const {
  check_delta_args(n, l);
  if (n > n_max_) throw DomainError("DeltaCache: n beyond cache");
  return rows_[n][l];
}

}  // namespace lambdacount
