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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lambdacount/bigint.hpp"
#include "lambdacount/error.hpp"

namespace lambdacount {

// Truncated power series c_0 + c_1 z + ... + c_N z^N with exact
// coefficients. The truncation order N travels with the value; binary
// operations return a series truncated to the smaller of the two orders.
template <typename T>
class Series {
 public:
  using value_type = T;

  explicit Series(std::size_t order = 0) : coeffs_(order + 1) {}

  // Pads with zeros (or drops coefficients) to exactly `order`.
  Series(std::vector<T> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static Series monomial(std::size_t k, T c, std::size_t order) {
    Series s(order);
    if (k <= order) s.coeffs_[k] = std::move(c);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const T& operator[](std::size_t n) const { return coeffs_.at(check(n)); }
  T& operator[](std::size_t n) { return coeffs_.at(check(n)); }

  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  Series truncated(std::size_t order) const {
    return Series(coeffs_, std::min(order, this->order()));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const T& c) { return sgn(c) == 0; });
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }

  Series& operator+=(const Series& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  Series& operator-=(const Series& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }

 private:
  std::size_t check(std::size_t n) const {
    if (n >= coeffs_.size()) {
      throw DomainError("series coefficient " + std::to_string(n) +
                        " requested beyond truncation order " +
                        std::to_string(order()));
    }
    return n;
  }

  std::vector<T> coeffs_;
};

template <typename T>
Series<T> operator+(Series<T> a, const Series<T>& b) {
  a += b;
  return a;
}

template <typename T>
Series<T> operator-(Series<T> a, const Series<T>& b) {
  a -= b;
  return a;
}

// Cauchy product truncated to min(N_a, N_b).
template <typename T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series<T> c(order);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (sgn(bc[j]) == 0) continue;
      c[i + j] += ac[i] * bc[j];
    }
  }
  return c;
}

template <typename T>
Series<T> operator*(const Series<T>& a, const Series<T>& b) {
  return series_mul(a, b);
}

template <typename T>
Series<T> scale(Series<T> a, const T& factor) {
  for (std::size_t i = 0; i <= a.order(); ++i) a[i] *= factor;
  return a;
}

// z^k a(z); coefficients pushed past the order are dropped.
template <typename T>
Series<T> shift_up(const Series<T>& a, std::size_t k) {
  Series<T> r(a.order());
  for (std::size_t i = 0; i + k <= a.order(); ++i) r[i + k] = a[i];
  return r;
}

// b(z) = a(z/(1-z)) truncated at `order`:
// b_n = sum_{k=1}^{n} binom(n-1, k-1) a_k.
template <typename T>
Series<T> series_compose_geom(const Series<T>& a, std::size_t order) {
  if (sgn(a[0]) != 0) {
    throw DomainError("series_compose_geom: constant term must be zero");
  }
  Series<T> b(order);
  std::vector<BigInt> row{1};  // binom(n-1, .)
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n && k <= a.order(); ++k) {
      if (sgn(a[k]) == 0) continue;
      b[n] += T(row[k - 1]) * a[k];
    }
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return b;
}

// b(z) = a(z/(1+z)), the inverse of series_compose_geom:
// b_n = sum_{k=1}^{n} (-1)^{n-k} binom(n-1, k-1) a_k.
template <typename T>
Series<T> series_compose_geom_inverse(const Series<T>& a, std::size_t order) {
  if (sgn(a[0]) != 0) {
    throw DomainError("series_compose_geom_inverse: constant term must be zero");
  }
  Series<T> b(order);
  std::vector<BigInt> row{1};
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n && k <= a.order(); ++k) {
      if (sgn(a[k]) == 0) continue;
      T term = T(row[k - 1]) * a[k];
      if ((n - k) % 2 == 0) {
        b[n] += term;
      } else {
        b[n] -= term;
      }
    }
    std::vector<BigInt> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return b;
}

// top (top-1) ... (top-k+1) / k!, exact.
BigRational gen_binomial(const BigRational& top, std::size_t k);

// Coefficients of (1-4x)^{-e/2} for x^0..x^order, e >= 0, via gen_binomial:
// [x^m] = 4^m binom(m + e/2 - 1, m). Always integers.
Series<BigInt> inverse_sqrt_power(std::size_t e, std::size_t order);

// Asserts every coefficient is an integer.
Series<BigInt> to_integer_series(const Series<BigRational>& a,
                                 std::string_view what);

// Truncated bivariate series sum c_{i,j} z^i u^j, 0 <= i <= N_z,
// 0 <= j <= N_u. Binary operations truncate to the smaller rectangle.
template <typename T>
class BivarSeries {
 public:
  BivarSeries(std::size_t order_z, std::size_t order_u)
      : order_z_(order_z), order_u_(order_u),
        grid_((order_z + 1) * (order_u + 1)) {}

  // a(z) regarded as constant in u.
  static BivarSeries from_z_series(const Series<T>& a, std::size_t order_u) {
    BivarSeries r(a.order(), order_u);
    for (std::size_t i = 0; i <= a.order(); ++i) r(i, 0) = a[i];
    return r;
  }

  // a(u) regarded as constant in z.
  static BivarSeries from_u_series(const Series<T>& a, std::size_t order_z) {
    BivarSeries r(order_z, a.order());
    for (std::size_t j = 0; j <= a.order(); ++j) r(0, j) = a[j];
    return r;
  }

  std::size_t order_z() const noexcept { return order_z_; }
  std::size_t order_u() const noexcept { return order_u_; }

  const T& operator()(std::size_t i, std::size_t j) const {
    return grid_[index(i, j)];
  }
  T& operator()(std::size_t i, std::size_t j) { return grid_[index(i, j)]; }

  friend bool operator==(const BivarSeries& a, const BivarSeries& b) {
    return a.order_z_ == b.order_z_ && a.order_u_ == b.order_u_ &&
           a.grid_ == b.grid_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > order_z_ || j > order_u_) {
      throw DomainError("bivariate coefficient (" + std::to_string(i) + "," +
                        std::to_string(j) + ") beyond truncation (" +
                        std::to_string(order_z_) + "," +
                        std::to_string(order_u_) + ")");
    }
    return i * (order_u_ + 1) + j;
  }

  std::size_t order_z_;
  std::size_t order_u_;
  std::vector<T> grid_;
};

template <typename T>
BivarSeries<T> operator+(const BivarSeries<T>& a, const BivarSeries<T>& b) {
  const std::size_t nz = std::min(a.order_z(), b.order_z());
  const std::size_t nu = std::min(a.order_u(), b.order_u());
  BivarSeries<T> r(nz, nu);
  for (std::size_t i = 0; i <= nz; ++i)
    for (std::size_t j = 0; j <= nu; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

template <typename T>
BivarSeries<T> bivar_mul(const BivarSeries<T>& a, const BivarSeries<T>& b) {
  const std::size_t nz = std::min(a.order_z(), b.order_z());
  const std::size_t nu = std::min(a.order_u(), b.order_u());
  BivarSeries<T> r(nz, nu);
  for (std::size_t i1 = 0; i1 <= nz; ++i1) {
    for (std::size_t j1 = 0; j1 <= nu; ++j1) {
      const T& x = a(i1, j1);
      if (sgn(x) == 0) continue;
      for (std::size_t i2 = 0; i1 + i2 <= nz; ++i2) {
        for (std::size_t j2 = 0; j1 + j2 <= nu; ++j2) {
          const T& y = b(i2, j2);
          if (sgn(y) == 0) continue;
          r(i1 + i2, j1 + j2) += x * y;
        }
      }
    }
  }
  return r;
}

template <typename T>
BivarSeries<T> operator*(const BivarSeries<T>& a, const BivarSeries<T>& b) {
  return bivar_mul(a, b);
}

// [u^p] a(z, u) as a series in z.
template <typename T>
Series<T> bivar_extract_u(const BivarSeries<T>& a, std::size_t p) {
  if (p > a.order_u()) {
    throw DomainError("bivar_extract_u: u^" + std::to_string(p) +
                      " beyond truncation order " + std::to_string(a.order_u()));
  }
  Series<T> r(a.order_z());
  for (std::size_t i = 0; i <= a.order_z(); ++i) r[i] = a(i, p);
  return r;
}

// a(z, u) / (1 - u): prefix sums along u.
template <typename T>
BivarSeries<T> bivar_div_one_minus_u(const BivarSeries<T>& a) {
  BivarSeries<T> r = a;
  for (std::size_t i = 0; i <= a.order_z(); ++i)
    for (std::size_t j = 1; j <= a.order_u(); ++j) r(i, j) += r(i, j - 1);
  return r;
}

// 1 / (1 - x(z, u)) for x with no z^0 terms.
template <typename T>
BivarSeries<T> bivar_inverse_one_minus(const BivarSeries<T>& x) {
  for (std::size_t j = 0; j <= x.order_u(); ++j) {
    if (sgn(x(0, j)) != 0) {
      throw DomainError("bivar_inverse_one_minus: x must vanish at z = 0");
    }
  }
  const std::size_t nz = x.order_z();
  const std::size_t nu = x.order_u();
  BivarSeries<T> w(nz, nu);
  w(0, 0) = 1;
  // w = 1 + x w, solved slice by slice in z.
  for (std::size_t n = 1; n <= nz; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j1 = 0; j1 <= nu; ++j1) {
        if (sgn(x(i, j1)) == 0) continue;
        for (std::size_t j2 = 0; j1 + j2 <= nu; ++j2) {
          w(n, j1 + j2) += x(i, j1) * w(n - i, j2);
        }
      }
    }
  }
  return w;
}

// Powers w^0, w^1, ..., w^k_max of a bivariate series.
template <typename T>
std::vector<BivarSeries<T>> bivar_powers(const BivarSeries<T>& w,
                                         std::size_t k_max) {
  std::vector<BivarSeries<T>> powers;
  powers.reserve(k_max + 1);
  BivarSeries<T> one(w.order_z(), w.order_u());
  one(0, 0) = 1;
  powers.push_back(std::move(one));
  for (std::size_t k = 1; k <= k_max; ++k) powers.push_back(powers.back() * w);
  return powers;
}

// sum_k f_k z^k w(z,u)^k given precomputed powers of w, i.e. f(z w(z, u)).
template <typename T>
BivarSeries<T> bivar_compose_scaled(const Series<T>& f,
                                    const std::vector<BivarSeries<T>>& w_powers) {
  if (w_powers.empty()) throw DomainError("bivar_compose_scaled: no powers");
  const std::size_t nz = std::min(f.order(), w_powers.front().order_z());
  const std::size_t nu = w_powers.front().order_u();
  BivarSeries<T> r(nz, nu);
  for (std::size_t k = 0; k <= nz; ++k) {
    if (sgn(f[k]) == 0) continue;
    if (k >= w_powers.size()) {
      throw DomainError("bivar_compose_scaled: not enough powers of w");
    }
    const auto& wk = w_powers[k];
    for (std::size_t i = 0; i + k <= nz; ++i)
      for (std::size_t j = 0; j <= nu; ++j)
        if (sgn(wk(i, j)) != 0) r(i + k, j) += f[k] * wk(i, j);
  }
  return r;
}

}  // namespace lambdacount
