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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lambdacount {

// Exact unbounded integers and rationals. mpq_class is kept canonical by
// every arithmetic operation (reduced, positive denominator).
using BigInt = mpz_class;
using BigRational = mpq_class;

// binom(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::uint64_t n);
BigInt power(const BigInt& base, std::uint64_t exponent);

// Rows 0..n_max of Pascal's triangle, row[n][k] = binom(n, k).
std::vector<std::vector<BigInt>> pascal_triangle(std::size_t n_max);

std::string to_decimal(const BigInt& x);
// Throws DomainError on anything but an optional '-' followed by digits.
BigInt from_decimal(std::string_view text);

// Natural logarithm of a positive integer of any magnitude.
double log_of(const BigInt& x);
// Natural logarithm of a positive rational of any magnitude.
double log_of(const BigRational& x);
double to_double(const BigRational& x);

// num / den in canonical form. DomainError if den == 0.
BigRational ratio(const BigInt& num, const BigInt& den);

// Returns the numerator of q when q is an integer, otherwise throws
// IntegralityError mentioning `what`.
BigInt require_integer(const BigRational& q, std::string_view what);

// a / b when b divides a exactly; IntegralityError otherwise.
BigInt exact_divide(const BigInt& a, const BigInt& b, std::string_view what);

}  // namespace lambdacount
