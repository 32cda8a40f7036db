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

#include "lambdacount/series.hpp"

namespace lambdacount {

BigRational gen_binomial(const BigRational& top, std::size_t k) {
  BigRational r(1);
  BigRational factor = top;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= factor;
    r /= BigRational(static_cast<unsigned long>(i));
    factor -= 1;
  }
  return r;
}

Series<BigInt> inverse_sqrt_power(std::size_t e, std::size_t order) {
  Series<BigInt> s(order);
  BigInt four_m = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    // m + e/2 - 1 as a rational.
    BigRational top(static_cast<long>(2 * m + e) - 2, 2);
    top.canonicalize();
    s[m] = require_integer(BigRational(four_m) * gen_binomial(top, m),
                           "inverse_sqrt_power");
    four_m *= 4;
  }
  return s;
}

Series<BigInt> to_integer_series(const Series<BigRational>& a,
                                 std::string_view what) {
  Series<BigInt> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = require_integer(a[i], what);
  return r;
}

}  // namespace lambdacount
