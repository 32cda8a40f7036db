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

#include "lambdacount/family.hpp"

namespace lambdacount {

// Counts for `family` at indices 0..max_size, through the family's primary
// route. Sparse families are zero-padded to max_size. With `resume`, the
// closed-term table only computes indices beyond resume->extent(); other
// families recompute and must agree with `resume` (RouteMismatch if not).
CountTable compute_table(const Family& family, std::size_t max_size,
                         const CountTable* resume = nullptr);

}  // namespace lambdacount
