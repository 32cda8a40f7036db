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

#include <string>

#include "json.hpp"

#include "lambdacount/terms.hpp"

namespace lambdacount {

// (lam 1), (app (lam 1) (lam 1)), variables as de Bruijn indices.
std::string render_sexpr(const LambdaTermDB& t);
// (\x1. x1), ((\x1. (x1 x1)) (\x2. x2)); binders named x1, x2, ... in
// abstraction (preorder) order.
std::string render_named(const LambdaTermDB& t);
// {"type": "abs", "body": ...}, {"type": "app", "left": ..., "right": ...},
// {"type": "var", "index": k}.
nlohmann::json render_json(const LambdaTermDB& t);
// Solid tree edges, dashed pointer edges from each leaf to its binder.
std::string render_dot(const EnrichedTree& t);

}  // namespace lambdacount
