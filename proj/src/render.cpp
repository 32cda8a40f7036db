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

#include "lambdacount/render.hpp"

#include <sstream>
#include <vector>

namespace lambdacount {

namespace {

// Recursive descent over prefix tokens; `pos` advances past the subterm.
void sexpr_at(const std::vector<std::int32_t>& tok, std::size_t& pos, std::string& out) {
  const std::int32_t t = tok[pos++];
  if (t >= 1) {
    out += std::to_string(t);
  } else if (t == LambdaTermDB::kAbs) {
    out += "(lam ";
    sexpr_at(tok, pos, out);
    out += ')';
  } else {
    out += "(app ";
    sexpr_at(tok, pos, out);
    out += ' ';
    sexpr_at(tok, pos, out);
    out += ')';
  }
}

void named_at(const std::vector<std::int32_t>& tok, std::size_t& pos,
              std::vector<std::size_t>& scope, std::size_t& fresh, std::string& out) {
  const std::int32_t t = tok[pos++];
  if (t >= 1) {
    const auto idx = static_cast<std::size_t>(t);
    if (idx <= scope.size()) {
      out += 'x' + std::to_string(scope[scope.size() - idx]);
    } else {
      out += "free" + std::to_string(idx - scope.size());
    }
  } else if (t == LambdaTermDB::kAbs) {
    scope.push_back(++fresh);
    out += "(\\x" + std::to_string(scope.back()) + ". ";
    named_at(tok, pos, scope, fresh, out);
    out += ')';
    scope.pop_back();
  } else {
    out += '(';
    named_at(tok, pos, scope, fresh, out);
    out += ' ';
    named_at(tok, pos, scope, fresh, out);
    out += ')';
  }
}

nlohmann::json json_at(const std::vector<std::int32_t>& tok, std::size_t& pos) {
  const std::int32_t t = tok[pos++];
  if (t >= 1) return {{"type", "var"}, {"index", t}};
  if (t == LambdaTermDB::kAbs) return {{"type", "abs"}, {"body", json_at(tok, pos)}};
  nlohmann::json left = json_at(tok, pos);
  nlohmann::json right = json_at(tok, pos);
  return {{"type", "app"}, {"left", std::move(left)}, {"right", std::move(right)}};
}

}  // namespace

std::string render_sexpr(const LambdaTermDB& t) {
  std::string out;
  std::size_t pos = 0;
  sexpr_at(t.tokens(), pos, out);
  return out;
}

std::string render_named(const LambdaTermDB& t) {
  std::string out;
  std::size_t pos = 0;
  std::size_t fresh = 0;
  std::vector<std::size_t> scope;
  named_at(t.tokens(), pos, scope, fresh, out);
  return out;
}

nlohmann::json render_json(const LambdaTermDB& t) {
  std::size_t pos = 0;
  return json_at(t.tokens(), pos);
}

std::string render_dot(const EnrichedTree& t) {
  std::ostringstream os;
  os << "digraph term {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const char* label = t[i].kind == NodeKind::kUnary    ? "&lambda;"
                        : t[i].kind == NodeKind::kBinary ? "@"
                                                         : "";
    const char* shape = t[i].kind == NodeKind::kLeaf ? ", shape=point, width=0.12" : "";
    os << "  n" << i << " [label=\"" << label << "\"" << shape << "];\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t c : t.children(i)) os << "  n" << i << " -> n" << c << ";\n";
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind != NodeKind::kLeaf) continue;
    os << "  n" << i << " -> n" << t[i].binder
       << " [style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace lambdacount
