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

#include "lambdacount/cache.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "json.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/table_builder.hpp"

namespace lambdacount {

using nlohmann::json;

const CacheEntry* CacheFile::find(const Family& family) const {
  for (const auto& e : entries) {
    if (e.table.family() == family) return &e;
  }
  return nullptr;
}

void CacheFile::put(CountTable table) {
  for (auto& e : entries) {
    if (e.table.family() == table.family()) {
      e.table = std::move(table);
      e.tool_version = kToolVersion;
      return;
    }
  }
  entries.push_back({std::move(table), kToolVersion});
}

namespace {

json entry_to_json(const CacheEntry& e) {
  json indices = json::array();
  json values = json::array();
  for (std::size_t i = 0; i < e.table.size(); ++i) {
    indices.push_back(i);
    values.push_back(to_decimal(e.table.at(i)));
  }
  const Family& f = e.table.family();
  return {{"family", f.tag()},
          {"p", f.p ? json(*f.p) : json(nullptr)},
          {"route", e.table.route()},
          {"tool_version", e.tool_version},
          {"indices", std::move(indices)},
          {"values", std::move(values)}};
}

CacheEntry entry_from_json(const json& j, std::size_t position) {
  const std::string where = "cache entry " + std::to_string(position);
  try {
    std::optional<unsigned> p;
    if (!j.at("p").is_null()) p = j.at("p").get<unsigned>();
    const Family family = Family::parse(j.at("family").get<std::string>(), p);
    CountTable table(family, j.at("route").get<std::string>());
    const auto& indices = j.at("indices");
    const auto& values = j.at("values");
    if (!indices.is_array() || !values.is_array() || indices.size() != values.size()) {
      throw CacheError(where + ": indices and values differ in length");
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i].get<std::size_t>() != i) {
        throw CacheError(where + ": indices are not contiguous from 0");
      }
      table.append(from_decimal(values[i].get<std::string>()));
    }
    return {std::move(table), j.at("tool_version").get<std::string>()};
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& ex) {
    throw CacheError(where + " is malformed: " + ex.what());
  }
}

}  // namespace

void cache_store(const std::filesystem::path& path, const CacheFile& cache) {
  json doc = {{"format_version", cache.format_version}, {"entries", json::array()}};
  for (const auto& e : cache.entries) doc["entries"].push_back(entry_to_json(e));

  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << doc.dump() << '\n';
    out.flush();
    if (!out) throw CacheError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw CacheError("cannot replace " + path.string() + ": " + ec.message());
  }
}

CacheFile cache_load(const std::filesystem::path& path, const CacheLoadOptions& options) {
  CacheFile cache;
  if (!std::filesystem::exists(path)) return cache;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& ex) {
    throw CacheError(path.string() + " is not valid JSON: " + ex.what());
  }
  if (!doc.is_object() || !doc.contains("format_version") ||
      !doc["format_version"].is_number_integer()) {
    throw CacheError(path.string() + " has no format_version");
  }
  const int version = doc["format_version"].get<int>();
  if (version != kCacheFormatVersion) {
    throw CacheError(path.string() + " has format_version " + std::to_string(version) +
                     "; this build reads version " + std::to_string(kCacheFormatVersion));
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw CacheError(path.string() + " has no entries array");
  }
  std::size_t position = 0;
  for (const auto& j : doc["entries"]) {
    cache.entries.push_back(entry_from_json(j, position++));
  }
  if (options.spot_check) {
    for (const auto& e : cache.entries) spot_check(e.table, options.seed, options.fraction);
  }
  return cache;
}

void spot_check(const CountTable& table, std::uint64_t seed, double fraction) {
  if (table.empty()) return;
  const std::size_t n = table.size();
  const auto samples = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t top = 0;
  for (std::size_t s = 0; s < samples; ++s) top = std::max(top, pick(rng));
  const CountTable fresh = compute_table(table.family(), top);
  for (std::size_t i = 0; i <= top; ++i) {
    if (fresh.at(i) != table.at(i)) {
      throw CacheError("spot check failed for " + table.family().label() +
                       " at index " + std::to_string(i) + ": cached " +
                       to_decimal(table.at(i)) + ", recomputed " +
                       to_decimal(fresh.at(i)));
    }
  }
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("LAMBDACOUNT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::filesystem::path cache_file_in(const std::filesystem::path& dir) {
  return dir / "tables.json";
}

}  // namespace lambdacount
