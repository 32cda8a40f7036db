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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lambdacount/family.hpp"

namespace lambdacount {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kToolVersion = LAMBDACOUNT_VERSION;

struct CacheEntry {
  CountTable table;
  std::string tool_version = kToolVersion;
};

struct CacheFile {
  int format_version = kCacheFormatVersion;
  std::vector<CacheEntry> entries;

  // The entry for `family`, if any.
  const CacheEntry* find(const Family& family) const;
  // Replaces the entry for the same family, or appends.
  void put(CountTable table);
};

struct CacheLoadOptions {
  bool spot_check = true;
  std::uint64_t seed = 0x5eed;
  // Fraction of each table's entries that are sampled and recomputed.
  double fraction = 0.01;
};

// Writes to a temporary file in the same directory, then renames it over
// `path`. CacheError on I/O failure.
void cache_store(const std::filesystem::path& path, const CacheFile& cache);

// CacheError on unreadable or corrupt files, unknown format versions,
// malformed entries, and spot-check mismatches. A missing file yields an
// empty cache.
CacheFile cache_load(const std::filesystem::path& path,
                     const CacheLoadOptions& options = {});

// Recomputes ceil(fraction * size) sampled indices of `table` (at least one)
// and every index below the largest sampled one. CacheError naming the
// first differing index on mismatch.
void spot_check(const CountTable& table, std::uint64_t seed, double fraction);

// LAMBDACOUNT_CACHE_DIR when set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();
std::filesystem::path cache_file_in(const std::filesystem::path& dir);

}  // namespace lambdacount
