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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lambdacount/cache.hpp"
#include "lambdacount/cli.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/sequences.hpp"
#include "lambdacount/table_builder.hpp"

using namespace lambdacount;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lambdacount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lambdacount-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("[count] csv, json and text") {
  auto r = run({"count", "--family", "closed", "--max-size", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"index,value", "1,0", "2,1", "3,2", "4,4", "5,13"});

  r = run({"count", "--family", "bci", "--p", "1", "--max-size", "8"});
  CHECK(r.code == 0);
  const auto bci = lines(r.out);
  REQUIRE(bci.size() == 9);
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::string expected = n == 2 ? "1" : n == 5 ? "5" : n == 8 ? "60" : "0";
    CHECK(bci[n] == std::to_string(n) + "," + expected);
  }

  r = run({"count", "--family", "catalan", "--max-size", "3"});
  CHECK(lines(r.out) == std::vector<std::string>{"index,value", "0,1", "1,1", "2,2", "3,5"});

  r = run({"count", "--family", "closed", "--max-size", "60", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["family"] == "closed");
  CHECK(doc["p"].is_null());
  CHECK(doc["values"].size() == 60);
  CHECK(doc["values"][59]["n"] == 60);
  CHECK(doc["values"][59]["count"] == to_decimal(closed_counts(60).at(60)));

  r = run({"count", "--family", "bck", "--p", "2", "--max-size", "6", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("BCK(2)") != std::string::npos);
  CHECK(r.out.find("6  40") != std::string::npos);
}

TEST_CASE("[count] usage errors exit 2") {
  CHECK(run({"count", "--family", "bci", "--max-size", "5"}).code == 2);
  CHECK(run({"count", "--family", "closed", "--p", "1", "--max-size", "5"}).code == 2);
  CHECK(run({"count", "--family", "widgets", "--max-size", "5"}).code == 2);
  CHECK(run({"count", "--family", "closed"}).code == 2);
  CHECK(run({"count", "--family", "closed", "--max-size", "5", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("[verify] all groups pass") {
  const auto r = run({"verify", "--max-size", "10", "--route-size", "60"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(run({"verify", "--max-size", "17"}).code == 2);
  CHECK(run({"verify", "--families", "nothing"}).code == 2);
}

TEST_CASE("[asymptotics] reports") {
  auto r = run({"asymptotics", "--family", "bci", "--p", "2", "--n-terms", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.find("a_p           1.0486") != std::string::npos);
  CHECK(r.out.find("A_p           0.981") != std::string::npos);

  r = run({"asymptotics", "--family", "closed", "--n", "300", "--epsilon", "0.1"});
  CHECK(r.code == 0);
  for (const char* field : {"log lambda_n", "lower exponent", "upper exponent", "normalized"}) {
    CHECK(r.out.find(field) != std::string::npos);
  }
  r = run({"asymptotics", "--family", "bci1", "--n", "101"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fitted C") != std::string::npos);

  CHECK(run({"asymptotics", "--family", "bci1", "--n", "100"}).code == 2);
  CHECK(run({"asymptotics", "--family", "bci", "--p", "1"}).code == 2);
  CHECK(run({"asymptotics", "--family", "closed"}).code == 2);
  CHECK(run({"asymptotics", "--family", "bck", "--p", "2"}).code == 2);
}

TEST_CASE("[sample] formats and reproducibility") {
  auto r = run({"sample", "--family", "closed", "--size", "2", "--count", "1", "--format", "named"});
  CHECK(r.code == 0);
  CHECK(r.out == "(\\x1. x1)\n");

  const auto a = run({"sample", "--family", "closed", "--size", "8", "--count", "2000", "--seed", "7"});
  const auto b = run({"sample", "--family", "closed", "--size", "8", "--count", "2000", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out).size() == 2000);

  r = run({"sample", "--family", "bci", "--p", "1", "--size", "5", "--count", "5", "--format", "dot"});
  CHECK(r.code == 0);
  std::size_t docs = 0, dashed = 0;
  for (const auto& line : lines(r.out)) {
    docs += line.rfind("digraph", 0) == 0;
    dashed += line.find("style=dashed") != std::string::npos;
  }
  CHECK(docs == 5);
  CHECK(dashed == 10);

  r = run({"sample", "--family", "bci", "--p", "2", "--size", "9", "--count", "3", "--format", "json"});
  CHECK(r.code == 0);
  for (const auto& line : lines(r.out)) CHECK(nlohmann::json::parse(line)["type"] == "abs");

  CHECK(run({"sample", "--family", "closed", "--size", "1"}).code == 2);
  CHECK(run({"sample", "--family", "bci", "--p", "1", "--size", "4"}).code == 2);
  CHECK(run({"sample", "--family", "bck", "--p", "1", "--size", "4"}).code == 2);
}

TEST_CASE("[cache] store and load round trip") {
  TempDir dir;
  const fs::path file = cache_file_in(dir.path);
  CacheFile cache;
  cache.put(compute_table(Family::closed(), 500));
  cache.put(compute_table(Family::bci(2), 40));
  cache_store(file, cache);
  const CacheFile loaded = cache_load(file);
  REQUIRE(loaded.entries.size() == 2);
  CHECK(loaded.find(Family::closed())->table.values() == closed_counts(500).values());
  CHECK(loaded.find(Family::bci(2))->table.values() == compute_table(Family::bci(2), 40).values());
  CHECK(loaded.find(Family::closed())->tool_version == kToolVersion);
  CHECK(loaded.find(Family::bck(1)) == nullptr);
  // No temporary files remain.
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) files += e.is_regular_file();
  CHECK(files == 1);
}

TEST_CASE("[cache] fault injection") {
  TempDir dir;
  const fs::path file = cache_file_in(dir.path);
  CacheFile cache;
  cache.put(compute_table(Family::closed(), 500));
  cache_store(file, cache);

  SUBCASE("flipped digit") {
    auto doc = nlohmann::json::parse(slurp(file));
    std::string v = doc["entries"][0]["values"][40];
    v[3] = v[3] == '7' ? '8' : '7';
    doc["entries"][0]["values"][40] = v;
    std::ofstream(file) << doc.dump();
    try {
      cache_load(file);
      FAIL("expected a spot-check failure");
    } catch (const CacheError& ex) {
      CHECK(std::string(ex.what()).find("index 40") != std::string::npos);
    }
    CHECK_NOTHROW(cache_load(file, CacheLoadOptions{false}));
  }
  SUBCASE("unknown version") {
    auto doc = nlohmann::json::parse(slurp(file));
    doc["format_version"] = 2;
    std::ofstream(file) << doc.dump();
    CHECK_THROWS_AS(cache_load(file), CacheError);
  }
  SUBCASE("truncated file") {
    const std::string text = slurp(file);
    std::ofstream(file) << text.substr(0, text.size() / 2);
    CHECK_THROWS_AS(cache_load(file), CacheError);
  }
  SUBCASE("not a number") {
    auto doc = nlohmann::json::parse(slurp(file));
    doc["entries"][0]["values"][3] = "12x";
    std::ofstream(file) << doc.dump();
    CHECK_THROWS_AS(cache_load(file), CacheError);
  }
  SUBCASE("gap in indices") {
    auto doc = nlohmann::json::parse(slurp(file));
    doc["entries"][0]["indices"][5] = 6;
    std::ofstream(file) << doc.dump();
    CHECK_THROWS_AS(cache_load(file), CacheError);
  }
}

TEST_CASE("[cache] empty cache, resume, and CLI integration") {
  TempDir dir;
  CHECK(cache_load(cache_file_in(dir.path)).entries.empty());

  auto r = run({"--cache-dir", dir.path.string(), "count", "--family", "closed", "--max-size", "30"});
  CHECK(r.code == 0);
  CHECK(fs::exists(cache_file_in(dir.path)));
  CHECK(cache_load(cache_file_in(dir.path)).find(Family::closed())->table.extent() == 30);

  // Extends the cached table.
  r = run({"--cache-dir", dir.path.string(), "count", "--family", "closed", "--max-size", "90"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).back() == "90," + to_decimal(closed_counts(90).at(90)));
  CHECK(cache_load(cache_file_in(dir.path)).find(Family::closed())->table.extent() == 90);

  // Served from the cache, truncated to the request.
  r = run({"--cache-dir", dir.path.string(), "count", "--family", "closed", "--max-size", "10"});
  CHECK(lines(r.out).size() == 11);

  r = run({"--cache-dir", dir.path.string(), "cache", "store", "--family", "bck", "--p", "2",
           "--max-size", "40"});
  CHECK(r.code == 0);
  r = run({"--cache-dir", dir.path.string(), "cache", "check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("BCK(2)") != std::string::npos);

  // A corrupted cache makes count fail loudly rather than print.
  auto doc = nlohmann::json::parse(slurp(cache_file_in(dir.path)));
  doc["entries"][0]["values"][12] = "1";
  std::ofstream(cache_file_in(dir.path)) << doc.dump();
  r = run({"--cache-dir", dir.path.string(), "count", "--family", "closed", "--max-size", "10"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());

  CHECK(run({"cache", "check"}).code == (cache_dir_from_env() ? 0 : 2));
}

TEST_CASE("[cache] resume must agree with recomputation") {
  CountTable bad(Family::bck(1), "Y-route");
  for (long v : {0, 0, 1, 2, 4}) bad.append(BigInt(v));
  CHECK_THROWS_AS(compute_table(Family::bck(1), 10, &bad), RouteMismatch);
  CHECK_THROWS_AS(compute_table(Family::bck(2), 10, &bad), DomainError);
}
