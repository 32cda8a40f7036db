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

#include "lambdacount/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambdacount/asymptotics.hpp"
#include "lambdacount/cache.hpp"
#include "lambdacount/delta.hpp"
#include "lambdacount/error.hpp"
#include "lambdacount/oracle.hpp"
#include "lambdacount/render.hpp"
#include "lambdacount/sampler.hpp"
#include "lambdacount/sequences.hpp"
#include "lambdacount/table_builder.hpp"

namespace lambdacount {

namespace {

struct Globals {
  std::string cache_dir;
};

std::optional<std::filesystem::path> resolve_cache_dir(const Globals& g) {
  if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
  return cache_dir_from_env();
}

CountTable prefix_of(const CountTable& t, std::size_t max_size) {
  CountTable out(t.family(), t.route());
  for (std::size_t i = 0; i <= max_size; ++i) out.append(t.at(i));
  return out;
}

CountTable obtain_table(const Family& family, std::size_t max_size, const Globals& g) {
  const auto dir = resolve_cache_dir(g);
  if (!dir) return compute_table(family, max_size);
  const auto path = cache_file_in(*dir);
  CacheFile cache = cache_load(path);
  const CountTable* resume = nullptr;
  if (const CacheEntry* e = cache.find(family); e != nullptr && !e->table.empty()) {
    if (e->table.extent() >= max_size) return prefix_of(e->table, max_size);
    resume = &e->table;
  }
  CountTable table = compute_table(family, max_size, resume);
  cache.put(table);
  cache_store(path, cache);
  return table;
}

// Independent second route where one exists; RouteMismatch on disagreement.
void cross_check(const CountTable& table) {
  const Family& f = table.family();
  const std::size_t n = table.extent();
  switch (f.kind) {
    case FamilyKind::kClosed:
      if (n >= 1) require_same(table, closed_counts_indirect_route(n));
      break;
    case FamilyKind::kBck:
      if (n >= 1 && n <= 120) {
        CountTable other(f, "bivariate");
        const auto s = solve_bck_bivariate(*f.p, n);
        for (std::size_t i = 0; i <= n; ++i) other.append(s[i]);
        require_same(table, other);
      }
      break;
    case FamilyKind::kCatalan:
      for (std::size_t i = 0; i <= n; ++i) {
        if (table.at(i) != catalan(i)) {
          throw RouteMismatch("Catalan: ratio route disagrees with binomial route", i);
        }
      }
      break;
    default:
      break;
  }
}

void print_table(const CountTable& t, const std::string& format, std::ostream& out) {
  const Family& f = t.family();
  const std::size_t first = f.first_index();
  if (format == "csv") {
    out << "index,value\n";
    for (std::size_t i = first; i <= t.extent(); ++i) out << i << ',' << to_decimal(t.at(i)) << '\n';
  } else if (format == "json") {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t i = first; i <= t.extent(); ++i) {
      values.push_back({{"n", i}, {"count", to_decimal(t.at(i))}});
    }
    nlohmann::json doc = {{"family", f.tag()},
                          {"p", f.p ? nlohmann::json(*f.p) : nlohmann::json(nullptr)},
                          {"values", std::move(values)}};
    out << doc.dump() << '\n';
  } else {
    out << f.label() << " [" << t.route() << "]\n";
    const std::size_t width = std::to_string(t.extent()).size();
    for (std::size_t i = first; i <= t.extent(); ++i) {
      out << std::setw(static_cast<int>(width)) << i << "  " << to_decimal(t.at(i)) << '\n';
    }
  }
}

// --- verify ----------------------------------------------------------------

struct CheckRow {
  std::string name;
  bool ok = false;
  std::string detail;
};

CheckRow run_check(const std::string& name, const std::function<std::string()>& body) {
  CheckRow row{name, false, ""};
  try {
    row.detail = body();
    row.ok = true;
  } catch (const RouteMismatch& ex) {
    row.detail = "first disagreeing index " + std::to_string(ex.first_index()) + ": " + ex.what();
  } catch (const std::exception& ex) {
    row.detail = ex.what();
  }
  return row;
}

CountTable oracle_table(const Constraint& c, std::size_t max_size, const Family& family) {
  CountTable t(family, "oracle");
  t.append(BigInt(0));
  for (std::size_t n = 1; n <= max_size; ++n) t.append(count_via_oracle(n, c));
  return t;
}

std::vector<CheckRow> verify_closed(std::size_t oracle_max, std::size_t route_max) {
  std::vector<CheckRow> rows;
  rows.push_back(run_check("closed: recurrence = indirect = de Bruijn = oracle, n <= " +
                               std::to_string(oracle_max),
                           [&] {
                             const auto oracle = oracle_table(Constraint::closed(), oracle_max,
                                                              Family::closed());
                             require_same(closed_counts(oracle_max), oracle);
                             require_same(closed_counts_indirect_route(oracle_max), oracle);
                             require_same(closed_counts_debruijn_route(oracle_max), oracle);
                             return std::string("lambda_") + std::to_string(oracle_max) + " = " +
                                    to_decimal(oracle.at(oracle_max));
                           }));
  rows.push_back(run_check("closed: recurrence = indirect = de Bruijn, n <= " +
                               std::to_string(route_max),
                           [&] {
                             const auto main = closed_counts(route_max);
                             require_same(main, closed_counts_indirect_route(route_max));
                             require_same(main, closed_counts_debruijn_route(route_max));
                             return std::to_string(route_max) + " values";
                           }));
  return rows;
}

std::vector<CheckRow> verify_bci(std::size_t oracle_max) {
  std::vector<CheckRow> rows;
  for (unsigned p : {1u, 2u}) {
    rows.push_back(run_check("BCI(" + std::to_string(p) + "): recurrence = oracle, sizes <= " +
                                 std::to_string(oracle_max),
                             [&] {
                               const auto table = compute_table(Family::bci(p), oracle_max);
                               require_same(table, oracle_table(Constraint::bci(p), oracle_max,
                                                                Family::bci(p)));
                               return std::string("support checked");
                             }));
  }
  return rows;
}

std::vector<CheckRow> verify_bck(std::size_t oracle_max, std::size_t route_max) {
  std::vector<CheckRow> rows;
  const std::size_t bck_routes = std::min<std::size_t>(route_max, 100);
  for (unsigned p : {1u, 2u, 3u}) {
    const std::string tag = "BCK(" + std::to_string(p) + ")";
    rows.push_back(run_check(tag + ": Y-route = oracle, n <= " + std::to_string(oracle_max), [&] {
      require_same(bck_counts(p, oracle_max),
                   oracle_table(Constraint::bck(p), oracle_max, Family::bck(p)));
      return std::string();
    }));
    rows.push_back(run_check(tag + ": Y-route = bivariate = truncated delta, n <= " +
                                 std::to_string(bck_routes),
                             [&] {
                               bck_counts_bivar(p, bck_routes);
                               bck_counts_delta(p, bck_routes);
                               return std::string();
                             }));
  }
  return rows;
}

std::vector<CheckRow> verify_delta() {
  std::vector<CheckRow> rows;
  rows.push_back(run_check("delta: fast rows = direct sum, n <= 60", [] {
    const auto& s = delta_fast_status();
    if (!s.ok) throw Error("fast path disabled: " + s.summary());
    return s.summary();
  }));
  rows.push_back(run_check("delta: b-system recurrences, n <= 30", [] {
    const auto rep = validate_b_system(30);
    if (!rep.ok) throw Error(rep.first_failure.value_or("b-system check failed"));
    return std::to_string(rep.triples_checked) + " triples";
  }));
  return rows;
}

std::vector<CheckRow> verify_identities() {
  std::vector<CheckRow> rows;
  rows.push_back(run_check("Q_p: alpha sum = closed form, p <= 8, n <= 200", [] {
    for (unsigned p = 1; p <= 8; ++p) {
      const QPoly q(p);
      for (std::size_t n = 1; n <= 200; ++n) q(n);
    }
    return std::string();
  }));
  rows.push_back(run_check("alpha: multinomial = series coefficient, p <= 12", [] {
    for (unsigned p = 1; p <= 12; ++p)
      for (unsigned l = 1; l <= p; ++l) alpha(l, p);
    return std::string();
  }));
  return rows;
}

int cmd_verify(std::size_t oracle_max, std::size_t route_max,
               const std::vector<std::string>& families, std::ostream& out) {
  if (oracle_max < 1 || oracle_max > OracleConfig{}.cap) {
    throw DomainError("--max-size must lie in [1, " + std::to_string(OracleConfig{}.cap) +
                      "] for oracle checks");
  }
  if (route_max < 2) throw DomainError("--route-size must be >= 2");
  std::vector<CheckRow> rows;
  auto add = [&](std::vector<CheckRow> more) {
    for (auto& r : more) {
      out << (r.ok ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << '\n' << std::flush;
      rows.push_back(std::move(r));
    }
  };
  for (const auto& f : families) {
    if (f == "closed") {
      add(verify_closed(oracle_max, route_max));
    } else if (f == "bci") {
      add(verify_bci(oracle_max));
    } else if (f == "bck") {
      add(verify_bck(oracle_max, route_max));
    } else if (f == "delta") {
      add(verify_delta());
    } else if (f == "identities") {
      add(verify_identities());
    } else {
      throw DomainError("unknown verify group '" + f + "'");
    }
  }
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.ok;
  out << rows.size() - failed << "/" << rows.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

// --- asymptotics -----------------------------------------------------------

std::string fmt(double x, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

int cmd_asymptotics(const std::string& family, std::optional<unsigned> p,
                    std::optional<std::size_t> n, double epsilon, std::size_t n_terms,
                    std::ostream& out) {
  if (family == "bci") {
    if (!p || *p < 2) throw DomainError("asymptotics --family bci needs --p >= 2");
    const BciConstants c = bci_constants(*p, n_terms);
    const ApReport ap = compute_ap(*p, n_terms);
    out << "BCI(" << *p << ") constants\n"
        << "  beta_p        " << fmt(c.beta_p) << '\n'
        << "  gamma_p       " << fmt(c.gamma_p) << '\n'
        << "  B_p           " << fmt(c.B_p) << '\n'
        << "  B_p (E-M)     " << fmt(Bp_euler_maclaurin(*p)) << '\n'
        << "  K_p(" << n_terms << ")      " << fmt(ap.partial_product) << "  (last step "
        << fmt(ap.last_step_change, 3) << ")\n"
        << "  a_p           " << fmt(c.a_p) << "  (extrapolated)\n"
        << "  A_p           " << fmt(c.A_p) << '\n'
        << "  bar_beta_p    " << fmt(c.bar_beta_p) << '\n'
        << "  bar_gamma_p   " << fmt(c.bar_gamma_p) << '\n'
        << "  bar_A_p       " << fmt(c.bar_A_p) << '\n';
    if (n) {
      if (*n < 1) throw DomainError("--n must be >= 1");
      const auto phi = bci_phi(*p, *n);
      const double log_ratio = log_of(phi[*n]) - bci_estimate(c, *n);
      out << "  phi_" << *n << " / estimate = " << fmt(std::exp(log_ratio)) << '\n';
    }
    return kExitOk;
  }
  if (family == "closed") {
    if (p) throw DomainError("asymptotics --family closed takes no --p");
    if (!n || *n < 3) throw DomainError("asymptotics --family closed needs --n >= 3");
    const BoundReport r = lambda_bounds(*n, epsilon);
    out << "closed terms, n = " << r.n << ", epsilon = " << r.epsilon << '\n'
        << "  log lambda_n        " << fmt(r.log_lambda) << '\n'
        << "  lower exponent      " << fmt(r.lower_exponent) << "  (+ log c1, c1 unknown)\n"
        << "  upper exponent      " << fmt(r.upper_exponent) << "  (+ log c2, c2 unknown)\n"
        << "  normalized          " << fmt(r.normalized()) << '\n'
        << "  normalized bounds   [" << fmt(r.normalized_lower()) << ", "
        << fmt(r.normalized_upper()) << "]\n"
        << "  corridor            [" << fmt(corridor_low()) << ", " << fmt(corridor_high())
        << "]\n";
    return kExitOk;
  }
  if (family == "bci1") {
    if (p) throw DomainError("asymptotics --family bci1 takes no --p");
    if (!n) throw DomainError("asymptotics --family bci1 needs --n");
    const double growth = bci1_growth(*n);
    const auto profile = bci1_ratio_profile(*n);
    out << "BCI(1), n = " << *n << '\n'
        << "  growth exponent     " << fmt(growth) << '\n'
        << "  log g_n             " << fmt(growth + profile.back().log_ratio) << '\n'
        << "  fitted C            " << fmt(std::exp(profile.back().log_ratio))
        << "  (fit: g_n / exp(growth) at n)\n";
    if (profile.size() >= 2) {
      const double prev = profile[profile.size() - 2].log_ratio;
      out << "  last-step change    " << fmt(std::expm1(profile.back().log_ratio - prev), 3)
          << '\n';
    }
    return kExitOk;
  }
  throw DomainError("asymptotics --family must be bci, closed or bci1");
}

// --- sample ----------------------------------------------------------------

void emit_term(const LambdaTermDB& db, const EnrichedTree* tree, const std::string& format,
               std::ostream& out) {
  if (format == "sexpr") {
    out << render_sexpr(db) << '\n';
  } else if (format == "named") {
    out << render_named(db) << '\n';
  } else if (format == "json") {
    out << render_json(db).dump() << '\n';
  } else {
    out << render_dot(tree != nullptr ? *tree : from_debruijn(db));
  }
}

int cmd_sample(const std::string& family, std::optional<unsigned> p, std::size_t size,
               std::size_t count, std::uint64_t seed, const std::string& format,
               std::ostream& out) {
  SamplerState state(seed);
  if (family == "closed") {
    if (p) throw DomainError("sample --family closed takes no --p");
    if (size < 2) throw DomainError("there are no closed terms of size " + std::to_string(size));
    for (std::size_t i = 0; i < count; ++i) emit_term(sample_closed(size, state), nullptr, format, out);
    return kExitOk;
  }
  if (family == "bci") {
    if (!p) throw DomainError("sample --family bci needs --p");
    bci_unary_count(*p, size);
    for (std::size_t i = 0; i < count; ++i) {
      const EnrichedTree t = sample_bci(*p, size, state);
      emit_term(to_debruijn(t), &t, format, out);
    }
    return kExitOk;
  }
  throw DomainError("sample --family must be closed or bci");
}

// --- cache -----------------------------------------------------------------

std::filesystem::path require_cache_path(const Globals& g) {
  const auto dir = resolve_cache_dir(g);
  if (!dir) throw DomainError("no cache directory: pass --cache-dir or set LAMBDACOUNT_CACHE_DIR");
  return cache_file_in(*dir);
}

int cmd_cache_check(const Globals& g, std::ostream& out) {
  const auto path = require_cache_path(g);
  const CacheFile cache = cache_load(path);
  out << path.string() << ": format " << cache.format_version << ", " << cache.entries.size()
      << " entries, spot check passed\n";
  for (const auto& e : cache.entries) {
    out << "  " << e.table.family().label() << " [" << e.table.route() << "] indices 0.."
        << (e.table.empty() ? 0 : e.table.extent()) << ", tool " << e.tool_version << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, asymptotics and sampling of lambda terms"};
  app.name("lambdacount");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Table cache directory (overrides LAMBDACOUNT_CACHE_DIR)");

  std::function<int()> action;

  // count
  auto* count = app.add_subcommand("count", "Print a counting sequence");
  std::string c_family;
  std::optional<unsigned> c_p;
  std::size_t c_max = 0;
  std::string c_format = "csv";
  bool c_no_check = false;
  count->add_option("--family", c_family,
                    "catalan, motzkin, motzkin-bounded, bci, bci-linearized, bck, closed, "
                    "closed-debruijn")
      ->required();
  count->add_option("--p", c_p, "Pointer parameter for bci, bci-linearized, bck, motzkin-bounded");
  count->add_option("--max-size", c_max, "Largest index")->required();
  count->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json", "text"}));
  count->add_flag("--no-check", c_no_check, "Skip the independent second route");
  count->callback([&] {
    action = [&] {
      const Family family = Family::parse(c_family, c_p);
      const CountTable table = obtain_table(family, c_max, g);
      if (!c_no_check) cross_check(table);
      print_table(table, c_format, out);
      return kExitOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check every route against the oracle");
  std::size_t v_max = 12;
  std::size_t v_routes = 200;
  std::vector<std::string> v_families{"closed", "bci", "bck", "delta", "identities"};
  verify->add_option("--max-size", v_max, "Largest size for oracle comparisons");
  verify->add_option("--route-size", v_routes, "Largest size for route-against-route checks");
  verify->add_option("--families", v_families, "Groups: closed, bci, bck, delta, identities");
  verify->callback([&] { action = [&] { return cmd_verify(v_max, v_routes, v_families, out); }; });

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "Asymptotic constants and bounds");
  std::string a_family;
  std::optional<unsigned> a_p;
  std::optional<std::size_t> a_n;
  double a_eps = 0.1;
  std::size_t a_terms = 500;
  asym->add_option("--family", a_family, "bci, closed or bci1")->required();
  asym->add_option("--p", a_p);
  asym->add_option("--n", a_n);
  asym->add_option("--epsilon", a_eps);
  asym->add_option("--n-terms", a_terms, "Factors of K_p used for a_p");
  asym->callback([&] {
    action = [&] { return cmd_asymptotics(a_family, a_p, a_n, a_eps, a_terms, out); };
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform random terms");
  std::string s_family;
  std::optional<unsigned> s_p;
  std::size_t s_size = 0;
  std::size_t s_count = 1;
  std::uint64_t s_seed = 1;
  std::string s_format = "sexpr";
  sample->add_option("--family", s_family, "closed or bci")->required();
  sample->add_option("--p", s_p);
  sample->add_option("--size", s_size)->required();
  sample->add_option("--count", s_count);
  sample->add_option("--seed", s_seed);
  sample->add_option("--format", s_format)->check(CLI::IsMember({"sexpr", "named", "json", "dot"}));
  sample->callback([&] {
    action = [&] { return cmd_sample(s_family, s_p, s_size, s_count, s_seed, s_format, out); };
  });

  // cache
  auto* cache = app.add_subcommand("cache", "Manage the table cache");
  cache->require_subcommand(1);
  auto* store = cache->add_subcommand("store", "Compute a table and store it");
  std::string k_family;
  std::optional<unsigned> k_p;
  std::size_t k_max = 0;
  store->add_option("--family", k_family)->required();
  store->add_option("--p", k_p);
  store->add_option("--max-size", k_max)->required();
  store->callback([&] {
    action = [&] {
      require_cache_path(g);
      const CountTable t = obtain_table(Family::parse(k_family, k_p), k_max, g);
      out << "stored " << t.family().label() << " to index " << t.extent() << '\n';
      return kExitOk;
    };
  });
  auto* check = cache->add_subcommand("check", "Load the cache and spot-check it");
  check->callback([&] { action = [&] { return cmd_cache_check(g, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const DomainError& ex) {
    err << "lambdacount: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const RouteMismatch& ex) {
    err << "lambdacount: route disagreement at index " << ex.first_index() << ": " << ex.what()
        << '\n';
    return kExitFailure;
  } catch (const std::exception& ex) {
    err << "lambdacount: " << ex.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace lambdacount
