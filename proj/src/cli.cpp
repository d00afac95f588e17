// SPDX-License-Identifier: Apache-2.0

#include "ramcong/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ramcong/arith.hpp"
#include "ramcong/congruence.hpp"
#include "ramcong/errors.hpp"
#include "ramcong/oracle.hpp"
#include "ramcong/ramanujan.hpp"
#include "ramcong/verify.hpp"

namespace ramcong {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum class Format { kText, kJson };

struct Record {
  std::string command;
  json params = json::object();
  json result = json::object();
  std::string engine;
  double elapsed_ms = 0.0;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_json(std::ostream& out, const Record& rec) {
  json doc;
  doc["command"] = rec.command;
  doc["params"] = rec.params;
  doc["result"] = rec.result;
  doc["engine"] = rec.engine;
  doc["elapsed_ms"] = rec.elapsed_ms;
  out << doc.dump(2) << '\n';
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string tuple_text(const std::vector<std::int64_t>& v) { return "(" + join(v, ", ") + ")"; }

// Shared --n/--s/--b/--t/--g handling for `count` and `solve`.
struct InstanceArgs {
  std::int64_t n = 1;
  int s = 1;
  std::int64_t b = 0;
  std::vector<std::int64_t> t;
  std::vector<std::int64_t> g;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Base modulus n (congruence is taken mod n^s)")->required();
    cmd->add_option("--s", s, "Power s")->capture_default_str();
    cmd->add_option("--b", b, "Target residue b")->capture_default_str();
    auto* t_opt = cmd->add_option("--t", t, "Comma-separated restrictions t_i, each dividing n")->delimiter(',');
    auto* g_opt = cmd->add_option("--g", g, "Class multiplicities g_j aligned with ascending divisors of n")
                      ->delimiter(',');
    t_opt->excludes(g_opt);
  }

  [[nodiscard]] CongruenceInstance resolve() const {
    CongruenceInstance inst{n, s, b, g.empty() ? t : restrictions_from_multiplicities(n, g)};
    inst.validate();
    return inst;
  }

  [[nodiscard]] json to_json(const CongruenceInstance& inst) const {
    return json{{"n", inst.n}, {"s", inst.s}, {"b", inst.b}, {"modulus", inst.modulus()},
                {"t", inst.restrictions}, {"g", class_profile(inst).multiplicities}};
  }
};

SolutionCount count_with(const std::string& engine, const CongruenceInstance& inst, std::optional<std::int64_t> budget) {
  if (engine == "formula") return count_restricted(inst);
  if (engine == "brute") return brute_force_count(inst, budget.value_or(kBruteForceBudget));
  return convolution_count(inst, budget.value_or(kConvolutionBudget));
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

struct BenchRow {
  std::int64_t n = 0;
  int s = 0;
  std::int64_t k = 0;
  std::int64_t b = 0;
  std::string count;
  std::optional<double> formula_ms;
  std::optional<double> convolution_ms;
  std::optional<double> brute_ms;
  bool agree = true;
};

std::optional<double> time_engine(const std::function<SolutionCount()>& run, int reps, std::string& count,
                                  bool& agree) {
  std::vector<double> samples;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    SolutionCount c;
    try {
      c = run();
    } catch (const ResourceError&) {
      return std::nullopt;
    }
    samples.push_back(ms_since(start));
    if (count.empty()) count = c.to_string();
    agree = agree && count == c.to_string();
  }
  return median(samples);
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string opt_csv(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << *v;
  return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts solutions of restricted linear congruences x_1 + ... + x_k = b (mod n^s)"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  std::optional<std::int64_t> budget;

  // count
  auto* count_cmd = app.add_subcommand("count", "Number of solutions of a restricted congruence");
  InstanceArgs count_args;
  count_args.attach(count_cmd);
  std::string engine = "formula";
  count_cmd->add_option("--engine", engine, "Counting engine")
      ->check(CLI::IsMember({"formula", "brute", "convolution"}))
      ->capture_default_str();
  count_cmd->add_option("--budget", budget, "Work budget for the brute/convolution engines");

  // ramanujan
  auto* ram_cmd = app.add_subcommand("ramanujan", "Cohen's generalized Ramanujan sum c_{r,s}(m)");
  std::int64_t ram_r = 1;
  int ram_s = 1;
  std::int64_t ram_m = 0;
  ram_cmd->add_option("--r", ram_r, "r")->required();
  ram_cmd->add_option("--s", ram_s, "s")->capture_default_str();
  ram_cmd->add_option("--m", ram_m, "argument m")->capture_default_str();

  // ggcd
  auto* ggcd_cmd = app.add_subcommand("ggcd", "Generalized gcd (a,b)_s");
  std::int64_t gg_a = 0;
  std::int64_t gg_b = 0;
  int gg_s = 1;
  ggcd_cmd->add_option("--a", gg_a, "a")->required();
  ggcd_cmd->add_option("--b", gg_b, "b")->required();
  ggcd_cmd->add_option("--s", gg_s, "s")->capture_default_str();

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "Generalized-gcd classes of [1, n^s]");
  std::int64_t cl_n = 1;
  int cl_s = 1;
  bool cl_elements = false;
  classes_cmd->add_option("--n", cl_n, "n")->required();
  classes_cmd->add_option("--s", cl_s, "s")->capture_default_str();
  classes_cmd->add_flag("--elements", cl_elements, "List class members");
  classes_cmd->add_option("--budget", budget, "Enumeration budget for --elements");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "List solutions in lexicographic order");
  InstanceArgs solve_args;
  solve_args.attach(solve_cmd);
  std::int64_t limit = 100;
  solve_cmd->add_option("--limit", limit, "Maximum number of tuples to print")->capture_default_str();
  solve_cmd->add_option("--budget", budget, "Tuple enumeration budget");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Engine-agreement sweep plus identity suites");
  VerifyOptions vopt;
  verify_cmd->add_option("--max-n", vopt.max_n, "Largest n")->capture_default_str();
  verify_cmd->add_option("--s", vopt.s_values, "Comma-separated s values")->delimiter(',')->capture_default_str();
  verify_cmd->add_option("--max-k", vopt.max_k, "Largest number of unknowns")->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "Seed for subsampling oversized cells")->capture_default_str();
  verify_cmd->add_option("--cap", vopt.cell_cap, "Instances per (n, s, k) cell before subsampling")
      ->capture_default_str();
  verify_cmd->add_option("--budget", budget, "Brute-force tuple budget per instance");
  bool inject_fault = false;
  verify_cmd->add_flag("--inject-fault", inject_fault, "Replace the closed form with a corrupted one (self-test)");
  bool skip_properties = false;
  verify_cmd->add_flag("--no-properties", skip_properties, "Skip the identity suites");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time the three engines over a size grid");
  std::vector<std::int64_t> bench_n{4, 8, 16};
  std::vector<int> bench_s{1, 2};
  std::vector<std::int64_t> bench_k{2, 4, 8};
  int reps = 3;
  bench_cmd->add_option("--n", bench_n, "n values")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--s", bench_s, "s values")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--k", bench_k, "k values")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--reps", reps, "Repetitions per engine (median reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--budget", budget, "Brute-force tuple budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  const Format format = format_name == "json" ? Format::kJson : Format::kText;

  try {
    const auto start = Clock::now();
    Record rec;

    if (*count_cmd) {
      const CongruenceInstance inst = count_args.resolve();
      const SolutionCount c = count_with(engine, inst, budget);
      rec = {"count", count_args.to_json(inst), json{{"count", c.to_string()}}, engine, ms_since(start)};
      if (format == Format::kText) out << c << '\n';

    } else if (*ram_cmd) {
      const std::int64_t v = cohen_ramanujan(ram_r, ram_s, ram_m);
      rec = {"ramanujan", json{{"r", ram_r}, {"s", ram_s}, {"m", ram_m}}, json{{"value", v}}, "mobius-divisor",
             ms_since(start)};
      if (format == Format::kText) out << v << '\n';

    } else if (*ggcd_cmd) {
      const GeneralizedGcd g = generalized_gcd(gg_a, gg_b, gg_s);
      rec = {"ggcd", json{{"a", gg_a}, {"b", gg_b}, {"s", gg_s}}, json{{"value", g.value}, {"base", g.base}},
             "factorization", ms_since(start)};
      if (format == Format::kText) out << g.value << " = " << g.base << '^' << g.power << '\n';

    } else if (*classes_cmd) {
      const std::int64_t modulus = checked_pow(cl_n, cl_s);
      json rows = json::array();
      std::ostringstream text;
      text << "d\tsize" << (cl_elements ? "\tmembers" : "") << '\n';
      for (const std::int64_t d : divisors(cl_n)) {
        const std::int64_t size = class_size(cl_n, cl_s, d);
        json row{{"d", d}, {"d_pow_s", checked_pow(d, cl_s)}, {"size", size}};
        text << d << '\t' << size;
        if (cl_elements) {
          const auto members = class_members(cl_n, cl_s, d, budget.value_or(kClassMembersBudget));
          row["members"] = members;
          text << '\t' << join(members, " ");
        }
        text << '\n';
        rows.push_back(std::move(row));
      }
      rec = {"classes", json{{"n", cl_n}, {"s", cl_s}, {"elements", cl_elements}},
             json{{"modulus", modulus}, {"classes", rows}}, "jordan-totient", ms_since(start)};
      if (format == Format::kText) out << text.str();

    } else if (*solve_cmd) {
      const CongruenceInstance inst = solve_args.resolve();
      const SolutionListing listing = enumerate_solutions(inst, limit, budget.value_or(kBruteForceBudget));
      rec = {"solve", solve_args.to_json(inst), json{{"count", listing.total.to_string()}, {"solutions", listing.tuples}},
             "brute", ms_since(start)};
      rec.params["limit"] = limit;
      if (format == Format::kText) {
        for (const auto& tuple : listing.tuples) out << tuple_text(tuple) << '\n';
        out << "count " << listing.total << '\n';
      }

    } else if (*verify_cmd) {
      if (budget) vopt.brute_budget = *budget;
      if (inject_fault) vopt.formula_override = mutated_formula_count;
      vopt.run_properties = !skip_properties;
      const VerifyReport report = run_verify(vopt);

      json cells = json::array();
      for (const auto& c : report.cells) {
        cells.push_back({{"n", c.n}, {"s", c.s}, {"k", c.k}, {"population", c.population}, {"checked", c.checked},
                         {"brute_skipped", c.brute_skipped}, {"convolution_skipped", c.convolution_skipped},
                         {"sampled", c.sampled}});
      }
      json mismatches = json::array();
      for (const auto& m : report.mismatches) {
        mismatches.push_back({{"n", m.instance.n}, {"s", m.instance.s}, {"b", m.instance.b},
                              {"t", m.instance.restrictions}, {"formula", m.formula}, {"brute", m.brute},
                              {"convolution", m.convolution}});
      }
      json suites = json::array();
      for (const auto& su : report.suites) {
        suites.push_back({{"name", su.name}, {"checked", su.checked}, {"failures", su.failures},
                          {"first_failure", su.first_failure}});
      }
      rec = {"verify",
             json{{"max_n", vopt.max_n}, {"s", vopt.s_values}, {"max_k", vopt.max_k}, {"seed", vopt.seed},
                  {"cap", vopt.cell_cap}, {"inject_fault", inject_fault}},
             json{{"ok", report.ok()}, {"instances", report.instances}, {"mismatch_count", report.mismatches.size()},
                  {"cells", cells}, {"mismatches", mismatches}, {"suites", suites}},
             "formula+brute+convolution", ms_since(start)};

      if (format == Format::kText) {
        out << "instances " << report.instances << " in " << report.cells.size() << " cells\n";
        for (const auto& su : report.suites) {
          out << (su.passed() ? "PASS " : "FAIL ") << su.name << " checked=" << su.checked
              << " failures=" << su.failures << '\n';
          if (!su.first_failure.empty()) out << "  first failure: " << su.first_failure << '\n';
        }
        out << "mismatches " << report.mismatches.size() << '\n';
        if (!report.mismatches.empty()) {
          const Mismatch& m = report.mismatches.front();
          out << "reproducer: count --n " << m.instance.n << " --s " << m.instance.s << " --b " << m.instance.b;
          if (!m.instance.restrictions.empty()) out << " --t " << join(m.instance.restrictions, ",");
          out << "\n  formula=" << m.formula << " brute=" << m.brute << " convolution=" << m.convolution << '\n';
        }
      }
      if (format == Format::kJson) emit_json(out, rec);
      return report.ok() ? kExitOk : kExitMismatch;

    } else if (*bench_cmd) {
      std::vector<BenchRow> rows;
      bool all_agree = true;
      for (const std::int64_t n : bench_n) {
        for (const int s : bench_s) {
          for (const std::int64_t k : bench_k) {
            const std::vector<std::int64_t> ds = divisors(n);
            CongruenceInstance inst{n, s, 1, {}};
            for (std::int64_t i = 0; i < k; ++i) inst.restrictions.push_back(ds[static_cast<std::size_t>(i) % ds.size()]);
            BenchRow row;
            row.n = n;
            row.s = s;
            row.k = k;
            row.b = inst.b;
            RamanujanCache cache;
            row.formula_ms = time_engine([&] { return count_restricted(inst, cache); }, reps, row.count, row.agree);
            row.convolution_ms = time_engine([&] { return convolution_count(inst); }, reps, row.count, row.agree);
            row.brute_ms = time_engine([&] { return brute_force_count(inst, budget.value_or(kBruteForceBudget)); },
                                       reps, row.count, row.agree);
            all_agree = all_agree && row.agree;
            rows.push_back(std::move(row));
          }
        }
      }
      json jrows = json::array();
      for (const auto& r : rows) {
        jrows.push_back({{"n", r.n}, {"s", r.s}, {"k", r.k}, {"b", r.b}, {"count", r.count},
                         {"formula_ms", opt_json(r.formula_ms)}, {"convolution_ms", opt_json(r.convolution_ms)},
                         {"brute_ms", opt_json(r.brute_ms)}, {"agree", r.agree}});
      }
      rec = {"bench", json{{"n", bench_n}, {"s", bench_s}, {"k", bench_k}, {"reps", reps}},
             json{{"rows", jrows}}, "formula,convolution,brute", ms_since(start)};
      if (format == Format::kText) {
        out << "n,s,k,b,count,formula_ms,convolution_ms,brute_ms,agree\n";
        for (const auto& r : rows) {
          out << r.n << ',' << r.s << ',' << r.k << ',' << r.b << ',' << r.count << ',' << opt_csv(r.formula_ms)
              << ',' << opt_csv(r.convolution_ms) << ',' << opt_csv(r.brute_ms) << ',' << (r.agree ? 1 : 0) << '\n';
        }
      }
      if (format == Format::kJson) emit_json(out, rec);
      return all_agree ? kExitOk : kExitMismatch;
    }

    if (format == Format::kJson) emit_json(out, rec);
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal identity violated: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace ramcong
