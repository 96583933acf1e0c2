#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ordmatch/bounds.hpp"
#include "ordmatch/build.hpp"
#include "ordmatch/clique.hpp"
#include "ordmatch/extract.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracle.hpp"
#include "ordmatch/partition.hpp"
#include "ordmatch/pattern.hpp"

namespace {

using nlohmann::json;
using namespace ordmatch;

json bigint_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

// "PATTERN=INT" entries; later entries override earlier ones
BudgetTable make_budget_table(int r, const std::vector<std::string>& entries,
                              std::optional<std::int64_t> uniform) {
  std::map<Pattern, std::int64_t> caps;
  if (uniform) caps = BudgetTable::uniform(r, *uniform).caps();
  for (const auto& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
      throw std::invalid_argument("--budget expects PATTERN=INT, got '" + entry + "'");
    const Pattern p(entry.substr(0, eq));
    std::int64_t value = 0;
    try {
      size_t used = 0;
      value = std::stoll(entry.substr(eq + 1), &used);
      if (used != entry.size() - eq - 1) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("--budget '" + entry + "': bad integer");
    }
    caps[p] = value;
  }
  if (caps.empty())
    throw std::invalid_argument("no budgets given; use --budget PATTERN=INT or --uniform-budget INT");
  return BudgetTable(r, std::move(caps));
}

void emit_matching(const Matching& m, const std::string& out_path, bool as_json) {
  if (out_path.empty()) {
    if (as_json)
      std::cout << matching_to_json(m).dump() << '\n';
    else
      write_matching_text(std::cout, m);
    return;
  }
  if (as_json) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
    out << matching_to_json(m).dump() << '\n';
    if (!out) throw std::runtime_error(out_path + ": write failed");
  } else {
    write_matching_file(out_path, m);
  }
}

int run_patterns(int r, bool as_json) {
  const auto pats = all_patterns(r);
  int collectable = 0;
  json arr = json::array();
  for (const auto& p : pats) {
    const auto dec = block_decomposition(p);
    if (dec) ++collectable;
    if (as_json) {
      json row;
      row["pattern"] = p.word();
      row["collectable"] = dec.has_value();
      row["blocks"] = dec ? json(dec->first.to_string()) : json(nullptr);
      row["signs"] = dec ? json(dec->second.to_string()) : json(nullptr);
      arr.push_back(std::move(row));
    } else {
      std::cout << p.word() << '\t'
                << (dec ? "(" + dec->first.to_string() + ")" : "-") << '\t'
                << (dec ? dec->second.to_string() : "-") << '\t'
                << (dec ? "collectable" : "non-collectable") << '\n';
    }
  }
  if (as_json) std::cout << arr.dump() << '\n';
  std::cerr << pats.size() << " patterns, " << collectable << " collectable\n";
  return 0;
}

int run_bounds(int r, const std::vector<std::string>& entries,
               std::optional<std::int64_t> uniform, bool as_json) {
  const BudgetTable budgets = make_budget_table(r, entries, uniform);
  const BigInt upper = upper_bound_value(r, budgets);
  const auto [lower, chain] = lower_bound_value(r, budgets);
  const double sharp = sharpness_constant(r);
  if (as_json) {
    json j;
    j["r"] = r;
    j["upper"] = bigint_json(upper);
    j["lower"] = bigint_json(lower);
    j["chain"] = chain.to_string();
    j["sharpness"] = sharp;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "upper " << upper << '\n'
              << "lower " << lower << '\n'
              << "chain " << chain.to_string() << '\n'
              << "sharpness " << sharp << '\n';
  }
  return 0;
}

int run_construct(int r, const std::string& chain_text,
                  const std::vector<std::string>& entries,
                  std::optional<std::int64_t> uniform, const std::string& out_path,
                  bool verify, int threads, bool as_json) {
  const PartitionChain chain =
      chain_text.empty() ? chains(r).front() : PartitionChain::parse(chain_text);
  if (chain.uniformity() != r)
    throw std::invalid_argument("--chain does not match --r " + std::to_string(r));
  const BudgetTable budgets = make_budget_table(r, entries, uniform);
  const Matching m = build_extremal(chain, budgets);
  std::cerr << "built " << m.n() << " edges\n";
  if (verify) {
    const CliqueReport rep = full_report(m, threads);
    for (const auto& p : chain_pattern_set(chain)) {
      const int got = rep.cliques.at(p).size;
      const std::int64_t want = budgets.at(p);
      if (got != want) {
        std::cerr << "cap check failed: " << p.word() << " clique " << got
                  << ", budget " << want << '\n';
        return 1;
      }
    }
    std::cerr << "caps verified\n";
  }
  emit_matching(m, out_path, as_json);
  return 0;
}

int run_analyze(const std::string& input, int threads, bool force,
                const std::string& out_path, bool as_json) {
  const Matching m = read_matching_file(input);
  const CliqueReport rep = full_report(m, threads, force);
  const json j = report_to_json(rep);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error(out_path + ": write failed");
  }
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "r " << rep.r << " n " << rep.n << '\n';
    std::cout << "overall " << rep.best.word() << ' ' << rep.best_size << '\n';
    for (const auto& [p, entry] : rep.cliques) {
      std::cout << p.word() << ' ' << entry.size;
      for (int i : entry.witness) std::cout << ' ' << i;
      std::cout << '\n';
    }
  }
  return 0;
}

int run_extract(const std::string& input, std::int64_t target_m, bool trace,
                bool as_json) {
  const Matching m = read_matching_file(input);
  const ExtractionResult res = extract_best(m, target_m);
  const auto size = static_cast<std::int64_t>(res.clique.size());
  if (size <= target_m && BigInt(m.n()) > uniform_size_bound(m.r(), target_m))
    throw std::logic_error("guaranteed clique of size " + std::to_string(target_m + 1) +
                           " not found (got " + std::to_string(size) + ")");
  if (size <= target_m)
    std::cerr << "note: matching too small for a guarantee at target " << target_m
              << "; best clique has size " << size << '\n';
  if (as_json) {
    std::cout << extraction_to_json(res, trace).dump() << '\n';
  } else {
    std::cout << "pattern " << res.pattern.word() << '\n';
    std::cout << "size " << res.clique.size() << '\n';
    std::cout << "witness";
    for (int i : res.clique) std::cout << ' ' << i;
    std::cout << '\n';
    if (trace) {
      for (const auto& step : res.trace) {
        std::cout << "step (" << step.parts.to_string() << ") " << step.branch << ' '
                  << step.in_size << " -> " << step.out_size;
        if (step.refined) std::cout << " refined (" << step.refined->to_string() << ")";
        std::cout << '\n';
      }
    }
  }
  return 0;
}

int run_exact_l(int r, int n, std::int64_t budget, const std::string& out_path,
                bool as_json) {
  const RamseyResult res = exact_ramsey(n, r, BigInt(budget));
  const BigInt count = matching_count(n, r);
  if (!out_path.empty()) write_matching_file(out_path, res.witness);
  if (as_json) {
    json j;
    j["value"] = res.value;
    j["count"] = bigint_json(count);
    j["witness"] = matching_to_json(res.witness);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "value " << res.value << '\n';
    std::cout << "count " << count << '\n';
    if (out_path.empty()) {
      std::cout << "witness\n";
      write_matching_text(std::cout, res.witness);
    } else {
      std::cout << "witness " << out_path << '\n';
    }
  }
  return 0;
}

int run_sweep(int r, int count, int n, std::uint64_t seed, int threads, bool as_json) {
  std::vector<Matching> instances;
  instances.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    instances.push_back(random_matching(n, r, seed + static_cast<std::uint64_t>(i)));
  const auto rows = sweep_check(instances, threads);
  bool all_pass = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json j;
      j["index"] = row.index;
      j["n"] = row.n;
      j["upper"] = bigint_json(row.upper);
      j["lower"] = bigint_json(row.lower);
      j["built"] = row.built;
      j["pass"] = row.pass;
      arr.push_back(std::move(j));
      all_pass = all_pass && row.pass;
    }
    std::cout << arr.dump() << '\n';
  } else {
    std::cout << sweep_row_tsv_header() << '\n';
    for (const auto& row : rows) {
      std::cout << sweep_row_tsv(row) << '\n';
      all_pass = all_pass && row.pass;
    }
  }
  if (!all_pass) {
    std::cerr << "sweep found failing instances\n";
    return 1;
  }
  return 0;
}

int run_random(int r, int n, std::uint64_t seed, const std::string& out_path,
               bool as_json) {
  emit_matching(random_matching(n, r, seed), out_path, as_json);
  return 0;
}

int run_verify(const std::string& input, const std::string& report_path) {
  const Matching m = read_matching_file(input);
  std::ifstream in(report_path, std::ios::binary);
  if (!in) throw std::runtime_error(report_path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(report_path + ": " + e.what());
  }
  const CliqueReport rep = report_from_json(j);
  const auto errors = verify_report(m, rep);
  if (errors.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& msg : errors) std::cerr << "verify: " << msg << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordered matching clique bounds toolkit"};
  app.require_subcommand(1);

  int code = 0;
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON on stdout");

  // patterns
  auto* cmd_patterns = app.add_subcommand("patterns", "list all r-patterns");
  int pat_r = 2;
  cmd_patterns->add_option("--r", pat_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_patterns->callback([&]() { code = run_patterns(pat_r, as_json); });

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate the bound pair and sharpness");
  int bnd_r = 2;
  std::vector<std::string> bnd_budgets;
  std::int64_t bnd_uniform = -1;
  cmd_bounds->add_option("--r", bnd_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_bounds->add_option("--budget", bnd_budgets, "per-pattern budget PATTERN=INT");
  auto* bnd_u = cmd_bounds->add_option("--uniform-budget", bnd_uniform, "budget for every pattern");
  cmd_bounds->callback([&]() {
    code = run_bounds(bnd_r, bnd_budgets,
                      bnd_u->count() ? std::optional<std::int64_t>(bnd_uniform) : std::nullopt,
                      as_json);
  });

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "build an extremal matching");
  int con_r = 2;
  std::string con_chain, con_out;
  std::vector<std::string> con_budgets;
  std::int64_t con_uniform = -1;
  bool con_verify = false;
  int con_threads = 1;
  cmd_construct->add_option("--r", con_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_construct->add_option("--chain", con_chain, "refinement chain, e.g. '3>1,2>1,1,1'");
  cmd_construct->add_option("--budget", con_budgets, "per-pattern budget PATTERN=INT");
  auto* con_u = cmd_construct->add_option("--uniform-budget", con_uniform, "budget for every pattern");
  cmd_construct->add_option("--out", con_out, "output matching file");
  cmd_construct->add_flag("--verify", con_verify, "re-check clique caps after building");
  cmd_construct->add_option("--threads", con_threads, "worker cap")->check(CLI::PositiveNumber);
  cmd_construct->callback([&]() {
    code = run_construct(con_r, con_chain, con_budgets,
                         con_u->count() ? std::optional<std::int64_t>(con_uniform) : std::nullopt,
                         con_out, con_verify, con_threads, as_json);
  });

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "exact clique report for a matching file");
  std::string ana_input, ana_out;
  int ana_threads = 1;
  bool ana_force = false;
  cmd_analyze->add_option("--input", ana_input, "matching file")->required();
  cmd_analyze->add_option("--threads", ana_threads, "worker cap")->check(CLI::PositiveNumber);
  cmd_analyze->add_flag("--force", ana_force, "lift the edge-count size guard");
  cmd_analyze->add_option("--out", ana_out, "also write the JSON report here");
  cmd_analyze->callback([&]() { code = run_analyze(ana_input, ana_threads, ana_force, ana_out, as_json); });

  // extract
  auto* cmd_extract = app.add_subcommand("extract", "recursively extract a large clique");
  std::string ext_input;
  std::int64_t ext_target = 1;
  bool ext_trace = false;
  cmd_extract->add_option("--input", ext_input, "matching file")->required();
  cmd_extract->add_option("--target-m", ext_target, "cap m; guaranteed size m+1 on large inputs")
      ->required()->check(CLI::PositiveNumber);
  cmd_extract->add_flag("--trace", ext_trace, "include the recursion trace");
  cmd_extract->callback([&]() { code = run_extract(ext_input, ext_target, ext_trace, as_json); });

  // exact-l
  auto* cmd_exact = app.add_subcommand("exact-l", "exact Ramsey value by exhaustive enumeration");
  int exl_r = 2, exl_n = 1;
  std::int64_t exl_budget = 100000000;
  std::string exl_out;
  cmd_exact->add_option("--r", exl_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_exact->add_option("--n", exl_n, "edge count")->required()->check(CLI::PositiveNumber);
  cmd_exact->add_option("--budget", exl_budget, "enumeration budget")->check(CLI::PositiveNumber);
  cmd_exact->add_option("--out", exl_out, "witness matching file");
  cmd_exact->callback([&]() { code = run_exact_l(exl_r, exl_n, exl_budget, exl_out, as_json); });

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "bound checks on random instances");
  int swp_r = 2, swp_count = 1, swp_n = 1, swp_threads = 1;
  std::uint64_t swp_seed = 1;
  cmd_sweep->add_option("--r", swp_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_sweep->add_option("--count", swp_count, "instance count")->required()->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--n", swp_n, "edges per instance")->required()->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seed", swp_seed, "base seed")->required();
  cmd_sweep->add_option("--threads", swp_threads, "worker cap")->check(CLI::PositiveNumber);
  cmd_sweep->callback([&]() { code = run_sweep(swp_r, swp_count, swp_n, swp_seed, swp_threads, as_json); });

  // random
  auto* cmd_random = app.add_subcommand("random", "uniform random matching");
  int rnd_r = 2, rnd_n = 1;
  std::uint64_t rnd_seed = 1;
  std::string rnd_out;
  cmd_random->add_option("--r", rnd_r, "uniformity")->required()->check(CLI::Range(1, 16));
  cmd_random->add_option("--n", rnd_n, "edge count")->required()->check(CLI::PositiveNumber);
  cmd_random->add_option("--seed", rnd_seed, "seed")->required();
  cmd_random->add_option("--out", rnd_out, "output matching file");
  cmd_random->callback([&]() { code = run_random(rnd_r, rnd_n, rnd_seed, rnd_out, as_json); });

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "re-check a claimed clique report");
  std::string ver_input, ver_report;
  cmd_verify->add_option("--input", ver_input, "matching file")->required();
  cmd_verify->add_option("--report", ver_report, "clique report JSON file")->required();
  cmd_verify->callback([&]() { code = run_verify(ver_input, ver_report); });

  // let the global --json flag appear after a subcommand name as well
  for (CLI::App* sc : {cmd_patterns, cmd_bounds, cmd_construct, cmd_analyze,
                       cmd_extract, cmd_exact, cmd_sweep, cmd_random, cmd_verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
