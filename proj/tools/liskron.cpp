#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liskron/cache_io.hpp"
#include "liskron/characters.hpp"
#include "liskron/errors.hpp"
#include "liskron/kronecker.hpp"
#include "liskron/partition.hpp"
#include "liskron/report.hpp"
#include "liskron/rsk.hpp"
#include "liskron/schur.hpp"
#include "liskron/verify.hpp"

namespace {

using namespace liskron;
using nlohmann::ordered_json;

// Bounds the subcommands enforce. --force lifts the working caps to the
// hard library limits; the exhaustive census limit is never lifted.
constexpr int kDefaultTableCap = 12;
constexpr int kForcedHookCensusMax = 100;

int table_limit(bool force) {
  return force ? kDefaultCharacterMax : kDefaultTableCap;
}
int hook_limit(bool force) {
  return force ? kForcedHookCensusMax : kDefaultHookCensusMax;
}

struct Args {
  // common
  std::string format;  // empty = auto (text on a terminal, json when piped)
  std::string output;
  std::string cache_dir = "./.liskron-cache";
  unsigned threads = 0;  // 0 = machine parallelism
  bool force = false;

  // per subcommand
  int n = 0;
  int n_max = 10;
  int k = 0;
  int l = 0;
  std::string lambda, mu, nu;
  std::string perm;
  std::string census_method = "hook";
  std::string product_method = "table";
  std::uint64_t seed = 0;
  std::int64_t trials = 1000;
  bool tensor_all = false;
  bool dimensions_only = false;
};

std::string effective_format(const Args& args) {
  if (!args.format.empty()) return args.format;
  if (!args.output.empty()) return "json";
  return isatty(fileno(stdout)) ? "text" : "json";
}

// stdout by default, or the --output file opened for binary write.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return out_ ? *out_ : std::cout; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

void reject_format(const std::string& format, const std::string& subcommand) {
  throw DomainError("format '" + format + "' is not available for " +
                    subcommand);
}

// Loads the character table for n from the cache, or builds and caches it.
CharacterTable obtain_table(int n, const Args& args) {
  const int cap = table_limit(args.force);
  if (auto cached = load_character_cache(n, args.cache_dir, cap)) {
    return std::move(*cached);
  }
  CharacterTable table = CharacterTable::build(n, args.threads, cap);
  save_cache(table, args.cache_dir);
  return table;
}

// Loads the Kronecker tensor for n from the cache, or computes and caches it.
KroneckerCache obtain_tensor(int n, const CharacterTable& table,
                             const Args& args) {
  if (auto cached = load_kronecker_cache(n, args.cache_dir, table)) {
    return std::move(*cached);
  }
  KroneckerCache cache = kronecker_tensor(n, table, args.threads);
  save_cache(cache, args.cache_dir);
  return cache;
}

Partition parse_shape_flag(const std::string& text, const char* flag, int n) {
  if (text.empty()) {
    throw DomainError(std::string("missing required option ") + flag);
  }
  Partition shape = Partition::parse(text);
  if (shape.n() != n) {
    throw DomainError(std::string(flag) + "=" + text + " is a partition of " +
                      std::to_string(shape.n()) + ", not of n = " +
                      std::to_string(n));
  }
  return shape;
}

std::string schur_text(const SchurVector& vec) {
  if (vec.is_zero()) return "0";
  std::string out;
  for (const auto& [shape, coeff] : vec.terms()) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) out += to_decimal(coeff) + "*";
    out += "s(" + shape.str() + ")";
  }
  return out;
}

// ---- subcommand handlers -------------------------------------------------

int run_census(const Args& args) {
  CensusTable census;
  if (args.census_method == "exhaustive") {
    census = census_exhaustive(args.n, args.threads);
  } else {
    census = census_hook(args.n, hook_limit(args.force));
  }
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "csv") {
    write_census_csv(sink.stream(), census);
  } else if (format == "json") {
    ordered_json doc;
    doc["n"] = census.n;
    doc["method"] =
        census.method == CensusMethod::exhaustive ? "exhaustive" : "hook";
    doc["counts"] = ordered_json::array();
    for (int k = 1; k <= census.n; ++k) {
      doc["counts"].push_back(to_decimal(census.a(k)));
    }
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "census n = " << census.n << " ("
                  << (census.method == CensusMethod::exhaustive ? "exhaustive"
                                                                : "hook")
                  << ")\n";
    Int total = 0;
    for (int k = 1; k <= census.n; ++k) {
      sink.stream() << "  k = " << k << ": " << census.a(k) << '\n';
      total += census.a(k);
    }
    sink.stream() << "  total = " << total << '\n';
  }
  return 0;
}

int run_char_table(const Args& args) {
  CharacterTable table = obtain_table(args.n, args);
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "csv") {
    write_character_csv(sink.stream(), table);
  } else if (format == "json") {
    ordered_json doc;
    doc["n"] = table.n();
    doc["classes"] = ordered_json::array();
    for (const auto& cls : table.classes()) {
      doc["classes"].push_back(cls.cycle_type.str());
    }
    doc["rows"] = ordered_json::array();
    for (std::size_t r = 0; r < table.shapes().size(); ++r) {
      ordered_json row;
      row["shape"] = table.shapes()[r].str();
      row["values"] = ordered_json::array();
      for (std::size_t c = 0; c < table.classes().size(); ++c) {
        row["values"].push_back(to_decimal(table.value(r, c)));
      }
      doc["rows"].push_back(std::move(row));
    }
    sink.stream() << doc.dump(2) << '\n';
  } else {
    sink.stream() << "character table n = " << table.n()
                  << " (rows: shapes, columns: classes, identity first)\n";
    for (std::size_t r = 0; r < table.shapes().size(); ++r) {
      sink.stream() << "  [" << table.shapes()[r].str() << "]";
      for (std::size_t c = 0; c < table.classes().size(); ++c) {
        sink.stream() << ' ' << table.value(r, c);
      }
      sink.stream() << '\n';
    }
  }
  return 0;
}

int run_kronecker(const Args& args) {
  CharacterTable table = obtain_table(args.n, args);
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (args.tensor_all) {
    KroneckerCache cache = obtain_tensor(args.n, table, args);
    if (format == "text") {
      sink.stream() << "kronecker tensor n = " << cache.n() << ": "
                    << cache.size() << " canonical triples (cached in "
                    << args.cache_dir << ")\n";
    } else if (format == "json") {
      write_kronecker_ndjson(sink.stream(), cache);
    } else {
      reject_format(format, "kronecker --all");
    }
    return 0;
  }
  const Partition lambda = parse_shape_flag(args.lambda, "--lambda", args.n);
  const Partition mu = parse_shape_flag(args.mu, "--mu", args.n);
  const Partition nu = parse_shape_flag(args.nu, "--nu", args.n);
  const Int g = kronecker_coefficient(lambda, mu, nu, table);
  if (format == "json") {
    ordered_json doc;
    doc["n"] = args.n;
    doc["lambda"] = lambda.str();
    doc["mu"] = mu.str();
    doc["nu"] = nu.str();
    doc["g"] = to_decimal(g);
    sink.stream() << doc.dump(2) << '\n';
  } else if (format == "text") {
    sink.stream() << g << '\n';
  } else {
    reject_format(format, "kronecker");
  }
  return 0;
}

int run_product(const Args& args) {
  CharacterTable table = obtain_table(args.n, args);
  const Partition lambda = parse_shape_flag(args.lambda, "--lambda", args.n);
  const Partition mu = parse_shape_flag(args.mu, "--mu", args.n);
  SchurVector result(args.n);
  if (args.product_method == "cache") {
    KroneckerCache cache = obtain_tensor(args.n, table, args);
    result = kronecker_product(SchurVector::single(lambda),
                               SchurVector::single(mu), cache);
  } else {
    result = kronecker_product(SchurVector::single(lambda),
                               SchurVector::single(mu), table, args.threads);
  }
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "json") {
    write_schur_json(sink.stream(), result);
  } else if (format == "text") {
    sink.stream() << "s(" << lambda.str() << ") * s(" << mu.str()
                  << ") = " << schur_text(result) << '\n';
  } else {
    reject_format(format, "product");
  }
  return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const Args& args) {
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "json") {
    if (reports.size() == 1) {
      sink.stream() << reports.front().to_json().dump(2) << '\n';
    } else {
      ordered_json doc = ordered_json::array();
      for (const auto& report : reports) doc.push_back(report.to_json());
      sink.stream() << doc.dump(2) << '\n';
    }
  } else if (format == "text") {
    for (const auto& report : reports) sink.stream() << report.to_text();
  } else {
    reject_format(format, "verify");
  }
  for (const auto& report : reports) {
    if (report.status != VerifyStatus::verified) return 1;
  }
  return 0;
}

int run_verify_single(const std::string& target, const Args& args) {
  VerificationReport report;
  if (target == "c1") {
    report = verify_c1(args.n, hook_limit(args.force));
  } else if (target == "ineq3") {
    report = verify_ineq3(args.n, hook_limit(args.force));
  } else if (target == "c3") {
    report = verify_c3(args.n, obtain_table(args.n, args), args.threads);
  } else if (target == "c4") {
    report = verify_c4(args.n, obtain_table(args.n, args), args.threads);
  } else if (target == "t1") {
    report = args.dimensions_only
                 ? verify_t1_dimensions(args.n)
                 : verify_t1(args.n, obtain_table(args.n, args), args.threads);
  } else {  // es
    report = erdos_szekeres_check(args.k, args.l);
  }
  return emit_reports({report}, args);
}

// The full chain for n = 3..n_max, plus the exhaustive Erdos-Szekeres
// sweep. Counterexamples never stop the run; only internal errors do.
int run_verify_all(const Args& args) {
  std::vector<VerificationReport> reports;
  const int census_cap = std::min(args.n_max, hook_limit(args.force));
  const int table_cap = std::min(args.n_max, table_limit(args.force));
  for (int n = 3; n <= census_cap; ++n) {
    reports.push_back(verify_c1(n, hook_limit(args.force)));
    reports.push_back(verify_ineq3(n, hook_limit(args.force)));
    if (n <= table_cap) {
      CharacterTable table = obtain_table(n, args);
      reports.push_back(verify_c3(n, table, args.threads));
      reports.push_back(verify_c4(n, table, args.threads));
      reports.push_back(verify_t1(n, table, args.threads));
      if (n <= 10) reports.push_back(cross_sum_check(n, table, args.threads));
    }
  }
  for (int k = 2; (k - 1) + 1 <= 9; ++k) {
    for (int l = 2; (k - 1) * (l - 1) + 1 <= 9; ++l) {
      reports.push_back(erdos_szekeres_check(k, l));
    }
  }
  return emit_reports(reports, args);
}

int run_sample_lis(const Args& args) {
  LisSampleSummary summary =
      sample_lis(args.n, args.trials, args.seed, args.threads);
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "json") {
    write_sample_json(sink.stream(), summary);
  } else if (format == "text") {
    char mean_text[64], stddev_text[64];
    std::snprintf(mean_text, sizeof mean_text, "%.6f", summary.mean);
    std::snprintf(stddev_text, sizeof stddev_text, "%.6f", summary.stddev);
    sink.stream() << "sample-lis n = " << summary.n << ", trials = "
                  << summary.trials << ", seed = " << summary.seed << '\n'
                  << "  mean   = " << mean_text << '\n'
                  << "  stddev = " << stddev_text << '\n';
    for (const auto& [length, count] : summary.histogram) {
      sink.stream() << "  " << length << ": " << count << '\n';
    }
  } else {
    reject_format(format, "sample-lis");
  }
  return 0;
}

ordered_json tableau_json(const Tableau& tableau) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : tableau.rows) rows.push_back(row);
  return rows;
}

int run_rsk(const Args& args) {
  const Permutation pi = Permutation::parse(args.perm);
  const TableauPair pair = rsk(pi);
  OutputSink sink(args.output);
  const std::string format = effective_format(args);
  if (format == "json") {
    ordered_json doc;
    doc["perm"] = pi.str();
    doc["shape"] = pair.shape.str();
    doc["p"] = tableau_json(pair.p);
    doc["q"] = tableau_json(pair.q);
    doc["lis"] = lis_length(pi);
    doc["lds"] = lds_length(pi);
    sink.stream() << doc.dump(2) << '\n';
  } else if (format == "text") {
    sink.stream() << "permutation " << pi.str() << '\n'
                  << "shape " << pair.shape.str() << ", lis " << lis_length(pi)
                  << ", lds " << lds_length(pi) << '\n';
    sink.stream() << "P:\n";
    for (const auto& row : pair.p.rows) {
      sink.stream() << " ";
      for (int value : row) sink.stream() << ' ' << value;
      sink.stream() << '\n';
    }
    sink.stream() << "Q:\n";
    for (const auto& row : pair.q.rows) {
      sink.stream() << " ";
      for (int value : row) sink.stream() << ' ' << value;
      sink.stream() << '\n';
    }
  } else {
    reject_format(format, "rsk");
  }
  return 0;
}

int run_validate_table(const Args& args) {
  CharacterTable table = obtain_table(args.n, args);
  return emit_reports({validate_table(table)}, args);
}

void add_common_options(CLI::App* cmd, Args& args, bool with_cache = true) {
  cmd->add_option("--format", args.format,
                  "Output format: json, csv, or text (default: text on a "
                  "terminal, json when piped)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", args.output, "Write to this file, not stdout");
  cmd->add_option("--threads", args.threads,
                  "Worker threads, 0 = machine parallelism");
  cmd->add_flag("--force", args.force,
                "Lift default n caps to the hard limits");
  if (with_cache) {
    cmd->add_option("--cache-dir", args.cache_dir,
                    "Directory for character/Kronecker caches");
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{
      "liskron: exact increasing-subsequence census, symmetric-group "
      "characters, Kronecker coefficients, and verification sweeps"};
  app.require_subcommand(1);
  Args args;

  CLI::App* census = app.add_subcommand(
      "census", "Count permutations of n by longest increasing subsequence");
  census->add_option("--n", args.n, "Permutation size")->required();
  census->add_option("--method", args.census_method,
                     "hook (fast, exact) or exhaustive (n <= 10)")
      ->check(CLI::IsMember({"hook", "exhaustive"}));
  add_common_options(census, args, /*with_cache=*/false);

  CLI::App* char_table =
      app.add_subcommand("char-table", "Exact character table of S_n");
  char_table->add_option("--n", args.n, "Group degree")->required();
  add_common_options(char_table, args);

  CLI::App* kronecker = app.add_subcommand(
      "kronecker", "Kronecker coefficient g(lambda, mu; nu), or the full "
                   "tensor with --all");
  kronecker->add_option("--n", args.n, "Degree")->required();
  kronecker->add_option("--lambda", args.lambda, "First shape, e.g. 2,1");
  kronecker->add_option("--mu", args.mu, "Second shape");
  kronecker->add_option("--nu", args.nu, "Result shape");
  kronecker->add_flag("--all", args.tensor_all,
                      "Compute and cache every canonical triple");
  add_common_options(kronecker, args);

  CLI::App* product = app.add_subcommand(
      "product", "Kronecker product of two Schur functions");
  product->add_option("--n", args.n, "Degree")->required();
  product->add_option("--lambda", args.lambda, "First shape")->required();
  product->add_option("--mu", args.mu, "Second shape")->required();
  product->add_option("--method", args.product_method,
                      "table (character sums) or cache (stored tensor)")
      ->check(CLI::IsMember({"table", "cache"}));
  add_common_options(product, args);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification target and report witnesses");
  verify->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> verify_subs;
  for (const char* name : {"c1", "ineq3", "c3", "c4", "t1"}) {
    CLI::App* sub = verify->add_subcommand(name);
    sub->add_option("--n", args.n, "Degree")->required();
    if (std::string(name) == "t1") {
      sub->add_flag("--dimensions-only", args.dimensions_only,
                    "Check only the dimension identities (n up to 1024)");
    }
    add_common_options(sub, args);
    verify_subs.emplace_back(name, sub);
  }
  CLI::App* verify_es = verify->add_subcommand("es");
  verify_es->add_option("--k", args.k, "Increasing run length")->required();
  verify_es->add_option("--l", args.l, "Decreasing run length")->required();
  add_common_options(verify_es, args, /*with_cache=*/false);
  verify_subs.emplace_back("es", verify_es);
  CLI::App* verify_all = verify->add_subcommand("all");
  verify_all->add_option("--n-max", args.n_max,
                         "Run the whole chain for every n up to this");
  add_common_options(verify_all, args);

  CLI::App* sample = app.add_subcommand(
      "sample-lis", "Monte Carlo LIS lengths of uniform permutations");
  sample->add_option("--n", args.n, "Permutation size")->required();
  sample->add_option("--trials", args.trials, "Number of samples");
  sample->add_option("--seed", args.seed, "Master RNG seed");
  add_common_options(sample, args, /*with_cache=*/false);

  CLI::App* rsk_cmd = app.add_subcommand(
      "rsk", "Insertion/recording tableaux of one permutation");
  rsk_cmd->add_option("--perm", args.perm, "One-line notation, e.g. 3,1,4,2")
      ->required();
  add_common_options(rsk_cmd, args, /*with_cache=*/false);

  CLI::App* validate = app.add_subcommand(
      "validate-table", "Orthogonality and border checks of a character table");
  validate->add_option("--n", args.n, "Group degree")->required();
  add_common_options(validate, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (census->parsed()) return run_census(args);
  if (char_table->parsed()) return run_char_table(args);
  if (kronecker->parsed()) return run_kronecker(args);
  if (product->parsed()) return run_product(args);
  if (verify->parsed()) {
    for (const auto& [name, sub] : verify_subs) {
      if (sub->parsed()) return run_verify_single(name, args);
    }
    return run_verify_all(args);
  }
  if (sample->parsed()) return run_sample_lis(args);
  if (rsk_cmd->parsed()) return run_rsk(args);
  if (validate->parsed()) return run_validate_table(args);
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const CacheCorruptError& e) {
    std::cerr << "error: corrupt cache at line " << e.line() << ": "
              << e.what() << '\n';
    return 3;
  } catch (const InternalArithmeticError& e) {
    std::cerr << "internal arithmetic error: " << e.what() << '\n';
    return 3;
  } catch (const CacheVersionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PrecomputationRequiredError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
