// cliquebounds: degree-sequence lower bounds on the clique number.
//
//   cliquebounds bound  [FILE...] [--gen SPEC]...   W(G) and greedy sequence bounds
//   cliquebounds exact  [FILE...] [--gen SPEC]...   adds exact phi and omega
//   cliquebounds gen    SPEC                        print a generated graph
//   cliquebounds sweep  --n N --p P --count K       G(n,p) improvement statistics
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant violation.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquebounds/error.hpp"
#include "cliquebounds/generators.hpp"
#include "cliquebounds/io.hpp"
#include "cliquebounds/report.hpp"

namespace cb = cliquebounds;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;

struct ReportArgs {
  std::vector<std::string> files;
  std::vector<std::string> generators;
  std::uint64_t seed = 0;
  std::string format = "auto";
  std::string output = "table";
  std::size_t threads = 1;
  std::size_t phi_cap = 0;
};

void add_report_options(CLI::App* cmd, ReportArgs& args) {
  cmd->add_option("files", args.files, "Graph files (DIMACS or edge list)");
  cmd->add_option("-g,--gen", args.generators,
                  "Generator spec, e.g. turan:9,3 or gnp:12,0.3 (repeatable)");
  cmd->add_option("-s,--seed", args.seed, "Seed for gnp specs without an explicit seed");
  cmd->add_option("-f,--format", args.format, "Input format")
      ->check(CLI::IsMember({"auto", "dimacs", "edges"}));
  cmd->add_option("-o,--output", args.output, "Output format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));
  cmd->add_option("-j,--threads", args.threads, "Worker threads")->check(CLI::PositiveNumber);
}

std::size_t phi_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("CLIQUE_BOUNDS_PHI_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(env, &used);
    if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw cb::UsageError(std::string("CLIQUE_BOUNDS_PHI_CAP must be a positive integer, got '") +
                         env + "'");
  }
}

int run_report_command(const ReportArgs& args, bool exact) {
  std::vector<cb::GraphSource> sources;
  for (const auto& file : args.files) {
    cb::FileSource src{file, std::nullopt};
    if (args.format == "dimacs") src.format = cb::GraphFormat::dimacs;
    if (args.format == "edges") src.format = cb::GraphFormat::edge_list;
    sources.push_back({src});
  }
  for (const auto& spec : args.generators) sources.push_back({cb::GeneratorSpec::parse(spec, args.seed)});
  if (sources.empty()) throw cb::UsageError("no input graphs (give files or --gen)");

  cb::ReportOptions options;
  options.exact = exact;
  options.threads = args.threads;
  options.limits.max_n_phi = args.phi_cap != 0 ? args.phi_cap : phi_cap_from_env(options.limits.max_n_phi);
  options.limits.max_n_clique = std::max(options.limits.max_n_clique, options.limits.max_n_phi);

  const auto records = cb::run_report(sources, options);
  if (args.output == "csv") {
    cb::write_csv(std::cout, records);
  } else if (args.output == "jsonl") {
    cb::write_jsonl(std::cout, records);
  } else {
    cb::write_table(std::cout, records);
  }

  int status = 0;
  for (const auto& rec : records) {
    if (rec.violation) {
      std::cerr << "invariant violation on " << rec.name << ": " << *rec.violation << '\n';
      status = kExitViolation;
    }
    if (!rec.error) continue;
    std::cerr << rec.name << ": " << *rec.error << '\n';
    if (status == kExitViolation) continue;
    if (rec.failure == cb::BoundRecord::Failure::parse) status = kExitParse;
    if (rec.failure == cb::BoundRecord::Failure::usage || rec.failure == cb::BoundRecord::Failure::load)
      status = std::max(status, kExitUsage);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sequence lower bounds on the clique number"};
  app.require_subcommand(1);

  ReportArgs bound_args;
  auto* bound = app.add_subcommand("bound", "W(G), the independence bound and sequence bounds");
  add_report_options(bound, bound_args);

  ReportArgs exact_args;
  auto* exact = app.add_subcommand("exact", "As bound, plus exact phi(G) and omega(G)");
  add_report_options(exact, exact_args);
  exact->add_option("--phi-cap", exact_args.phi_cap,
                    "Vertex cap for the exact phi oracle (default 12, env CLIQUE_BOUNDS_PHI_CAP)");

  std::string gen_spec;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "dimacs";
  auto* gen = app.add_subcommand("gen", "Print a generated graph");
  gen->add_option("spec", gen_spec, "Generator spec, e.g. petersen or complete_multipartite:2,2,2")
      ->required();
  gen->add_option("-s,--seed", gen_seed, "Seed for gnp");
  gen->add_option("-f,--format", gen_format, "Output format")
      ->check(CLI::IsMember({"dimacs", "edges"}));

  cb::SweepOptions sweep_opts;
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "Fraction of G(n,p) graphs where a sequence beats ceil(W)");
  sweep->add_option("-n,--n", sweep_opts.n, "Vertices")->check(CLI::PositiveNumber);
  sweep->add_option("-p,--p", sweep_opts.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("-c,--count", sweep_opts.count, "Instances");
  sweep->add_option("-s,--seed", sweep_opts.seed, "Ensemble seed");
  sweep->add_flag("--json", sweep_json, "Emit one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*bound) return run_report_command(bound_args, false);
    if (*exact) return run_report_command(exact_args, true);
    if (*gen) {
      const cb::Graph g = cb::generate(cb::GeneratorSpec::parse(gen_spec, gen_seed));
      std::cout << (gen_format == "edges" ? cb::emit_edge_list(g) : cb::emit_dimacs(g));
      return 0;
    }
    if (*sweep) {
      cb::write_sweep(std::cout, cb::run_sweep(sweep_opts), sweep_json);
      return 0;
    }
  } catch (const cb::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const cb::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const cb::PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
