#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cliquebounds/io.hpp"
#include "cliquebounds/oracles.hpp"
#include "cliquebounds/sequences.hpp"
#include "cliquebounds/weight.hpp"

namespace cliquebounds {

struct ReportOptions {
  bool exact = false;  // also compute φ and ω
  OracleLimits limits;
  std::size_t threads = 1;
};

/// Everything computed for one graph.
struct BoundRecord {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  Weight wei;
  Weight wei_independence;
  std::size_t r_alpha = 0;
  Justification alpha_just = Justification::clique_only;
  std::size_t r_beta = 0;
  Justification beta_just = Justification::clique_only;
  std::optional<std::size_t> phi;
  std::optional<std::size_t> omega;
  bool improved = false;  // r_alpha or r_beta exceeds ⌈W(G)⌉

  enum class Failure { none, load, parse, usage, oracle_limit };
  // Load/oracle failure for this graph; the remaining fields are partial.
  Failure failure = Failure::none;
  std::optional<std::string> error;
  // Description of the first violated inequality, if any.
  std::optional<std::string> violation;
};

/// Computes one record. Oracle cap errors become `error`; a broken
/// inequality becomes `violation`.
BoundRecord compute_record(const std::string& name, const Graph& g, const ReportOptions& options);

/// One record per source, in source order, regardless of `threads`. Sources
/// that fail to load yield a record with only `name`, `failure` and `error`
/// set.
std::vector<BoundRecord> run_report(const std::vector<GraphSource>& sources,
                                    const ReportOptions& options);

/// Checks ω >= r_alpha, ω >= r_beta, ω >= φ >= W(G), r >= W(G) for theorem
/// certificates. Returns the first failure.
std::optional<std::string> check_consistency(const BoundRecord& record);

void write_table(std::ostream& out, const std::vector<BoundRecord>& records);
/// Header plus one row per record, columns
/// name,n,m,wei_num,wei_den,indep_num,indep_den,r_alpha,alpha_just,r_beta,
/// beta_just,phi,omega,improved. Values not computed are empty.
void write_csv(std::ostream& out, const std::vector<BoundRecord>& records);
void write_jsonl(std::ostream& out, const std::vector<BoundRecord>& records);

struct SweepOptions {
  std::size_t n = 12;
  double p = 0.3;
  std::size_t count = 200;
  std::uint64_t seed = 1;
};

/// Random-ensemble statistics for how often the sequence bounds beat ⌈W(G)⌉.
struct SweepResult {
  SweepOptions options;
  std::size_t instances = 0;
  std::size_t improved_alpha = 0;
  std::size_t improved_beta = 0;
  std::size_t improved_any = 0;
  double improvement_fraction() const {
    return instances == 0 ? 0.0 : static_cast<double>(improved_any) / static_cast<double>(instances);
  }
};

/// Instance i is gnp(n, p) with the i-th output of mt19937_64(seed) as its
/// seed.
SweepResult run_sweep(const SweepOptions& options);

void write_sweep(std::ostream& out, const SweepResult& result, bool json);

}  // namespace cliquebounds
