#include "cliquebounds/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cliquebounds/bounds.hpp"
#include "cliquebounds/error.hpp"
#include "cliquebounds/generators.hpp"

namespace cliquebounds {
namespace {

Weight as_weight(std::size_t v) { return Weight(static_cast<std::int64_t>(v)); }

std::string optional_count(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

// Labels may contain commas or quotes; everything else is numeric or a tag.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::optional<std::string> check_consistency(const BoundRecord& rec) {
  if (rec.n == 0) return std::nullopt;
  const auto below_w = [&](std::size_t r) { return as_weight(r) < rec.wei; };
  if (rec.alpha_just != Justification::clique_only && below_w(rec.r_alpha))
    return "r_alpha = " + std::to_string(rec.r_alpha) + " < W(G) = " + rec.wei.str();
  if (rec.beta_just != Justification::clique_only && below_w(rec.r_beta))
    return "r_beta = " + std::to_string(rec.r_beta) + " < W(G) = " + rec.wei.str();
  if (rec.omega) {
    if (*rec.omega < rec.r_alpha) return "omega < r_alpha";
    if (*rec.omega < rec.r_beta) return "omega < r_beta";
    if (below_w(*rec.omega)) return "omega < W(G)";
    if (rec.phi && *rec.omega < *rec.phi) return "omega < phi";
  }
  if (rec.phi) {
    if (below_w(*rec.phi)) return "phi < W(G)";
    if (rec.alpha_just == Justification::theorem_1 && *rec.phi > rec.r_alpha)
      return "phi > r_alpha for a THEOREM_1 certificate";
  }
  return std::nullopt;
}

BoundRecord compute_record(const std::string& name, const Graph& g, const ReportOptions& options) {
  BoundRecord rec;
  rec.name = name;
  rec.n = g.order();
  rec.m = g.edge_count();
  if (g.order() == 0) {
    rec.failure = BoundRecord::Failure::usage;
    rec.error = "empty graph";
    return rec;
  }
  try {
    rec.wei = wei_bound(g);
    rec.wei_independence = wei_independence_bound(g);
    const auto alpha = certify_alpha_bound(g);
    const auto beta = certify_beta_bound(g);
    rec.r_alpha = alpha.r();
    rec.alpha_just = alpha.justification();
    rec.r_beta = beta.r();
    rec.beta_just = beta.justification();
    const auto ceil_w = rec.wei.ceil();
    rec.improved = ceil_w < rec.r_alpha || ceil_w < rec.r_beta;
    if (rec.wei_independence != wei_bound(complement(g)))
      rec.violation = "independence bound differs from W(complement)";

    if (options.exact) {
      try {
        rec.omega = clique_number_exact(g, options.limits);
        rec.phi = phi_exact(g, options.limits).phi;
      } catch (const OracleLimitError& e) {
        rec.failure = BoundRecord::Failure::oracle_limit;
        rec.error = e.what();
      }
    }
  } catch (const InvariantViolation& e) {
    rec.violation = e.what();
    return rec;
  }
  if (!rec.violation) rec.violation = check_consistency(rec);
  return rec;
}

std::vector<BoundRecord> run_report(const std::vector<GraphSource>& sources,
                                    const ReportOptions& options) {
  std::vector<BoundRecord> records(sources.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) {
      BoundRecord& rec = records[i];
      try {
        const LoadedGraph loaded = load(sources[i]);
        rec = compute_record(loaded.name, loaded.graph, options);
      } catch (const ParseError& e) {
        rec.name = sources[i].name();
        rec.failure = BoundRecord::Failure::parse;
        rec.error = e.what();
      } catch (const UsageError& e) {
        rec.name = sources[i].name();
        rec.failure = BoundRecord::Failure::usage;
        rec.error = e.what();
      } catch (const PreconditionError& e) {
        rec.name = sources[i].name();
        rec.failure = BoundRecord::Failure::usage;
        rec.error = e.what();
      } catch (const std::runtime_error& e) {
        rec.name = sources[i].name();
        rec.failure = BoundRecord::Failure::load;
        rec.error = e.what();
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(sources.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

void write_table(std::ostream& out, const std::vector<BoundRecord>& records) {
  out << std::left << std::setw(28) << "graph" << std::right << std::setw(5) << "n" << std::setw(7)
      << "m"
      << "  " << std::left << std::setw(24) << "W(G)" << std::setw(24) << "indep bound"
      << std::right << std::setw(8) << "r_alpha" << "  " << std::left << std::setw(12) << "alpha_just"
      << std::right << std::setw(7) << "r_beta" << "  " << std::left << std::setw(12) << "beta_just"
      << std::right << std::setw(5) << "phi" << std::setw(7) << "omega" << "  improved\n";
  for (const auto& rec : records) {
    if (rec.error && rec.n == 0) {
      out << std::left << std::setw(28) << rec.name << "error: " << *rec.error << '\n';
      continue;
    }
    out << std::left << std::setw(28) << rec.name << std::right << std::setw(5) << rec.n
        << std::setw(7) << rec.m << "  " << std::left << std::setw(24) << rec.wei.display()
        << std::setw(24) << rec.wei_independence.display() << std::right << std::setw(8)
        << rec.r_alpha << "  " << std::left << std::setw(12) << to_string(rec.alpha_just)
        << std::right << std::setw(7) << rec.r_beta << "  " << std::left << std::setw(12)
        << to_string(rec.beta_just) << std::right << std::setw(5)
        << (rec.phi ? std::to_string(*rec.phi) : "-") << std::setw(7)
        << (rec.omega ? std::to_string(*rec.omega) : "-") << "  " << (rec.improved ? "yes" : "no")
        << '\n';
    if (rec.error) out << "  note: " << *rec.error << '\n';
    if (rec.violation) out << "  VIOLATION: " << *rec.violation << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<BoundRecord>& records) {
  out << "name,n,m,wei_num,wei_den,indep_num,indep_den,r_alpha,alpha_just,r_beta,beta_just,phi,"
         "omega,improved\n";
  for (const auto& rec : records) {
    out << csv_field(rec.name) << ',';
    if (rec.n == 0) {
      out << ",,,,,,,,,,,,\n";
      continue;
    }
    out << rec.n << ',' << rec.m << ',' << rec.wei.numerator_string() << ','
        << rec.wei.denominator_string() << ',' << rec.wei_independence.numerator_string() << ','
        << rec.wei_independence.denominator_string() << ',' << rec.r_alpha << ','
        << to_string(rec.alpha_just) << ',' << rec.r_beta << ',' << to_string(rec.beta_just) << ','
        << optional_count(rec.phi) << ',' << optional_count(rec.omega) << ','
        << (rec.improved ? "true" : "false") << '\n';
  }
}

void write_jsonl(std::ostream& out, const std::vector<BoundRecord>& records) {
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["name"] = rec.name;
    if (rec.n > 0) {
      j["n"] = rec.n;
      j["m"] = rec.m;
      j["wei_num"] = rec.wei.numerator_string();
      j["wei_den"] = rec.wei.denominator_string();
      j["indep_num"] = rec.wei_independence.numerator_string();
      j["indep_den"] = rec.wei_independence.denominator_string();
      j["r_alpha"] = rec.r_alpha;
      j["alpha_just"] = to_string(rec.alpha_just);
      j["r_beta"] = rec.r_beta;
      j["beta_just"] = to_string(rec.beta_just);
      j["phi"] = rec.phi ? nlohmann::ordered_json(*rec.phi) : nlohmann::ordered_json(nullptr);
      j["omega"] = rec.omega ? nlohmann::ordered_json(*rec.omega) : nlohmann::ordered_json(nullptr);
      j["improved"] = rec.improved;
    }
    if (rec.error) j["error"] = *rec.error;
    if (rec.violation) j["violation"] = *rec.violation;
    out << j.dump() << '\n';
  }
}

SweepResult run_sweep(const SweepOptions& options) {
  SweepResult result;
  result.options = options;
  std::mt19937_64 seeds(options.seed);
  for (std::size_t i = 0; i < options.count; ++i) {
    const Graph g = gnp_graph(options.n, options.p, seeds());
    if (g.order() == 0) continue;
    const auto ceil_w = wei_bound(g).ceil();
    const bool alpha = ceil_w < certify_alpha_bound(g).r();
    const bool beta = ceil_w < certify_beta_bound(g).r();
    ++result.instances;
    result.improved_alpha += alpha;
    result.improved_beta += beta;
    result.improved_any += alpha || beta;
  }
  return result;
}

void write_sweep(std::ostream& out, const SweepResult& result, bool json) {
  const auto& o = result.options;
  if (json) {
    nlohmann::ordered_json j{{"n", o.n},
                             {"p", o.p},
                             {"count", o.count},
                             {"seed", o.seed},
                             {"instances", result.instances},
                             {"improved_alpha", result.improved_alpha},
                             {"improved_beta", result.improved_beta},
                             {"improved_any", result.improved_any},
                             {"improvement_fraction", result.improvement_fraction()}};
    out << j.dump() << '\n';
    return;
  }
  out << "G(" << o.n << ", " << o.p << ") x " << o.count << ", seed " << o.seed << '\n'
      << "  instances:            " << result.instances << '\n'
      << "  r_alpha > ceil(W):    " << result.improved_alpha << '\n'
      << "  r_beta  > ceil(W):    " << result.improved_beta << '\n'
      << "  either:               " << result.improved_any << '\n'
      << "  improvement fraction: " << std::fixed << std::setprecision(4)
      << result.improvement_fraction() << '\n';
}

}  // namespace cliquebounds
