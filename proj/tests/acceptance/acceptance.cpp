// Acceptance suite: every inequality chain checked as exact rational
// comparisons against the exact oracles. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cliquebounds/bounds.hpp"
#include "cliquebounds/generators.hpp"
#include "cliquebounds/graph.hpp"
#include "cliquebounds/oracles.hpp"
#include "cliquebounds/report.hpp"
#include "cliquebounds/sequences.hpp"
#include "support/reference.hpp"

namespace cb = cliquebounds;

namespace {

using cb::Graph;
using cb::Weight;

Weight whole(std::size_t k) { return Weight(static_cast<std::int64_t>(k)); }

// Outcome of one criterion: failures counted, first few described.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(describe());
  }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& examples() const { return examples_; }

  std::string note;

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

struct Criterion {
  int id;
  const char* title;
  std::function<void(Tally&)> run;
};

// Ensemble for criteria 1-2: 1000 G(n, p), n in [2, 16], p in {0.2, 0.5, 0.8}.
std::vector<Graph> gnp_ensemble() {
  constexpr std::array<double, 3> ps{0.2, 0.5, 0.8};
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < 1000; ++i)
    out.push_back(cb::gnp_graph(2 + i % 15, ps[(i / 15) % 3], 1000 + i));
  return out;
}

// Ensemble for criteria 4-6: 300 graphs with n in [1, 10].
std::vector<Graph> small_ensemble() {
  constexpr std::array<double, 5> ps{0.15, 0.3, 0.5, 0.7, 0.85};
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < 300; ++i)
    out.push_back(cb::gnp_graph(1 + i % 10, ps[(i / 10) % 5], 5000 + i));
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.edge_count() << " edges:";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

void wei_inequality(Tally& t) {
  for (const Graph& g : gnp_ensemble()) {
    const auto omega = cb::clique_number_exact(g);
    const Weight w = cb::wei_bound(g);
    t.check(whole(omega) >= w, [&] { return "omega < W on " + describe(g); });
  }
}

void independence_form(Tally& t) {
  for (const Graph& g : gnp_ensemble()) {
    const auto alpha = cb::independence_number_exact(g);
    const Weight wi = cb::wei_independence_bound(g);
    t.check(whole(alpha) >= wi, [&] { return "alpha < indep bound on " + describe(g); });
    t.check(wi == cb::wei_bound(cb::complement(g)),
            [&] { return "duality broken on " + describe(g); });
  }
}

void delta_sets_weigh_at_most_one(Tally& t) {
  const auto all_subsets = [&](const Graph& g) {
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      const cb::VertexSet s = cb::ref::mask_to_set(n, mask);
      if (!cb::is_delta_set(g, s)) continue;
      t.check(cb::wei_weight(g, s) <= Weight(1),
              [&] { return "W(V) > 1 for mask " + std::to_string(mask) + " on " + describe(g); });
    }
  };
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (1ULL << pairs); ++code, ++graphs)
      all_subsets(cb::ref::graph_from_code(n, code));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t i = 0; i < 200; ++i, ++graphs)
      all_subsets(cb::gnp_graph(n, 0.1 + 0.8 * static_cast<double>(i % 9) / 8.0, 20000 + 1000 * n + i));
  }
  t.note = std::to_string(graphs) + " graphs";
}

void phi_at_least_wei(Tally& t) {
  for (const Graph& g : small_ensemble()) {
    const auto phi = cb::phi_exact(g).phi;
    t.check(whole(phi) >= cb::wei_bound(g), [&] { return "phi < W on " + describe(g); });
  }
}

void alpha_chain(Tally& t) {
  std::size_t certified = 0;
  for (const Graph& g : small_ensemble()) {
    const auto phi = cb::phi_exact(g).phi;
    const auto omega = cb::clique_number_exact(g);
    const Weight w = cb::wei_bound(g);
    const auto check_cert = [&](const cb::BoundCertificate& cert, const char* what) {
      if (cert.justification() != cb::Justification::theorem_1) return;
      ++certified;
      const std::size_t r = cert.r();
      t.check(phi <= r && r <= omega && whole(r) >= w, [&] {
        return std::string(what) + ": phi=" + std::to_string(phi) + " r=" + std::to_string(r) +
               " omega=" + std::to_string(omega) + " W=" + w.str() + " on " + describe(g);
      });
    };
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      check_cert(cb::certify_alpha_bound(g, cb::TieBreak::seeded(seed)), "maximal");
      const auto ext = cb::extend_to_delta_terminal(
          g, cb::VertexSequence::begin(g, cb::SequenceKind::alpha), cb::TieBreak::seeded(seed));
      if (auto cert = cb::certify_alpha_sequence(g, ext.sequence)) check_cert(*cert, "first δ-terminal");
    }
  }
  t.note = std::to_string(certified) + " THEOREM_1 certificates";
}

void beta_chain(Tally& t) {
  std::size_t prefixes = 0;
  for (const Graph& g : small_ensemble()) {
    const std::size_t n = g.order();
    const Weight w = cb::wei_bound(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto seq = cb::build_beta_sequence(g, cb::TieBreak::seeded(seed));
      std::size_t sum = 0;
      for (auto v : seq.vertices()) sum += g.degree(v);
      t.check(sum <= (seq.size() - 1) * n, [&] { return "degree sum exceeds (r-1)n on " + describe(g); });

      const auto cert = cb::certify_beta_bound(g, cb::TieBreak::seeded(seed));
      if (cert.justification() != cb::Justification::clique_only)
        t.check(whole(cert.r()) >= w, [&] { return "r < W for beta on " + describe(g); });

      // Every prefix that carries a certificate of its own.
      cb::VertexSequence prefix = cb::VertexSequence::begin(g, cb::SequenceKind::beta);
      auto policy = cb::TieBreak::seeded(seed);
      while (prefix.extend(g, policy)) {
        const auto pc = cb::certify_beta_sequence(g, prefix);
        if (!pc) continue;
        ++prefixes;
        t.check(whole(pc->r()) >= w, [&] { return "r < W for beta prefix on " + describe(g); });
      }
    }
  }
  t.note = std::to_string(prefixes) + " certified prefixes";
}

void turan_equality(Tally& t) {
  const cb::OracleLimits limits{64, 15};
  std::size_t equal_cases = 0;
  for (std::size_t r = 2; r <= 5; ++r) {
    for (std::size_t n = r; n <= 15; ++n) {
      const Graph g = cb::turan_graph(n, r);
      const Weight w = cb::wei_bound(g);
      const auto omega = cb::clique_number_exact(g, limits);
      const auto phi = cb::phi_exact(g, limits).phi;
      const auto label = [&] { return "T(" + std::to_string(n) + "," + std::to_string(r) + ")"; };
      if (n % r == 0) {
        ++equal_cases;
        t.check(w == whole(r) && phi == r && omega == r, [&] {
          return label() + ": W=" + w.str() + " phi=" + std::to_string(phi) +
                 " omega=" + std::to_string(omega);
        });
      } else {
        t.check(omega == r && phi <= omega && whole(phi) >= w, [&] { return label() + " chain broken"; });
      }
    }
  }
  t.note = std::to_string(equal_cases) + " divisible cases";
}

void strict_improvement(Tally& t) {
  const Graph g = cb::disjoint_union(cb::complete_graph(3), Graph::edgeless(3));
  const Weight w = cb::wei_bound(g);
  const auto cert = cb::certify_alpha_bound(g);
  t.check(w == Weight(5, 4), [&] { return "W = " + w.str(); });
  t.check(w.ceil() == 2, [&] { return "ceil(W) != 2"; });
  t.check(cert.r() == 3 && cert.justification() == cb::Justification::theorem_1,
          [&] { return "r_alpha = " + std::to_string(cert.r()); });

  const auto sweep = cb::run_sweep({12, 0.3, 200, 1});
  t.check(sweep.improvement_fraction() > 0.0, [] { return "sweep found no improvement"; });
  char buf[160];
  std::snprintf(buf, sizeof buf, "sweep G(12,0.3) x%zu seed 1: improvement fraction %.3f",
                sweep.instances, sweep.improvement_fraction());
  t.note = buf;
}

void fixture_values(Tally& t) {
  const auto expect = [&](const std::string& name, bool ok) { t.check(ok, [&] { return name; }); };
  {
    const Graph c5 = cb::cycle_graph(5);
    expect("C5 W", cb::wei_bound(c5) == Weight(5, 3));
    expect("C5 phi", cb::phi_exact(c5).phi == 2);
    expect("C5 omega", cb::clique_number_exact(c5) == 2);
    expect("C5 r_alpha", cb::certify_alpha_bound(c5).r() == 2);
    expect("C5 r_beta", cb::certify_beta_bound(c5).r() == 2);
  }
  {
    const Graph pet = cb::petersen_graph();
    expect("Petersen W", cb::wei_bound(pet) == Weight(10, 7));
    expect("Petersen omega", cb::clique_number_exact(pet) == 2);
  }
  {
    const std::size_t parts[] = {2, 2, 2};
    const Graph oct = cb::complete_multipartite(parts);
    expect("K222 W", cb::wei_bound(oct) == Weight(3));
    expect("K222 phi", cb::phi_exact(oct).phi == 3);
    expect("K222 omega", cb::clique_number_exact(oct) == 3);
  }
}

void oracle_self_validation(Tally& t) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Graph g = cb::gnp_graph(1 + i % 7, 0.05 + 0.9 * static_cast<double>(i % 11) / 10.0, 90000 + i);
    const auto fast = cb::clique_number_exact(g);
    const auto naive = cb::ref::naive_clique_number(g);
    t.check(fast == naive, [&] {
      return "branch-and-bound " + std::to_string(fast) + " vs naive " + std::to_string(naive) +
             " on " + describe(g);
    });
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Wei inequality omega >= W(G), 1000 G(n,p)", wei_inequality},
      {2, "independence form and duality, 1000 G(n,p)", independence_form},
      {3, "delta-sets have W(V) <= 1, all subsets n <= 6", delta_sets_weigh_at_most_one},
      {4, "phi >= W(G), 300 graphs n <= 10", phi_at_least_wei},
      {5, "alpha chain phi <= r <= omega, r >= W(G)", alpha_chain},
      {6, "beta degree-sum condition and r >= W(G)", beta_chain},
      {7, "Turan equality W = phi = omega = r", turan_equality},
      {8, "strict improvement witness and sweep", strict_improvement},
      {9, "fixture values C5, Petersen, K222", fixture_values},
      {10, "branch-and-bound omega vs naive, 500 graphs n <= 7", oracle_self_validation},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = crash.empty() && t.failures() == 0 && t.checks() > 0;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%zu checks, %zu violations, %.2fs)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.title, t.checks(), t.failures(), secs,
                t.note.empty() ? "" : " - ", t.note.c_str());
    if (!crash.empty()) std::printf("    exception: %s\n", crash.c_str());
    for (const auto& ex : t.examples()) std::printf("    %s\n", ex.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
