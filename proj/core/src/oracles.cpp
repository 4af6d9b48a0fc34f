#include "cliquebounds/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cliquebounds/error.hpp"

namespace cliquebounds {
namespace {

void require_cap(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw OracleLimitError("instance too large for exact oracle (n = " + std::to_string(g.order()) +
                           ", cap " + std::to_string(cap) + ")");
  }
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::size_t run() {
    best_ = g_.order() == 0 ? 0 : 1;
    expand(0, g_.all_vertices());
    return best_;
  }

 private:
  void expand(std::size_t size, VertexSet candidates) {
    if (candidates.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    for (Vertex v = candidates.first(); v < g_.order(); v = candidates.first()) {
      if (size + candidates.size() <= best_) return;
      expand(size + 1, candidates & g_.neighbors(v));
      candidates.erase(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

// Scaled Wei weights: scaled[v] = L / (n - d(v)) with L the lcm of all
// denominators, so block weights compare against L exactly in integers.
// Empty when L would overflow; the weight prune is then skipped.
std::optional<std::vector<std::uint64_t>> scaled_weights(const Graph& g, std::uint64_t& scale) {
  std::uint64_t l = 1;
  for (std::size_t d : g.degrees()) {
    const std::uint64_t den = g.order() - d;
    const std::uint64_t step = den / std::gcd(l, den);
    if (l > UINT64_MAX / step / (g.order() + 1)) return std::nullopt;
    l *= step;
  }
  scale = l;
  std::vector<std::uint64_t> out;
  for (std::size_t d : g.degrees()) out.push_back(l / (g.order() - d));
  return out;
}

class PartitionSearch {
 public:
  explicit PartitionSearch(const Graph& g) : g_(g), n_(g.order()), assignment_(n_, 0) {
    weights_ = scaled_weights(g, scale_);
    if (weights_) {
      suffix_weight_.assign(n_ + 1, 0);
      for (std::size_t v = n_; v-- > 0;) suffix_weight_[v] = suffix_weight_[v + 1] + (*weights_)[v];
    }
  }

  // True when V(G) splits into at most `r` δ-sets; the assignment is kept.
  bool feasible(std::size_t r) {
    limit_ = r;
    sizes_.assign(r, 0);
    max_degree_.assign(r, 0);
    block_weight_.assign(r, 0);
    used_ = 0;
    return place(0);
  }

  std::vector<VertexSet> blocks() const {
    std::vector<VertexSet> out(used_, VertexSet(n_));
    for (Vertex v = 0; v < n_; ++v) out[assignment_[v]].insert(v);
    return out;
  }

 private:
  bool fits(std::size_t b, Vertex v) const {
    // δ-condition for the grown block: every degree <= n - size.
    return sizes_[b] + 1 + std::max(max_degree_[b], g_.degree(v)) <= n_;
  }

  bool weight_prune(Vertex next) const {
    if (!weights_) return false;
    // Each δ-set has W <= 1, so the unplaced weight must fit in the slack.
    std::uint64_t slack = (limit_ - used_) * scale_;
    for (std::size_t b = 0; b < used_; ++b) slack += scale_ - block_weight_[b];
    return suffix_weight_[next] > slack;
  }

  bool place(Vertex v) {
    if (v == n_) return true;
    if (weight_prune(v)) return false;
    const std::size_t open = used_;
    for (std::size_t b = 0; b <= open && b < limit_; ++b) {
      if (!fits(b, v)) continue;
      const std::size_t saved_degree = max_degree_[b];
      ++sizes_[b];
      max_degree_[b] = std::max(saved_degree, g_.degree(v));
      if (weights_) block_weight_[b] += (*weights_)[v];
      assignment_[v] = b;
      if (b == open) ++used_;
      if (place(v + 1)) return true;
      if (b == open) --used_;
      if (weights_) block_weight_[b] -= (*weights_)[v];
      max_degree_[b] = saved_degree;
      --sizes_[b];
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> assignment_;
  std::size_t limit_ = 0;
  std::size_t used_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> max_degree_;
  std::optional<std::vector<std::uint64_t>> weights_;
  std::uint64_t scale_ = 1;
  std::vector<std::uint64_t> suffix_weight_;
  std::vector<std::uint64_t> block_weight_;
};

}  // namespace

void OracleLimits::validate() const {
  if (max_n_clique == 0 || max_n_phi == 0) throw PreconditionError("oracle caps must be positive");
  if (max_n_phi > max_n_clique) throw PreconditionError("φ cap exceeds the clique cap");
}

std::size_t clique_number_exact(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_cap(g, limits.max_n_clique);
  return CliqueSearch(g).run();
}

std::size_t independence_number_exact(const Graph& g, const OracleLimits& limits) {
  return clique_number_exact(complement(g), limits);
}

PhiResult phi_exact(const Graph& g, const OracleLimits& limits) {
  limits.validate();
  require_cap(g, limits.max_n_phi);
  if (g.order() == 0) throw PreconditionError("empty graph");

  PartitionSearch search(g);
  const auto start = static_cast<std::size_t>(wei_bound(g).ceil());
  // Singletons are always δ-sets, so r = n succeeds.
  for (std::size_t r = std::max<std::size_t>(start, 1); r <= g.order(); ++r) {
    if (!search.feasible(r)) continue;
    DeltaPartition witness(g.order(), search.blocks());
    if (witness.block_count() != r || !verify_generalized_partition(g, witness))
      throw InvariantViolation("partition search produced an invalid witness");
    return {r, std::move(witness)};
  }
  throw InvariantViolation("no δ-partition found up to r = n");
}

WeiChain wei_bound_floor_check(const Graph& g, const OracleLimits& limits) {
  WeiChain chain{clique_number_exact(g, limits), phi_exact(g, limits).phi, wei_bound(g)};
  if (chain.omega < chain.phi)
    throw InvariantViolation("ω = " + std::to_string(chain.omega) + " < φ = " +
                             std::to_string(chain.phi));
  if (Weight(static_cast<std::int64_t>(chain.phi)) < chain.wei)
    throw InvariantViolation("φ = " + std::to_string(chain.phi) + " < W(G) = " + chain.wei.str());
  return chain;
}

}  // namespace cliquebounds
