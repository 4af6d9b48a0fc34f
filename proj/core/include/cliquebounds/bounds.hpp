#pragma once

#include <cstddef>
#include <vector>

#include "cliquebounds/graph.hpp"
#include "cliquebounds/weight.hpp"

namespace cliquebounds {

/// A partition of V(G) into nonempty, pairwise-disjoint blocks.
///
/// Construction checks the partition structure only; whether each block is a
/// δ-set is the job of verify_generalized_partition.
class DeltaPartition {
 public:
  /// Throws PreconditionError("not a partition") unless blocks are nonempty,
  /// disjoint, over `universe` vertices, and cover all of them.
  DeltaPartition(std::size_t universe, std::vector<VertexSet> blocks);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }

 private:
  std::size_t universe_;
  std::vector<VertexSet> blocks_;
};

/// Sum of 1/(n - d(v)) over v in s, with n and d taken from the whole of g.
Weight wei_weight(const Graph& g, const VertexSet& s);

/// W(G), the clique-number lower bound. Throws on the empty graph.
Weight wei_bound(const Graph& g);

/// Sum of 1/(1 + d(v)) over all vertices, the independence-number lower
/// bound. Equal to wei_bound(complement(g)).
Weight wei_independence_bound(const Graph& g);

/// True iff d(v) <= n - |s| for every v in s. Throws on empty s.
bool is_delta_set(const Graph& g, const VertexSet& s);

/// True iff every block of p is a δ-set in g.
bool verify_generalized_partition(const Graph& g, const DeltaPartition& p);

/// is_delta_set(g, V(G) \ s). Guaranteed true whenever |s| >= max degree.
/// Throws when s = V(G).
bool delta_complement_check(const Graph& g, const VertexSet& s);

}  // namespace cliquebounds
