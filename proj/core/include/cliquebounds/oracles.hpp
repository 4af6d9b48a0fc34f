#pragma once

#include <cstddef>

#include "cliquebounds/bounds.hpp"
#include "cliquebounds/graph.hpp"
#include "cliquebounds/weight.hpp"

namespace cliquebounds {

/// Vertex caps for the exponential-time oracles.
struct OracleLimits {
  std::size_t max_n_clique = 64;
  std::size_t max_n_phi = 12;

  /// Throws PreconditionError unless both caps are positive and
  /// max_n_phi <= max_n_clique.
  void validate() const;
};

/// ω(G) by branch and bound over bit-set candidate sets.
std::size_t clique_number_exact(const Graph& g, const OracleLimits& limits = {});

/// α(G) = ω(complement(G)).
std::size_t independence_number_exact(const Graph& g, const OracleLimits& limits = {});

struct PhiResult {
  std::size_t phi = 0;
  DeltaPartition witness;
};

/// φ(G), the fewest δ-sets that partition V(G), with one optimal partition.
///
/// Searches r = ⌈W(G)⌉, ⌈W(G)⌉ + 1, ... and for each r backtracks over
/// restricted-growth assignments: vertices are placed in increasing id order
/// and may only open the next unused block, so each set partition is visited
/// once.
PhiResult phi_exact(const Graph& g, const OracleLimits& limits = {});

struct WeiChain {
  std::size_t omega = 0;
  std::size_t phi = 0;
  Weight wei;
};

/// Computes ω, φ and W(G) and checks ω >= φ >= W(G) exactly. Throws
/// InvariantViolation if the chain breaks.
WeiChain wei_bound_floor_check(const Graph& g, const OracleLimits& limits = {});

}  // namespace cliquebounds
