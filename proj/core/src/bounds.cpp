#include "cliquebounds/bounds.hpp"

#include <string>

#include "cliquebounds/error.hpp"

namespace cliquebounds {
namespace {

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw PreconditionError("vertex set over " + std::to_string(s.universe()) +
                            " vertices used with a graph on " + std::to_string(g.order()));
  }
}

Weight degree_sum(const Graph& g, std::size_t (*denominator)(std::size_t n, std::size_t d)) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  Weight total;
  for (std::size_t d : g.degrees()) total += Weight::unit_fraction(denominator(g.order(), d));
  return total;
}

}  // namespace

DeltaPartition::DeltaPartition(std::size_t universe, std::vector<VertexSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)) {
  VertexSet covered(universe);
  for (const auto& block : blocks_) {
    if (block.universe() != universe || block.empty() || block.intersects(covered)) {
      throw PreconditionError("not a partition");
    }
    covered |= block;
  }
  if (covered.size() != universe) throw PreconditionError("not a partition");
}

Weight wei_weight(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  Weight total;
  s.for_each([&](Vertex v) { total += Weight::unit_fraction(g.order() - g.degree(v)); });
  return total;
}

Weight wei_bound(const Graph& g) {
  return degree_sum(g, [](std::size_t n, std::size_t d) { return n - d; });
}

Weight wei_independence_bound(const Graph& g) {
  return degree_sum(g, [](std::size_t, std::size_t d) { return d + 1; });
}

bool is_delta_set(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  if (s.empty()) throw PreconditionError("empty candidate δ-set");
  const std::size_t limit = g.order() - s.size();
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (g.degree(v) > limit) ok = false;
  });
  return ok;
}

bool verify_generalized_partition(const Graph& g, const DeltaPartition& p) {
  if (p.universe() != g.order()) throw PreconditionError("not a partition");
  for (const auto& block : p.blocks())
    if (!is_delta_set(g, block)) return false;
  return true;
}

bool delta_complement_check(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  if (s.size() == g.order()) throw PreconditionError("complement of V(G) is empty");
  return is_delta_set(g, s.inverted());
}

}  // namespace cliquebounds
