#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cliquebounds/vertex_set.hpp"

namespace cliquebounds {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held as one bit-row per vertex; degrees are cached at
/// construction. Symmetry, irreflexivity and degree consistency are
/// established once in the constructor and never change afterwards.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on a self-loop or an out-of-range endpoint.
  /// Repeated edges collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph edgeless(std::size_t n) { return Graph(n, std::span<const Edge>{}); }
  /// Builds from rows that must already be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return degrees_.at(v); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }
  VertexSet all_vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void finalize();

  std::vector<VertexSet> rows_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// Induced subgraph on s, relabelled 0..|s|-1 in increasing id order.
struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the id in the original graph of local vertex i.
  std::vector<Vertex> to_parent;
};

/// N(s), the intersection of N(v) over v in s. Throws on empty s.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// Vertices of g followed by vertices of h shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace cliquebounds
