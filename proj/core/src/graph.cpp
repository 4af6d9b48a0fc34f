#include "cliquebounds/graph.hpp"

#include <algorithm>
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

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : rows_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") outside a graph on " + std::to_string(n) + " vertices");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  finalize();
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g;
  const std::size_t n = rows.size();
  for (Vertex v = 0; v < n; ++v) {
    if (rows[v].universe() != n) throw PreconditionError("adjacency row of wrong width");
    if (rows[v].contains(v)) throw PreconditionError("self-loop at vertex " + std::to_string(v));
  }
  for (Vertex u = 0; u < n; ++u) {
    rows[u].for_each([&](Vertex v) {
      if (!rows[v].contains(u)) throw PreconditionError("asymmetric adjacency rows");
    });
  }
  g.rows_ = std::move(rows);
  g.finalize();
  return g;
}

void Graph::finalize() {
  degrees_.resize(rows_.size());
  std::size_t twice_edges = 0;
  for (Vertex v = 0; v < rows_.size(); ++v) {
    degrees_[v] = rows_[v].size();
    twice_edges += degrees_[v];
    max_degree_ = std::max(max_degree_, degrees_[v]);
  }
  edge_count_ = twice_edges / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = rows_[u].next(u); v < order(); v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  if (s.empty()) throw PreconditionError("empty intersection base");
  VertexSet result = g.all_vertices();
  s.for_each([&](Vertex v) { result &= g.neighbors(v); });
  return result;
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexSet row = g.neighbors(v).inverted();
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return Graph::from_rows(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  InducedSubgraph out;
  out.to_parent = s.members();
  std::vector<Vertex> to_local(g.order(), g.order());
  for (Vertex i = 0; i < out.to_parent.size(); ++i) to_local[out.to_parent[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    (g.neighbors(out.to_parent[i]) & s).for_each([&](Vertex w) {
      if (to_local[w] > i) edges.emplace_back(i, to_local[w]);
    });
  }
  out.graph = Graph(out.to_parent.size(), edges);
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  bool clique = true;
  s.for_each([&](Vertex v) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) clique = false;
  });
  return clique;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  bool independent = true;
  s.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(s)) independent = false;
  });
  return independent;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

}  // namespace cliquebounds
