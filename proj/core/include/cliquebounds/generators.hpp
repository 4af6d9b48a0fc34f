#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "cliquebounds/graph.hpp"
#include "cliquebounds/io.hpp"

namespace cliquebounds {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,n-1}: vertex 0 joined to n-1 leaves.
Graph star_graph(std::size_t n);
/// Parts are consecutive id ranges of the given sizes.
Graph complete_multipartite(std::span<const std::size_t> part_sizes);
/// T(n, r): complete r-partite with part sizes differing by at most one,
/// larger parts first. Throws UsageError unless 1 <= r <= n.
Graph turan_graph(std::size_t n, std::size_t r);
Graph petersen_graph();

/// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order; each
/// draws one std::mt19937_64 output x and becomes an edge when
/// (x >> 11) * 2^-53 < p. Identical (n, p, seed) give identical graphs on
/// every platform. Throws UsageError unless 0 <= p <= 1.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);

/// Dispatches on spec.name: complete n, cycle n, path n, star n,
/// complete_multipartite s1,s2,..., turan n r, gnp n p [seed], petersen.
/// A seed given as the third gnp parameter overrides spec.seed.
/// Throws UsageError on unknown names or invalid parameters.
Graph generate(const GeneratorSpec& spec);

}  // namespace cliquebounds
