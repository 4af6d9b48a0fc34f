#include "cliquebounds/generators.hpp"

#include <charconv>
#include <random>
#include <string>
#include <vector>

#include "cliquebounds/error.hpp"

namespace cliquebounds {
namespace {

std::size_t as_count(const std::string& text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("expected a non-negative integer, got '" + text + "'");
  return value;
}

double as_probability(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("expected a number, got '" + text + "'");
  return value;
}

void require_params(const GeneratorSpec& spec, std::size_t min, std::size_t max) {
  if (spec.params.size() < min || spec.params.size() > max) {
    throw UsageError("generator '" + spec.name + "' takes " + std::to_string(min) +
                     (min == max ? "" : ".." + std::to_string(max)) + " parameter(s)");
  }
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  if (n == 0) throw UsageError("star needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) part_of.insert(part_of.end(), part_sizes[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(part_of.size(), edges);
}

Graph turan_graph(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw UsageError("turan needs 1 <= r <= n");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return complete_multipartite(sizes);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  const auto& name = spec.name;
  const auto& params = spec.params;
  if (name == "complete" || name == "cycle" || name == "path" || name == "star") {
    require_params(spec, 1, 1);
    const std::size_t n = as_count(params[0]);
    if (name == "complete") return complete_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "path") return path_graph(n);
    return star_graph(n);
  }
  if (name == "complete_multipartite") {
    require_params(spec, 1, SIZE_MAX);
    std::vector<std::size_t> sizes;
    for (const auto& s : params) sizes.push_back(as_count(s));
    return complete_multipartite(sizes);
  }
  if (name == "turan") {
    require_params(spec, 2, 2);
    return turan_graph(as_count(params[0]), as_count(params[1]));
  }
  if (name == "gnp") {
    require_params(spec, 2, 3);
    const std::uint64_t seed = params.size() == 3 ? as_count(params[2]) : spec.seed;
    return gnp_graph(as_count(params[0]), as_probability(params[1]), seed);
  }
  if (name == "petersen") {
    require_params(spec, 0, 0);
    return petersen_graph();
  }
  throw UsageError("unknown generator '" + name + "'");
}

}  // namespace cliquebounds
