#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cliquebounds/graph.hpp"

namespace cliquebounds {

/// Bijection between external vertex labels and dense internal ids.
class LabelMap {
 public:
  LabelMap() = default;
  /// Labels "1".."n", as DIMACS uses.
  static LabelMap one_based(std::size_t n);

  /// Id of `label`, assigning the next free id on first sight.
  Vertex intern(const std::string& label);
  std::optional<Vertex> find(const std::string& label) const;
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> ids_;
};

struct ParsedGraph {
  Graph graph;
  LabelMap labels;
};

enum class GraphFormat { dimacs, edge_list };

/// DIMACS edge format: "c" comments, one "p edge <n> <m>" line, then
/// "e <u> <v>" lines with 1-based ids. Repeated edges collapse; the edge
/// count in the p-line is not enforced. Throws ParseError.
ParsedGraph parse_dimacs(std::string_view text);

/// One "u v" pair per line with arbitrary labels; "v <label>" declares a
/// vertex without edges; blank lines and text after '#' are ignored. Ids are
/// given in order of first appearance. Throws ParseError.
ParsedGraph parse_edge_list(std::string_view text);

ParsedGraph parse_graph(std::string_view text, GraphFormat format);

std::string emit_dimacs(const Graph& g);
/// Declares every vertex first so that parsing the output reproduces the
/// same ids. Labels default to the decimal ids.
std::string emit_edge_list(const Graph& g, const LabelMap* labels = nullptr);

/// Picks the format from the extension: .dimacs/.clq/.col/.dim are DIMACS,
/// everything else is an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);

/// A named generator invocation such as "turan:9,3" or "gnp:12,0.3".
struct GeneratorSpec {
  std::string name;
  std::vector<std::string> params;
  std::uint64_t seed = 0;

  /// Parses "name" or "name:p1,p2,...". Throws UsageError on bad syntax.
  static GeneratorSpec parse(std::string_view text, std::uint64_t seed = 0);
  std::string str() const;
};

struct FileSource {
  std::filesystem::path path;
  std::optional<GraphFormat> format;  // from the extension when empty
};

/// Where a graph comes from. Loading is reproducible for both alternatives.
struct GraphSource {
  std::variant<FileSource, GeneratorSpec> origin;

  std::string name() const;
};

struct LoadedGraph {
  std::string name;
  Graph graph;
  LabelMap labels;
};

/// Reads or generates the graph. Throws ParseError, UsageError, or
/// std::runtime_error when a file cannot be read.
LoadedGraph load(const GraphSource& source);

}  // namespace cliquebounds
