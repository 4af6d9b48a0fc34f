#include "cliquebounds/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cliquebounds/error.hpp"
#include "cliquebounds/generators.hpp"

namespace cliquebounds {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "non-integer token '" + std::string(token) + "'");
  return value;
}

}  // namespace

LabelMap LabelMap::one_based(std::size_t n) {
  LabelMap m;
  for (std::size_t i = 1; i <= n; ++i) m.intern(std::to_string(i));
  return m;
}

Vertex LabelMap::intern(const std::string& label) {
  auto [it, inserted] = ids_.try_emplace(label, labels_.size());
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<Vertex> LabelMap::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

ParsedGraph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    last_line = line;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line, "duplicate p-line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw ParseError(line, "malformed p-line, expected 'p edge <n> <m>'");
      n = parse_count(tokens[2], line);
      parse_count(tokens[3], line);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line, "missing p-line before edges");
      if (tokens.size() != 3) throw ParseError(line, "malformed edge line, expected 'e <u> <v>'");
      const std::size_t u = parse_count(tokens[1], line);
      const std::size_t v = parse_count(tokens[2], line);
      if (u < 1 || u > *n || v < 1 || v > *n)
        throw ParseError(line, "vertex id out of range 1.." + std::to_string(*n));
      if (u == v) throw ParseError(line, "self-loop");
      edges.emplace_back(u - 1, v - 1);
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tokens[0]) + "'");
  });
  if (!n) throw ParseError(last_line, "missing p-line");
  return {Graph(*n, edges), LabelMap::one_based(*n)};
}

ParsedGraph parse_edge_list(std::string_view text) {
  LabelMap labels;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::size_t line, std::string_view raw) {
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto tokens = split_ws(raw);
    if (tokens.empty()) return;
    if (tokens.size() != 2) throw ParseError(line, "malformed line, expected 'u v' or 'v <label>'");
    if (tokens[0] == "v") {
      labels.intern(std::string(tokens[1]));
      return;
    }
    if (tokens[0] == tokens[1]) throw ParseError(line, "self-loop");
    const Vertex u = labels.intern(std::string(tokens[0]));
    const Vertex v = labels.intern(std::string(tokens[1]));
    edges.emplace_back(u, v);
  });
  Graph g(labels.size(), edges);
  return {std::move(g), std::move(labels)};
}

ParsedGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string emit_edge_list(const Graph& g, const LabelMap* labels) {
  if (labels && labels->size() != g.order())
    throw PreconditionError("label map does not match the graph");
  const auto name = [&](Vertex v) { return labels ? labels->label(v) : std::to_string(v); };
  std::ostringstream out;
  for (Vertex v = 0; v < g.order(); ++v) out << "v " << name(v) << '\n';
  for (auto [u, v] : g.edges()) out << name(u) << ' ' << name(v) << '\n';
  return out.str();
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".dimacs" || ext == ".clq" || ext == ".col" || ext == ".dim")
    return GraphFormat::dimacs;
  return GraphFormat::edge_list;
}

GeneratorSpec GeneratorSpec::parse(std::string_view text, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw UsageError("empty generator name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view param = rest.substr(0, comma);
    if (param.empty()) throw UsageError("empty parameter in generator '" + std::string(text) + "'");
    spec.params.emplace_back(param);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

std::string GeneratorSpec::str() const {
  std::string out = name;
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ":" : ",") + params[i];
  return out;
}

std::string GraphSource::name() const {
  if (const auto* file = std::get_if<FileSource>(&origin)) return file->path.string();
  const auto& gen = std::get<GeneratorSpec>(origin);
  if (gen.name == "gnp" && gen.params.size() == 2) return gen.str() + "@" + std::to_string(gen.seed);
  return gen.str();
}

LoadedGraph load(const GraphSource& source) {
  if (const auto* file = std::get_if<FileSource>(&source.origin)) {
    std::ifstream in(file->path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file->path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_graph(buf.str(), file->format.value_or(format_for_path(file->path)));
    return {source.name(), std::move(parsed.graph), std::move(parsed.labels)};
  }
  Graph g = generate(std::get<GeneratorSpec>(source.origin));
  LabelMap labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.intern(std::to_string(v));
  return {source.name(), std::move(g), std::move(labels)};
}

}  // namespace cliquebounds
