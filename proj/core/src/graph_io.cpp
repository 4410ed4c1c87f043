#include <charconv>
#include <sstream>

#include "mcw/error.hpp"
#include "mcw/geval.hpp"

namespace mcw {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no, 1);
  return v;
}

}  // namespace

LabeledGraph read_graph(std::string_view text) {
  LabeledGraph g;
  bool have_header = false;
  std::uint64_t declared_edges = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const auto tok = split(line);
    if (tok.empty() || tok[0] == "c") continue;
    auto vertex = [&](std::string_view t) {
      const std::uint64_t v = number(t, line_no);
      if (v >= g.vertex_count())
        throw ParseError("vertex " + std::to_string(v) + " out of range", line_no, 1);
      return static_cast<VertexId>(v);
    };
    if (tok[0] == "p") {
      if (have_header) throw ParseError("duplicate 'p' line", line_no, 1);
      if (tok.size() != 3) throw ParseError("expected 'p <n> <m>'", line_no, 1);
      const std::uint64_t n = number(tok[1], line_no);
      if (n > 0xFFFFFFFFull) throw ParseError("too many vertices", line_no, 1);
      declared_edges = number(tok[2], line_no);
      g = LabeledGraph(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("expected 'p <n> <m>' before other lines", line_no, 1);
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no, 1);
      const VertexId u = vertex(tok[1]);
      const VertexId v = vertex(tok[2]);
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no, 1);
      g.add_edge(u, v);
    } else if (tok[0] == "l") {
      if (tok.size() < 2) throw ParseError("expected 'l <v> <labels...>'", line_no, 1);
      const VertexId v = vertex(tok[1]);
      std::vector<Label> ls;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        const std::uint64_t l = number(tok[k], line_no);
        if (l == 0 || l > 0xFFFFFFFFull) throw ParseError("label must be positive", line_no, 1);
        ls.push_back(static_cast<Label>(l));
      }
      g.labels[v] = LabelSet(ls);
    } else if (tok[0] == "n") {
      if (tok.size() != 3) throw ParseError("expected 'n <v> <name>'", line_no, 1);
      g.names[vertex(tok[1])] = std::string(tok[2]);
    } else {
      throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no, 1);
    }
  }
  if (!have_header) throw ParseError("missing 'p <n> <m>' line", line_no, 1);
  const std::size_t raw = g.edges.size();
  g.normalize();
  if (raw != g.edges.size()) throw ParseError("duplicate edge in graph", line_no, 1);
  if (raw != declared_edges)
    throw ParseError("header declares " + std::to_string(declared_edges) + " edges, found " + std::to_string(raw),
                     line_no, 1);
  return g;
}

std::string write_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.labels[v].empty()) continue;
    out << "l " << v;
    for (Label l : g.labels[v]) out << ' ' << l;
    out << '\n';
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.names[v].empty()) out << "n " << v << ' ' << g.names[v] << '\n';
  return out.str();
}

}  // namespace mcw
