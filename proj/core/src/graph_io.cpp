#include "bondcycle/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bondcycle {

namespace {

constexpr int kG6Low = 63;    // '?'
constexpr int kG6High = 126;  // '~', reserved for extended sizes

int g6_byte(std::string_view text, std::size_t index) {
  const unsigned char c = static_cast<unsigned char>(text[index]);
  if (c < kG6Low || c > kG6High)
    throw ParseError("byte outside the printable graph6 range", index);
  return static_cast<int>(c) - kG6Low;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 input", 0);
  if (static_cast<unsigned char>(text[0]) == kG6High)
    throw ParseError("extended graph6 sizes (n > 62) are not supported", 0);
  const int n = g6_byte(text, 0);
  if (n < 1) throw ParseError("graph6 order 0 is not supported", 0);

  const int bits = n * (n - 1) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < 1 + data_bytes)
    throw ParseError("truncated graph6 input: expected " + std::to_string(data_bytes) +
                         " data bytes",
                     text.size());
  if (text.size() > 1 + data_bytes)
    throw ParseError("trailing bytes after graph6 data", 1 + data_bytes);

  std::vector<Edge> edges;
  int index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++index) {
      const int group = g6_byte(text, 1 + static_cast<std::size_t>(index / 6));
      if ((group >> (5 - index % 6)) & 1) edges.push_back({u, v});
    }
  }
  if (bits % 6 != 0) {
    const int last = g6_byte(text, text.size() - 1);
    const int pad = 6 - bits % 6;
    if ((last & ((1 << pad) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", text.size() - 1);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6 output supports n <= 62 only");
  const int bits = n * (n - 1) / 2;
  std::string out;
  out.reserve(1 + static_cast<std::size_t>((bits + 5) / 6));
  out.push_back(static_cast<char>(kG6Low + n));
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Low + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kG6Low + (group << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::istringstream tokens{std::string(line)};
    std::string first;
    if (!(tokens >> first)) {
      if (eol == text.size()) break;
      continue;  // blank or comment-only line
    }

    if (n < 0) {
      int count = 0;
      std::string extra;
      if (first != "n" || !(tokens >> count) || (tokens >> extra))
        throw ParseError("expected header line 'n <count>'", line_no);
      if (count < 1 || count > Graph::kMaxVertices)
        throw ParseError("vertex count out of range 1..62", line_no);
      n = count;
    } else {
      int u = 0;
      int v = 0;
      std::string extra;
      try {
        u = std::stoi(first);
      } catch (const std::exception&) {
        throw ParseError("expected edge line 'u v'", line_no);
      }
      if (!(tokens >> v) || (tokens >> extra))
        throw ParseError("expected edge line 'u v'", line_no);
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("vertex out of range for n = " + std::to_string(n), line_no);
      if (u == v) throw ParseError("self-loop", line_no);
      edges.push_back(make_edge(u, v));
    }
    if (eol == text.size()) break;
  }
  if (n < 0) throw ParseError("missing header line 'n <count>'", line_no);
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_dot(const Graph& g, const DotHighlights& highlights) {
  EdgeSet cycle_edges;
  EdgeSet cut;
  if (highlights.cycle != nullptr) {
    for (const Edge& e : highlights.cycle->edges)
      if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("cycle highlight uses an edge absent from the graph");
    cycle_edges = highlights.cycle->edges;
  }
  if (highlights.bond != nullptr) {
    if ((highlights.bond->x | highlights.bond->y) != g.vertices() ||
        !(highlights.bond->x & highlights.bond->y).empty())
      throw std::invalid_argument("bond highlight does not partition the graph's vertices");
    for (const Edge& e : highlights.bond->cut)
      if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("bond highlight uses an edge absent from the graph");
    cut = highlights.bond->cut;
  }

  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (highlights.bond != nullptr) {
      const char* color = highlights.bond->x.contains(v) ? "lightblue" : "lightyellow";
      out << " [style=filled, fillcolor=" << color << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    const bool on_cycle = std::binary_search(cycle_edges.begin(), cycle_edges.end(), e);
    const bool on_cut = std::binary_search(cut.begin(), cut.end(), e);
    if (on_cycle && on_cut)
      out << " [style=\"bold,dashed\", color=red, penwidth=2]";
    else if (on_cycle)
      out << " [style=bold, penwidth=2]";
    else if (on_cut)
      out << " [style=dashed, color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bondcycle
