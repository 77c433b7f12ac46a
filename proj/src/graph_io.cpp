#include "isk4/graph_io.hpp"

#include <sstream>

namespace isk4 {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";

int decode_byte(char c) {
  const int b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126");
  return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.substr(0, kGraph6Prefix.size()) == kGraph6Prefix)
    record.remove_prefix(kGraph6Prefix.size());
  if (!record.empty() && record.back() == '\r') record.remove_suffix(1);
  if (record.empty()) throw ParseError("graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (record[0] != '~') {
    n = decode_byte(record[0]);
    pos = 1;
  } else {
    if (record.size() >= 2 && record[1] == '~')
      throw ParseError("graph6: order too large (8-byte header)");
    if (record.size() < 4) throw ParseError("graph6: truncated size header");
    n = (static_cast<long>(decode_byte(record[1])) << 12) |
        (static_cast<long>(decode_byte(record[2])) << 6) | decode_byte(record[3]);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity 128");

  const long bits = n * (n - 1) / 2;
  const long body = (bits + 5) / 6;
  if (static_cast<long>(record.size() - pos) < body) throw ParseError("graph6: truncated record");
  if (static_cast<long>(record.size() - pos) > body) throw ParseError("graph6: trailing bytes");

  std::vector<VertexSet> adj(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(record[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = decode_byte(record[pos + body - 1]);
    const int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

// Returns the next non-empty, non-comment line; false at end of input.
bool next_content_line(std::istream& in, std::string& line, int& lineno, char comment) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (comment && line[first] == comment) continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno, '#')) throw ParseError("edge list: missing header");
  long n = -1;
  long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw ParseError("edge list: expected \"n m\"", lineno);
  }
  if (n < 0 || n > kMaxVertices) throw ParseError("edge list: vertex count out of range", lineno);
  if (m < 0) throw ParseError("edge list: negative edge count", lineno);
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e) {
    if (!next_content_line(in, line, lineno, '#'))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(e),
                       lineno + 1);
    std::istringstream ls(line);
    long u = 0;
    long v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("edge list: expected \"u v\"", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range", lineno);
    if (u == v) throw ParseError("edge list: loop edge", lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line, lineno, '#')) throw ParseError("edge list: trailing content", lineno);
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (next_content_line(in, line, lineno, 'c')) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      long m = 0;
      if (n >= 0) throw ParseError("dimacs: duplicate problem line", lineno);
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
        throw ParseError("dimacs: expected \"p edge n m\"", lineno);
      if (n < 0 || n > kMaxVertices) throw ParseError("dimacs: vertex count out of range", lineno);
    } else if (tag == "e") {
      if (n < 0) throw ParseError("dimacs: edge before problem line", lineno);
      long u = 0;
      long v = 0;
      if (!(ls >> u >> v)) throw ParseError("dimacs: expected \"e u v\"", lineno);
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError("dimacs: endpoint out of range", lineno);
      if (u == v) throw ParseError("dimacs: loop edge", lineno);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError("dimacs: unknown line type '" + tag + "'", lineno);
    }
  }
  if (n < 0) throw ParseError("dimacs: missing problem line");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::optional<InputFormat> parse_input_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return InputFormat::graph6;
  if (name == "edgelist") return InputFormat::edgelist;
  if (name == "dimacs" || name == "col") return InputFormat::dimacs;
  return std::nullopt;
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      return parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_);
    }
  }
  return std::nullopt;
}

}  // namespace isk4
