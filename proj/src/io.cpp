#include "domlab/io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace domlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

struct Cursor {
  std::string_view text;
  std::size_t base;  // offset of text within the original input
  std::size_t pos = 0;

  int next(const char* what) {
    if (pos >= text.size()) throw Graph6Error(std::string("truncated ") + what, base + pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw Graph6Error("character outside 63..126", base + pos);
    ++pos;
    return c - kBias;
  }
};

std::uint64_t read_order(Cursor& cur) {
  const int first = cur.next("vertex count");
  if (first != 63) return static_cast<std::uint64_t>(first);
  int chunks = 3;
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '~') {
    ++cur.pos;
    chunks = 6;
  }
  std::uint64_t n = 0;
  for (int i = 0; i < chunks; ++i) n = (n << 6) | static_cast<std::uint64_t>(cur.next("vertex count"));
  return n;
}

void write_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  const int chunks = n <= 258047 ? 3 : 6;
  out.push_back('~');
  if (chunks == 6) out.push_back('~');
  for (int i = chunks - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + kBias));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  Cursor cur{text, base};
  const std::uint64_t n64 = read_order(cur);
  if (n64 > 10'000'000) throw Graph6Error("vertex count too large", base);
  const auto n = static_cast<std::size_t>(n64);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - cur.pos < bytes) {
    throw Graph6Error("bad length: expected " + std::to_string(bytes) + " adjacency bytes",
                      base + text.size());
  }

  Graph g(static_cast<int>(n));
  int chunk = 0;
  int remaining = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (remaining == 0) {
        chunk = cur.next("adjacency data");
        remaining = 6;
      }
      --remaining;
      if ((chunk >> remaining) & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (remaining > 0 && (chunk & ((1 << remaining) - 1)) != 0) {
    throw Graph6Error("nonzero padding bits", base + cur.pos - 1);
  }
  if (cur.pos != text.size()) throw Graph6Error("trailing garbage", base + cur.pos);
  return g;
}

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) throw GraphError("graph6 requires a simple graph");
  const auto n = static_cast<std::size_t>(g.order());
  std::string out;
  write_order(out, n);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> chunks((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // Column-major upper triangle: (i, j) with i < j sits at j(j-1)/2 + i.
    const std::size_t j = static_cast<std::size_t>(e.v), i = static_cast<std::size_t>(e.u);
    const std::size_t bit = j * (j - 1) / 2 + i;
    chunks[bit / 6] |= static_cast<std::uint8_t>(1u << (5 - bit % 6));
  }
  for (std::uint8_t c : chunks) out.push_back(static_cast<char>(c + kBias));
  return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::string to_dot(const Graph& g, const std::map<Vertex, std::string>& labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    auto it = labels.find(v);
    if (it != labels.end()) {
      out << "  " << v << " [label=\"" << it->second << "\"];\n";
    } else if (g.degree(v) == 0) {
      out << "  " << v << ";\n";
    }
  }
  std::vector<Edge> edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace domlab
