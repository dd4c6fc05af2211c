#include "domlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace domlab {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adjacency_.resize(n);
  incidence_.resize(n);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (!valid_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " out of range 0.." +
                     std::to_string(order() - 1));
  }
}

const Edge& Graph::edge(std::size_t index) const {
  if (index >= edges_.size()) throw GraphError("no such edge");
  return edges_[index];
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

const std::vector<std::size_t>& Graph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

std::vector<Vertex> Graph::simple_neighbors(Vertex v) const {
  std::vector<Vertex> out = neighbors(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  check_vertex(v);
  return static_cast<int>(std::count(nu.begin(), nu.end(), v));
}

bool Graph::is_simple() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Vertex Graph::add_vertex() { return add_vertices(1); }

Vertex Graph::add_vertices(int count) {
  const Vertex first = order();
  adjacency_.resize(adjacency_.size() + count);
  incidence_.resize(incidence_.size() + count);
  return first;
}

std::size_t Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  const std::size_t index = edges_.size();
  edges_.emplace_back(u, v);
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  incidence_[u].push_back(index);
  incidence_[v].push_back(index);
  return index;
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] == v) return incidence_[u][i];
  }
  throw GraphError("no such edge");
}

bool Graph::same_edges(const Graph& other) const {
  if (order() != other.order() || size() != other.size()) return false;
  std::vector<Edge> a = edges_, b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
    : VertexSet(std::vector<Vertex>(vertices)) {}

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw GraphError("duplicate vertex in vertex set");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) vertices_.insert(it, v);
}

void VertexSet::validate(const Graph& g) const {
  for (Vertex v : vertices_) {
    if (!g.valid_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " out of range 0.." +
                       std::to_string(g.order() - 1));
    }
  }
}

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Subdivision subdivide_edge(const Graph& g, std::size_t index) {
  const Edge target = g.edge(index);
  Graph out(g.order() + 1);
  const Vertex w = g.order();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == index) {
      out.add_edge(target.u, w);
    } else {
      out.add_edge(g.edge(i).u, g.edge(i).v);
    }
  }
  out.add_edge(w, target.v);
  return {std::move(out), w};
}

Deletion delete_vertices(const Graph& g, const VertexSet& removed) {
  removed.validate(g);
  Deletion result;
  result.new_id.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed.contains(v)) {
      result.new_id[v] = static_cast<Vertex>(result.old_id.size());
      result.old_id.push_back(v);
    }
  }
  result.graph = Graph(static_cast<int>(result.old_id.size()));
  for (const Edge& e : g.edges()) {
    const Vertex a = result.new_id[e.u], b = result.new_id[e.v];
    if (a >= 0 && b >= 0) result.graph.add_edge(a, b);
  }
  return result;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  keep.validate(g);
  std::vector<Vertex> drop;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep.contains(v)) drop.push_back(v);
  }
  return delete_vertices(g, VertexSet(std::move(drop))).graph;
}

std::vector<Vertex> add_disjoint_copy(Graph& g, const Graph& h) {
  const Vertex offset = g.add_vertices(h.order());
  std::vector<Vertex> image(h.order());
  std::iota(image.begin(), image.end(), offset);
  for (const Edge& e : h.edges()) g.add_edge(offset + e.u, offset + e.v);
  return image;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> label(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph banana_graph(int m) {
  Graph g(2);
  for (int i = 0; i < m; ++i) g.add_edge(0, 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph prism_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

}  // namespace domlab
