#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlab {

using Vertex = int;

/// Raised for malformed graph edits (bad vertex ids, self-loops, missing edges).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An unordered vertex pair. Stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed,
/// self-loops are not. Edges are addressed by their stable index in edges().
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const;

  /// Neighbors of v, one entry per incident edge (parallel neighbors repeat).
  const std::vector<Vertex>& neighbors(Vertex v) const;
  /// Indices of edges incident to v, aligned with neighbors(v).
  const std::vector<std::size_t>& incident_edges(Vertex v) const;
  /// Distinct neighbors of v in increasing order.
  std::vector<Vertex> simple_neighbors(Vertex v) const;

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int multiplicity(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  bool is_simple() const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // Construction-time editing. Builders use these; algorithms take const&.
  Vertex add_vertex();
  Vertex add_vertices(int count);
  std::size_t add_edge(Vertex u, Vertex v);

  /// Index of the first edge joining u and v, or throws.
  std::size_t edge_index(Vertex u, Vertex v) const;

  /// Same order and identical edge multisets.
  bool same_edges(const Graph& other) const;

  /// Same as same_edges: edge order does not matter.
  friend bool operator==(const Graph& a, const Graph& b) { return a.same_edges(b); }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// A sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices);
  explicit VertexSet(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  void insert(Vertex v);

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// Throws GraphError unless every member is a vertex of g.
  void validate(const Graph& g) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const VertexSet& s);

struct Subdivision {
  Graph graph;
  Vertex vertex = 0;  // the new subdividing vertex
};

/// Replaces edge `index` = {u, v} by the path u - w - v, where w = old order.
/// The edge keeps its index as {u, w}; {w, v} is appended.
Subdivision subdivide_edge(const Graph& g, std::size_t index);

struct Deletion {
  Graph graph;
  std::vector<Vertex> new_id;   // old id -> new id, or -1 if deleted
  std::vector<Vertex> old_id;   // new id -> old id
};

/// Induced subgraph on the complement of `removed`; survivors keep their
/// relative order.
Deletion delete_vertices(const Graph& g, const VertexSet& removed);

/// Subgraph induced by `keep`; vertex i of the result is keep.vertices()[i].
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Appends a disjoint copy of h to g; returns the image of each h vertex.
std::vector<Vertex> add_disjoint_copy(Graph& g, const Graph& h);

bool is_connected(const Graph& g);
/// Component label per vertex, labels numbered from 0 in order of first vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
/// Two vertices joined by `m` parallel edges (K_2^3 for m = 3).
Graph banana_graph(int m);
Graph complete_bipartite(int a, int b);
/// Triangular prism: two triangles joined by a perfect matching.
Graph prism_graph();

}  // namespace domlab
