#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/io.hpp"

namespace domlab::testing {

inline std::string data_path(const std::string& name) { return std::string(DOMLAB_TEST_DATA) + "/" + name; }

inline std::vector<Graph> load_corpus(const std::string& name) {
  std::ifstream in(data_path(name));
  std::vector<Graph> out;
  for (const Graph6Line& line : read_graph6_lines(in)) out.push_back(parse_graph6(line.text));
  return out;
}

/// G(n, p) without loops or parallel edges.
inline Graph random_simple_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Connected simple graph with minimum degree >= 2: a random spanning tree,
/// a few random chords, then chords at every leaf-like vertex.
inline Graph random_connected_min2(std::mt19937& rng, int n) {
  Graph g(n);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  std::uniform_int_distribution<int> extra(0, n / 2);
  for (int e = extra(rng); e > 0; --e) {
    const Vertex a = any(rng), b = any(rng);
    if (a != b && !g.adjacent(a, b)) g.add_edge(a, b);
  }
  for (Vertex v = 0; v < n; ++v) {
    while (g.degree(v) < 2) {
      const Vertex w = any(rng);
      if (w != v && !g.adjacent(v, w)) g.add_edge(v, w);
    }
  }
  return g;
}

/// Bridges by deleting each edge and counting components.
inline std::vector<std::size_t> naive_bridges(const Graph& g) {
  int base = 0;
  connected_components(g, &base);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Graph h(g.order());
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) h.add_edge(g.edge(j).u, g.edge(j).v);
    int count = 0;
    connected_components(h, &count);
    if (count > base) out.push_back(i);
  }
  return out;
}

/// Smallest vertex subset whose removal disconnects, by enumeration.
inline int naive_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  for (int k = 1; k <= n - 2; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<Vertex> removed;
      for (int v = 0; v < n; ++v)
        if (pick[v]) removed.push_back(v);
      if (!is_connected(delete_vertices(g, VertexSet(removed)).graph)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

}  // namespace domlab::testing
