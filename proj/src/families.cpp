#include "domlab/families.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace domlab {

namespace {

void require_cubic(const Graph& g, const std::string& what) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) {
      throw GraphError(what + ": vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + ", expected a cubic graph");
    }
  }
}

void remap(std::vector<GadgetOccurrence>& occs, const std::vector<Vertex>& host_map) {
  for (auto& occ : occs) {
    for (Vertex& v : occ.embedding) v = host_map[v];
  }
}

Graph without_edges(const Graph& g, const std::set<std::size_t>& drop) {
  Graph out(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!drop.count(i)) out.add_edge(g.edge(i).u, g.edge(i).v);
  }
  return out;
}

}  // namespace

Construction build_R(int k, const std::vector<int>& levels) {
  if (k < 3) throw GraphError("R_k needs k >= 3");
  if (!levels.empty() && levels.size() != static_cast<std::size_t>(k)) {
    throw GraphError("R_k needs one slot level per replaced edge");
  }
  const int n = 2 * k;
  // Replaced edges first so that each round replaces edge 0.
  Graph g(n);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i + 1, (2 * i + 2) % n);

  Construction out;
  for (int i = 0; i < k; ++i) {
    const int level = levels.empty() ? 1 : levels[i];
    RootedGadget slot = gadget_P_i(level);
    Replacement rep = replace_edge(g, 0, slot);
    g = std::move(rep.graph);
    out.occurrences.push_back({std::move(slot), std::move(rep.embedding)});
  }
  for (int v = 0; v < n; ++v) out.names["v" + std::to_string(v)] = v;
  require_cubic(g, "R_" + std::to_string(k));
  out.graph = std::move(g);
  return out;
}

Construction build_L(int r) {
  if (r < 1) throw GraphError("L_r needs r >= 1");
  const int n = 2 * r;
  // Path v1..v_{2r} on ids 0..2r-1, replaced edges first.
  Graph g(n);
  for (int i = 0; i < r; ++i) g.add_edge(2 * i, 2 * i + 1);
  for (int i = 0; i + 1 < r; ++i) g.add_edge(2 * i + 1, 2 * i + 2);

  Construction out;
  for (int i = 0; i < r; ++i) {
    RootedGadget p = gadget_P();
    Replacement rep = replace_edge(g, 0, p);
    g = std::move(rep.graph);
    out.occurrences.push_back({std::move(p), std::move(rep.embedding)});
  }
  const RootedGadget s = gadget_S();
  for (int side = 0; side < 2; ++side) {
    std::vector<Vertex> image = add_disjoint_copy(g, s.graph);
    g.add_edge(image[s.terminals[0]], side == 0 ? 0 : n - 1);
    out.names[side == 0 ? "s1" : "s2"] = image[s.terminals[0]];
    out.occurrences.push_back({s, std::move(image)});
  }
  for (int v = 0; v < n; ++v) out.names["v" + std::to_string(v + 1)] = v;
  require_cubic(g, "L_" + std::to_string(r));
  out.graph = std::move(g);
  return out;
}

Construction build_GP(const Graph& base) {
  require_cubic(base, "G(P) base");
  const RootedGadget pp = gadget_P_prime();
  const RootedGadget p = gadget_P();
  Construction out;
  Graph g = base;
  // Every replacement removes edge 0 and appends, so the original edges
  // are always at the front.
  for (std::size_t j = 0; j < base.size(); ++j) {
    Replacement rep = replace_edge(g, 0, pp);
    g = std::move(rep.graph);
    rep.embedding.resize(p.order());  // P' lists P's vertices first
    out.occurrences.push_back({p, std::move(rep.embedding)});
  }
  for (Vertex v = 0; v < base.order(); ++v) out.names["g" + std::to_string(v)] = v;
  require_cubic(g, "G(P)");
  out.graph = std::move(g);
  return out;
}

Construction build_GB(const Graph& base, const std::vector<RootedGadget>& vertex_gadgets) {
  require_cubic(base, "G[B] base");
  if (!vertex_gadgets.empty() && vertex_gadgets.size() != static_cast<std::size_t>(base.order())) {
    throw GraphError("G[B] needs one vertex gadget per base vertex");
  }
  const RootedGadget b = gadget_B();
  Construction out;
  Graph g = base;
  std::vector<Vertex> where(base.order());
  for (Vertex v = 0; v < base.order(); ++v) where[v] = v;

  for (Vertex v = 0; v < base.order(); ++v) {
    const RootedGadget& u = vertex_gadgets.empty() ? b : vertex_gadgets[v];
    Replacement rep = replace_vertex(g, where[v], u);
    for (Vertex& w : where) w = w >= 0 ? rep.host_map[w] : -1;
    remap(out.occurrences, rep.host_map);
    g = std::move(rep.graph);
    out.occurrences.push_back({u, std::move(rep.embedding)});
  }
  require_cubic(g, "G[B]");
  out.graph = std::move(g);
  return out;
}

Construction build_GPB(const Graph& base, const std::vector<RootedGadget>& vertex_gadgets) {
  Construction out = build_GB(base, vertex_gadgets);
  Graph g = std::move(out.graph);
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < out.occurrences.size(); ++i) {
    for (Vertex v : out.occurrences[i].embedding) owner[v] = static_cast<int>(i);
  }
  const RootedGadget pp = gadget_P_prime();
  const RootedGadget p = gadget_P();
  const int vertex_gadgets_placed = static_cast<int>(out.occurrences.size());
  auto is_link = [&](const Edge& e) {
    const int a = owner[e.u], b = owner[e.v];
    return a != b && a < vertex_gadgets_placed && b < vertex_gadgets_placed;
  };
  for (;;) {
    std::size_t link = g.size();
    for (std::size_t e = 0; e < g.size(); ++e) {
      if (is_link(g.edge(e))) {
        link = e;
        break;
      }
    }
    if (link == g.size()) break;
    Replacement rep = replace_edge(g, link, pp);
    g = std::move(rep.graph);
    owner.resize(g.order(), -1);
    rep.embedding.resize(p.order());
    for (Vertex v : rep.embedding) owner[v] = static_cast<int>(out.occurrences.size());
    out.occurrences.push_back({p, std::move(rep.embedding)});
  }
  require_cubic(g, "G(P,B)");
  out.graph = std::move(g);
  return out;
}

Construction build_M(int r, int k) {
  if (r < 0 || r > 2) throw GraphError("M^r_k needs r in {0,1,2}");
  if (k < 1) throw GraphError("M^r_k needs k >= 1");
  const int len = 3 * k + 1;  // vertices per cycle
  auto x = [](int i) { return i; };
  auto y = [len](int i) { return len + i; };

  Graph g(2 * len);
  for (int i = 0; i < len; ++i) {
    g.add_edge(x(i), x((i + 1) % len));
    g.add_edge(y(i), y((i + 1) % len));
  }
  g.add_edge(x(0), y(0));
  for (int i = 1; i <= 3 * k - 2; i += 3) g.add_edge(x(i), y(i));
  // Crossing pairs at i = 2 (mod 3); i = 1 (mod 3) would leave degree-2 vertices.
  for (int i = 2; i <= 3 * k - 1; i += 3) {
    g.add_edge(x(i), y(i + 1));
    g.add_edge(x(i + 1), y(i));
  }

  Construction out;
  if (r == 2) {
    out.graph = std::move(g);
    for (int i = 0; i < len; ++i) {
      out.names["x" + std::to_string(i)] = x(i);
      out.names["y" + std::to_string(i)] = y(i);
    }
  } else {
    const int cut = r == 0 ? 1 : 2;  // first surviving index
    std::vector<Vertex> drop;
    for (int i = 0; i < cut; ++i) {
      drop.push_back(x(i));
      drop.push_back(y(i));
    }
    Deletion del = delete_vertices(g, VertexSet(drop));
    out.graph = std::move(del.graph);
    out.graph.add_edge(del.new_id[x(cut)], del.new_id[x(3 * k)]);
    out.graph.add_edge(del.new_id[y(cut)], del.new_id[y(3 * k)]);
    for (int i = cut; i < len; ++i) {
      out.names["x" + std::to_string(i)] = del.new_id[x(i)];
      out.names["y" + std::to_string(i)] = del.new_id[y(i)];
    }
  }
  require_cubic(out.graph, "M^" + std::to_string(r) + "_" + std::to_string(k));
  return out;
}

Construction build_N(int r, int k, int i) {
  if (k < 3) throw GraphError("N^r_k(i) needs k >= 3");
  if (i <= 1 || i >= k) throw GraphError("N^r_k(i) needs 1 < i < k");
  Construction m = build_M(r, k);
  auto at = [&m](const std::string& name) { return m.names.at(name); };
  const Vertex xa = at("x" + std::to_string(3 * i + 1));
  const Vertex xb = at("x" + std::to_string(3 * i + 2));
  const Vertex ya = at("y" + std::to_string(3 * i + 1));
  const Vertex yb = at("y" + std::to_string(3 * i));

  Graph g = without_edges(m.graph, {m.graph.edge_index(xa, xb), m.graph.edge_index(ya, yb)});
  g.add_edge(xa, yb);
  g.add_edge(ya, xb);
  require_cubic(g, "N^" + std::to_string(r) + "_" + std::to_string(k) + "(" + std::to_string(i) + ")");
  m.graph = std::move(g);
  return m;
}

Graph generalized_petersen(int n, int j) {
  if (n < 3 || j < 1 || 2 * j >= n) throw GraphError("GP(n,j) needs n >= 3 and 1 <= j < n/2");
  Graph g(2 * n);
  for (int t = 0; t < n; ++t) g.add_edge(t, (t + 1) % n);
  for (int t = 0; t < n; ++t) g.add_edge(t, n + t);
  for (int t = 0; t < n; ++t) g.add_edge(n + t, n + (t + j) % n);
  return g;
}

}  // namespace domlab
