#include "domlab/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace domlab {

void RootedGadget::validate() const {
  // W carries its four degree-2 vertices as terminals; replacement gadgets use 1..3.
  if (terminals.empty() || terminals.size() > 4) {
    throw GraphError("gadget " + name + ": needs 1..4 terminals");
  }
  std::set<Vertex> seen;
  for (Vertex t : terminals) {
    if (!graph.valid_vertex(t)) throw GraphError("gadget " + name + ": terminal out of range");
    if (!seen.insert(t).second) throw GraphError("gadget " + name + ": repeated terminal");
  }
  if (!terminal_names.empty() && terminal_names.size() != terminals.size()) {
    throw GraphError("gadget " + name + ": terminal names misaligned");
  }
}

std::map<Vertex, std::string> RootedGadget::labels() const {
  std::map<Vertex, std::string> out;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    out[terminals[i]] = i < terminal_names.size() ? terminal_names[i] : "t" + std::to_string(i + 1);
  }
  return out;
}

Replacement replace_edge(const Graph& g, std::size_t index, const RootedGadget& h) {
  h.validate();
  if (h.terminals.size() != 2) throw GraphError("edge replacement needs a 2-terminal gadget");
  const Edge target = g.edge(index);

  Graph out(g.order());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != index) out.add_edge(g.edge(i).u, g.edge(i).v);
  }
  std::vector<Vertex> embedding(h.order(), -1);
  embedding[h.terminals[0]] = target.u;
  embedding[h.terminals[1]] = target.v;
  for (Vertex x = 0; x < h.order(); ++x) {
    if (embedding[x] < 0) embedding[x] = out.add_vertex();
  }
  for (const Edge& e : h.graph.edges()) out.add_edge(embedding[e.u], embedding[e.v]);

  std::vector<Vertex> host_map(g.order());
  std::iota(host_map.begin(), host_map.end(), 0);
  return {std::move(out), std::move(embedding), std::move(host_map)};
}

Replacement replace_vertex(const Graph& g, Vertex v, const RootedGadget& u) {
  u.validate();
  if (u.terminals.size() != 3) throw GraphError("vertex replacement needs a 3-terminal gadget");
  if (g.degree(v) != 3) {
    throw GraphError("vertex replacement needs a degree-3 vertex, vertex " + std::to_string(v) +
                     " has degree " + std::to_string(g.degree(v)));
  }
  std::vector<Vertex> nbrs = g.neighbors(v);
  std::sort(nbrs.begin(), nbrs.end());

  Deletion del = delete_vertices(g, VertexSet{v});
  Graph out = std::move(del.graph);
  std::vector<Vertex> embedding = add_disjoint_copy(out, u.graph);
  for (std::size_t i = 0; i < 3; ++i) {
    out.add_edge(embedding[u.terminals[i]], del.new_id[nbrs[i]]);
  }
  return {std::move(out), std::move(embedding), std::move(del.new_id)};
}

namespace {

struct TwinLayout {
  Graph graph;
  Vertex x1, x2, y1, y2;
};

// X on 0..v-1, Y on v..2v-1; no connecting edges yet.
TwinLayout twin_layout(const RootedGadget& h) {
  h.validate();
  if (h.terminals.size() != 2) {
    throw GraphError("two-copy operators need a 2-terminal gadget, " + h.name + " has " +
                     std::to_string(h.terminals.size()));
  }
  TwinLayout t;
  add_disjoint_copy(t.graph, h.graph);
  add_disjoint_copy(t.graph, h.graph);
  const Vertex n = h.order();
  t.x1 = h.terminals[0];
  t.x2 = h.terminals[1];
  t.y1 = n + h.terminals[0];
  t.y2 = n + h.terminals[1];
  return t;
}

}  // namespace

RootedGadget op_T1(const RootedGadget& h) {
  TwinLayout t = twin_layout(h);
  const Vertex z1 = t.graph.add_vertex();
  t.graph.add_edge(t.x1, z1);
  t.graph.add_edge(z1, t.y1);
  t.graph.add_edge(t.x2, t.y2);
  return {"T1(" + h.name + ")", std::move(t.graph), {z1}, {"z1"}};
}

RootedGadget op_T2(const RootedGadget& h) {
  TwinLayout t = twin_layout(h);
  const Vertex z1 = t.graph.add_vertex();
  const Vertex z2 = t.graph.add_vertex();
  t.graph.add_edge(t.x1, z1);
  t.graph.add_edge(z1, t.y1);
  t.graph.add_edge(t.x2, z2);
  t.graph.add_edge(z2, t.y2);
  return {"T2(" + h.name + ")", std::move(t.graph), {z1, z2}, {"z1", "z2"}};
}

namespace {

// F2 skeleton; when `middle` is set, z1z2 is subdivided by a fifth vertex z.
RootedGadget f_operator(const RootedGadget& h, bool middle) {
  TwinLayout t = twin_layout(h);
  const Vertex z1 = t.graph.add_vertex();
  const Vertex z2 = t.graph.add_vertex();
  const Vertex x = t.graph.add_vertex();
  const Vertex y = t.graph.add_vertex();
  t.graph.add_edge(t.x1, x);
  t.graph.add_edge(x, z1);
  t.graph.add_edge(t.y1, y);
  t.graph.add_edge(y, z1);
  t.graph.add_edge(t.x2, z2);
  t.graph.add_edge(z2, t.y2);
  if (!middle) {
    t.graph.add_edge(z1, z2);
    return {"F2(" + h.name + ")", std::move(t.graph), {x, y}, {"x", "y"}};
  }
  const Vertex z = t.graph.add_vertex();
  t.graph.add_edge(z1, z);
  t.graph.add_edge(z, z2);
  return {"F3(" + h.name + ")", std::move(t.graph), {x, y, z}, {"x", "y", "z"}};
}

RootedGadget renamed(RootedGadget g, std::string name, std::vector<std::string> terminal_names) {
  g.name = std::move(name);
  g.terminal_names = std::move(terminal_names);
  return g;
}

// K_{3,3} on parts {0,1,2} and {3,4,5}; the edges 0-3, 0-4, 0-5 sit at indices 0, 1, 2.
RootedGadget subdivided_k33(int subdivisions) {
  Graph g = complete_bipartite(3, 3);
  std::vector<Vertex> terminals;
  for (int i = 0; i < subdivisions; ++i) {
    Subdivision s = subdivide_edge(g, static_cast<std::size_t>(i));
    g = std::move(s.graph);
    terminals.push_back(s.vertex);
  }
  return {"", std::move(g), std::move(terminals), {}};
}

}  // namespace

RootedGadget op_F2(const RootedGadget& h) { return f_operator(h, false); }
RootedGadget op_F3(const RootedGadget& h) { return f_operator(h, true); }

std::vector<GadgetOccurrence> twin_copies(const RootedGadget& h) {
  std::vector<Vertex> x(h.order()), y(h.order());
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), h.order());
  return {{h, std::move(x)}, {h, std::move(y)}};
}

RootedGadget gadget_A() { return renamed(subdivided_k33(2), "A", {"a1", "a2"}); }
RootedGadget gadget_B() { return renamed(subdivided_k33(3), "B", {"b1", "b2", "b3"}); }
RootedGadget gadget_S() { return renamed(op_T1(gadget_A()), "S", {"s"}); }
RootedGadget gadget_T() { return renamed(op_T2(gadget_A()), "T", {"t1", "t2"}); }
RootedGadget gadget_P() { return renamed(op_F2(gadget_A()), "P", {"p1", "p2"}); }
RootedGadget gadget_Q() { return renamed(op_F3(gadget_A()), "Q", {"q1", "q2", "q3"}); }

RootedGadget pendant_extension(const RootedGadget& h, const std::string& name) {
  h.validate();
  RootedGadget out{name, h.graph, {}, {}};
  for (std::size_t i = 0; i < h.terminals.size(); ++i) {
    const Vertex leaf = out.graph.add_vertex();
    out.graph.add_edge(h.terminals[i], leaf);
    out.terminals.push_back(leaf);
    const std::string base = i < h.terminal_names.size() ? h.terminal_names[i] : "t" + std::to_string(i + 1);
    out.terminal_names.push_back(base.substr(0, 1) + "'" + base.substr(1));
  }
  return out;
}

RootedGadget gadget_P_prime() { return pendant_extension(gadget_P(), "P'"); }

RootedGadget gadget_W() {
  // t1=0, s1=1, t2=2, s2=3, p1=4, p2=5: square t1 s1 t2 s2, path s1 p1 p2 s2.
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 5}, {5, 3}});
  return {"W", std::move(g), {0, 2, 4, 5}, {"t1", "t2", "p1", "p2"}};
}

RootedGadget gadget_catalog(const std::string& name) {
  if (name == "A") return gadget_A();
  if (name == "B") return gadget_B();
  if (name == "S") return gadget_S();
  if (name == "T") return gadget_T();
  if (name == "P") return gadget_P();
  if (name == "Q") return gadget_Q();
  if (name == "P'" || name == "Pprime") return gadget_P_prime();
  if (name == "W") return gadget_W();
  throw GraphError("unknown gadget '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"A", "B", "S", "T", "P", "Q", "P'", "W"}; }

RootedGadget gadget_P_i(int i) {
  if (i < 1) throw GraphError("P^i needs i >= 1");
  RootedGadget g = gadget_P();
  for (int level = 2; level <= i; ++level) g = op_F2(g);
  return renamed(std::move(g), "P^" + std::to_string(i), {"p1", "p2"});
}

RootedGadget gadget_Q_i(int i) {
  if (i < 1) throw GraphError("Q^i needs i >= 1");
  RootedGadget base = i == 1 ? gadget_A() : gadget_P_i(i - 1);
  return renamed(op_F3(base), "Q^" + std::to_string(i), {"q1", "q2", "q3"});
}

}  // namespace domlab
