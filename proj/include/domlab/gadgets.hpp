#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// A graph with an ordered list of distinct terminal vertices (1..3 for
/// replacement gadgets; W carries four).
struct RootedGadget {
  std::string name;
  Graph graph;
  std::vector<Vertex> terminals;
  std::vector<std::string> terminal_names;  // aligned with terminals

  int order() const { return graph.order(); }
  /// Throws GraphError unless terminals are distinct valid vertices, 1..4 of them.
  void validate() const;
  /// Terminal names as a vertex -> name map (for DOT output).
  std::map<Vertex, std::string> labels() const;
};

/// A placed copy of a gadget: embedding[v] is the host vertex hosting gadget vertex v.
struct GadgetOccurrence {
  RootedGadget gadget;
  std::vector<Vertex> embedding;
};

struct Replacement {
  Graph graph;
  /// Image of every gadget vertex in the result.
  std::vector<Vertex> embedding;
  /// Old host id -> new host id (-1 for the replaced vertex). Identity for
  /// edge replacement.
  std::vector<Vertex> host_map;
};

/// Removes edge `index` = {v1, v2} (v1 the lower id) and glues a fresh copy of
/// h in, identifying h's first terminal with v1 and second with v2. Host
/// vertices keep their ids, the remaining host edges keep their relative
/// order, and the gadget's other vertices are appended.
Replacement replace_edge(const Graph& g, std::size_t index, const RootedGadget& h);

/// Removes a degree-3 vertex v and joins terminal i of a fresh copy of u to the
/// i-th neighbor of v, neighbors taken in increasing id (with multiplicity).
/// Surviving host vertices are renumbered in increasing order, then u's
/// vertices are appended.
Replacement replace_vertex(const Graph& g, Vertex v, const RootedGadget& u);

// The two-copy operators. Each places copy X of h on vertices 0..v(h)-1 and
// copy Y on v(h)..2v(h)-1, then appends the new vertices in the order
// z1, z2, x, y, z (those the operator uses).
RootedGadget op_T1(const RootedGadget& h);
RootedGadget op_T2(const RootedGadget& h);
RootedGadget op_F2(const RootedGadget& h);
RootedGadget op_F3(const RootedGadget& h);

/// Embeddings of the X and Y copies inside any op_* result built from h.
std::vector<GadgetOccurrence> twin_copies(const RootedGadget& h);

RootedGadget gadget_A();
RootedGadget gadget_B();
RootedGadget gadget_S();
RootedGadget gadget_T();
RootedGadget gadget_P();
RootedGadget gadget_Q();
RootedGadget gadget_P_prime();
RootedGadget gadget_W();

/// Named catalog lookup: A, B, S, T, P, Q, P' (also "Pprime"), W.
RootedGadget gadget_catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// P^1 = P, P^{i+1} = F2(P^i).
RootedGadget gadget_P_i(int i);
/// Q^i = F3(P^{i-1}) with P^0 = A, so that Q^1 = Q and v(Q^i) = v(P^i) + 1.
RootedGadget gadget_Q_i(int i);

/// Pendant extension: adds a new leaf at each terminal; the leaves become the
/// terminals (P' from P).
RootedGadget pendant_extension(const RootedGadget& h, const std::string& name);

}  // namespace domlab
