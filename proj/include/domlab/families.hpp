#pragma once

#include <map>
#include <string>
#include <vector>

#include "domlab/gadgets.hpp"
#include "domlab/graph.hpp"

namespace domlab {

/// A built graph together with the gadget copies placed in it and the ids
/// of any named vertices (x0, y3, v1, ...).
struct Construction {
  Graph graph;
  std::vector<GadgetOccurrence> occurrences;
  std::map<std::string, Vertex> names;
};

/// R_k: a 2k-cycle v0..v_{2k-1} whose edges v_{2i}v_{2i+1} are replaced by
/// copies of P^{levels[i]} (all P^1 when `levels` is empty).
Construction build_R(int k, const std::vector<int>& levels = {});

/// L_r: path v1..v_{2r} with edges v_{2i-1}v_{2i} replaced by P copies and an
/// S copy hung off each end by a bridge.
Construction build_L(int r);

/// G(P): every edge of the cubic multigraph g replaced by a P' copy. The
/// occurrences are the inner P copies.
Construction build_GP(const Graph& g);

/// G[B]: every vertex of the cubic multigraph g replaced by a B copy, or by
/// vertex_gadgets[v] when that list is non-empty.
Construction build_GB(const Graph& g, const std::vector<RootedGadget>& vertex_gadgets = {});

/// G(P,B): G[B] followed by replacing every edge between vertex gadgets by P'.
Construction build_GPB(const Graph& g, const std::vector<RootedGadget>& vertex_gadgets = {});

/// M^r_k for r in {0,1,2}, k >= 1. Names x_i / y_i refer to the surviving
/// vertices of the two (3k+1)-cycles.
Construction build_M(int r, int k);

/// N^r_k(i): M^r_k with x_{3i+1}x_{3i+2}, y_{3i+1}y_{3i} swapped for
/// x_{3i+1}y_{3i}, y_{3i+1}x_{3i+2}; requires k >= 3 and 1 < i < k.
Construction build_N(int r, int k, int i);

/// GP(n, j): outer n-cycle u_0..u_{n-1} (ids 0..n-1), spokes u_t v_t, inner
/// edges v_t v_{t+j} (ids n..2n-1).
Graph generalized_petersen(int n, int j);

}  // namespace domlab
