#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

bool is_cubic(const Graph& g);

/// Indices of cut-edges, increasing. Parallel edges are never bridges.
std::vector<std::size_t> bridges(const Graph& g);

/// Vertex connectivity of the underlying simple graph: the fewest vertices
/// whose removal disconnects it, or n-1 when it is complete. 0 when
/// disconnected or n <= 1.
int vertex_connectivity(const Graph& g);

/// Max number of internally vertex-disjoint s-t paths for non-adjacent s, t,
/// stopping early once `cap` is reached.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

struct CyclicCutResult {
  bool cyclically_4_connected = true;
  /// Edge indices of a cut of size <= 3 with a cycle on both sides.
  std::optional<std::vector<std::size_t>> witness;
};

/// Exhaustive check over all edge subsets of size <= 3. Throws GraphError on
/// non-cubic input.
CyclicCutResult cyclic_4_edge_connectivity(const Graph& g);

/// True iff removing `cut` leaves at least two components that contain a cycle.
bool separates_cycles(const Graph& g, const std::vector<std::size_t>& cut);

enum class SearchStatus { found, not_found, budget_exhausted };

const char* to_string(SearchStatus s);

struct HamiltonResult {
  SearchStatus status = SearchStatus::not_found;
  std::vector<Vertex> cycle;  // v0 .. v_{n-1}; closes back to v0
  std::uint64_t expansions = 0;
};

/// Backtracking Hamiltonian cycle search. `budget` caps node expansions.
HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t budget = 100'000'000);

/// n distinct vertices, consecutive pairs adjacent, and the closing edge present.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle);

}  // namespace domlab
