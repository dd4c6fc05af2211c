#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "domlab/graph.hpp"
#include "domlab/rational.hpp"

namespace domlab {

/// Search limits. Zero means unlimited.
struct Budget {
  std::uint64_t node_limit = 0;
  std::chrono::milliseconds time_limit{0};

  static Budget seconds(double s) {
    return {0, std::chrono::milliseconds(static_cast<std::int64_t>(s * 1000.0))};
  }
};

enum class Certificate { brute_force, branch_and_bound, compositional, bounds_only };
enum class SolveStatus { optimal, bounded, timeout };

const char* to_string(Certificate c);
const char* to_string(SolveStatus s);

struct DominationResult {
  int gamma = 0;            // the optimum when optimal, else the best upper bound
  VertexSet witness;        // a dominating set of size upper_bound
  int lower_bound = 0;
  int upper_bound = 0;
  Certificate certificate = Certificate::bounds_only;
  SolveStatus status = SolveStatus::timeout;
  Rational ratio;           // gamma / v(G)
  std::uint64_t nodes = 0;

  bool optimal() const { return status == SolveStatus::optimal; }
};

bool is_dominating(const Graph& g, const VertexSet& d);

/// Largest graph the subset-enumeration oracle accepts.
inline constexpr int kBruteForceCap = 26;

/// Exact gamma by enumerating subsets in increasing size. Throws GraphError
/// above kBruteForceCap vertices.
DominationResult gamma_bruteforce(const Graph& g);

struct SolveOptions {
  Budget budget;
  /// Vertices that must belong to the dominating set.
  VertexSet forced;
  /// Initial incumbent; ignored unless it dominates and contains `forced`.
  std::optional<VertexSet> warm_start;
  /// A proven lower bound; the search stops as soon as it is matched.
  int known_lower_bound = 0;
};

/// Branch and bound: branch on the closed neighborhood of the undominated
/// vertex with the fewest remaining candidates.
DominationResult gamma_exact(const Graph& g, const SolveOptions& options);
DominationResult gamma_exact(const Graph& g, const Budget& budget = {});

/// gamma(G - removed); the witness is reported in G's vertex ids.
DominationResult gamma_deleted(const Graph& g, const VertexSet& removed, const Budget& budget = {});

}  // namespace domlab
