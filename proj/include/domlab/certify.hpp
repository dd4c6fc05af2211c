#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domlab/domination.hpp"
#include "domlab/gadgets.hpp"
#include "domlab/graph.hpp"

namespace domlab {

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

struct StabilityEntry {
  VertexSet removed;
  DominationResult result;
};

/// gamma(H - V) for every V in the attachment set, V = {} first.
struct StabilityReport {
  Verdict stable = Verdict::inconclusive;
  int gamma = 0;
  VertexSet attachment;
  std::vector<StabilityEntry> table;
};

/// Solutions of "smallest dominating set of H containing Y" for every Y in the
/// attachment set; feasible[mask] holds when that size equals gamma(H).
struct ProfileTable {
  Verdict complete = Verdict::inconclusive;
  VertexSet attachment;
  std::vector<bool> feasible;
  std::vector<VertexSet> witness;
};

/// Memoizes stability and profile tables per (graph, attachment set).
/// Safe to share between threads.
class GadgetCache {
 public:
  std::optional<StabilityReport> find_stability(const std::string& key) const;
  void store_stability(const std::string& key, const StabilityReport& report);
  std::optional<ProfileTable> find_profiles(const std::string& key) const;
  void store_profiles(const std::string& key, const ProfileTable& table);

 private:
  mutable std::mutex mutex_;
  std::map<std::string, StabilityReport> stability_;
  std::map<std::string, ProfileTable> profiles_;
};

std::string cache_key(const Graph& h, const VertexSet& attachment);

StabilityReport check_stability(const Graph& h, const VertexSet& attachment, const Budget& budget,
                                GadgetCache* cache = nullptr);
/// Stability over the gadget's own terminal set.
StabilityReport check_stability(const RootedGadget& h, const Budget& budget, GadgetCache* cache = nullptr);

ProfileTable terminal_profiles(const Graph& h, const VertexSet& attachment, const Budget& budget,
                               GadgetCache* cache = nullptr);

/// Certification refused. occurrence() is the offending occurrence index, or
/// npos for problems not tied to one occurrence.
class CertificationError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  CertificationError(const std::string& what, std::size_t occurrence, bool inconclusive = false)
      : std::runtime_error(what), occurrence_(occurrence), inconclusive_(inconclusive) {}
  std::size_t occurrence() const { return occurrence_; }
  /// True when a budget ran out rather than a hypothesis failing.
  bool inconclusive() const { return inconclusive_; }

 private:
  std::size_t occurrence_;
  bool inconclusive_;
};

struct OccurrenceBound {
  VertexSet attachment;  // gadget-local ids of image vertices with outside neighbors
  int gamma = 0;
};

/// Sum of gamma over disjoint, induced, stable occurrences, plus one for each
/// vertex of a greedy packing of outside vertices whose closed neighborhoods
/// avoid every occurrence and each other.
struct CompositionalBound {
  int lower_bound = 0;
  int gadget_sum = 0;
  std::vector<OccurrenceBound> parts;
  std::vector<Vertex> packing;
};

CompositionalBound compositional_lower_bound(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                             const Budget& budget, GadgetCache* cache = nullptr);

/// Builds a dominating set for g, ideally of size bound.lower_bound.
using WitnessBuilder = std::function<std::optional<VertexSet>(
    const Graph& g, const std::vector<GadgetOccurrence>& occs, const CompositionalBound& bound,
    const Budget& budget, GadgetCache* cache)>;

/// Default builder: picks, per occurrence, a minimum dominating set of the
/// gadget whose attachment vertices cover the outside vertices, spending at
/// most lower_bound - gadget_sum outside vertices.
std::optional<VertexSet> profile_witness(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                         const CompositionalBound& bound, const Budget& budget,
                                         GadgetCache* cache);

/// Lower bound by composition, upper bound by an explicit witness. When they
/// meet the result is optimal with the compositional certificate; otherwise
/// the exact solver runs warm-started from the witness.
DominationResult certified_gamma(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                 const Budget& budget, GadgetCache* cache = nullptr,
                                 const WitnessBuilder& builder = profile_witness);

}  // namespace domlab
