#include "domlab/certify.hpp"

#include <algorithm>
#include <sstream>

namespace domlab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<StabilityReport> GadgetCache::find_stability(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = stability_.find(key);
  if (it == stability_.end()) return std::nullopt;
  return it->second;
}

void GadgetCache::store_stability(const std::string& key, const StabilityReport& report) {
  std::lock_guard lock(mutex_);
  stability_[key] = report;
}

std::optional<ProfileTable> GadgetCache::find_profiles(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = profiles_.find(key);
  if (it == profiles_.end()) return std::nullopt;
  return it->second;
}

void GadgetCache::store_profiles(const std::string& key, const ProfileTable& table) {
  std::lock_guard lock(mutex_);
  profiles_[key] = table;
}

std::string cache_key(const Graph& h, const VertexSet& attachment) {
  std::ostringstream out;
  out << h.order() << ':';
  for (const Edge& e : h.edges()) out << e.u << '-' << e.v << ',';
  out << '|' << to_string(attachment);
  return out.str();
}

namespace {

VertexSet subset_of(const VertexSet& base, unsigned mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (mask & (1u << i)) out.push_back(base.vertices()[i]);
  }
  return VertexSet(std::move(out));
}

void check_attachment_size(const VertexSet& attachment) {
  if (attachment.size() > 16) throw GraphError("attachment set too large for subset enumeration");
}

}  // namespace

StabilityReport check_stability(const Graph& h, const VertexSet& attachment, const Budget& budget,
                                GadgetCache* cache) {
  attachment.validate(h);
  check_attachment_size(attachment);
  const std::string key = cache_key(h, attachment);
  if (cache) {
    if (auto hit = cache->find_stability(key)) return *hit;
  }
  StabilityReport report;
  report.attachment = attachment;
  bool conclusive = true, equal = true;
  for (unsigned mask = 0; mask < (1u << attachment.size()); ++mask) {
    VertexSet removed = subset_of(attachment, mask);
    DominationResult r = gamma_deleted(h, removed, budget);
    conclusive = conclusive && r.optimal();
    if (mask == 0) report.gamma = r.gamma;
    equal = equal && r.gamma == report.gamma;
    report.table.push_back({std::move(removed), std::move(r)});
  }
  // A refuting entry is only trusted when every entry is exact.
  report.stable = !conclusive ? Verdict::inconclusive : equal ? Verdict::yes : Verdict::no;
  if (cache && conclusive) cache->store_stability(key, report);
  return report;
}

StabilityReport check_stability(const RootedGadget& h, const Budget& budget, GadgetCache* cache) {
  h.validate();
  return check_stability(h.graph, VertexSet(h.terminals), budget, cache);
}

ProfileTable terminal_profiles(const Graph& h, const VertexSet& attachment, const Budget& budget,
                               GadgetCache* cache) {
  attachment.validate(h);
  check_attachment_size(attachment);
  const std::string key = cache_key(h, attachment);
  if (cache) {
    if (auto hit = cache->find_profiles(key)) return *hit;
  }
  const unsigned subsets = 1u << attachment.size();
  ProfileTable table;
  table.attachment = attachment;
  table.feasible.assign(subsets, false);
  table.witness.assign(subsets, VertexSet{});
  bool conclusive = true;
  int gamma = 0;
  for (unsigned mask = 0; mask < subsets; ++mask) {
    // Feasibility is closed under taking subsets.
    bool parents_ok = true;
    for (std::size_t i = 0; i < attachment.size() && parents_ok; ++i) {
      if (mask & (1u << i)) parents_ok = table.feasible[mask & ~(1u << i)];
    }
    if (!parents_ok) continue;
    SolveOptions opt;
    opt.budget = budget;
    opt.forced = subset_of(attachment, mask);
    if (mask != 0) opt.known_lower_bound = gamma;
    DominationResult r = gamma_exact(h, opt);
    if (!r.optimal()) {
      conclusive = false;
      continue;
    }
    if (mask == 0) gamma = r.gamma;
    table.feasible[mask] = r.gamma == gamma;
    table.witness[mask] = r.witness;
  }
  table.complete = conclusive ? Verdict::yes : Verdict::inconclusive;
  if (cache && conclusive) cache->store_profiles(key, table);
  return table;
}

namespace {

struct Layout {
  std::vector<int> owner;                  // host vertex -> occurrence index, -1 outside
  std::vector<VertexSet> attachment;       // gadget-local
  std::vector<Vertex> outside;
};

Layout inspect(const Graph& g, const std::vector<GadgetOccurrence>& occs) {
  Layout lay;
  lay.owner.assign(g.order(), -1);
  for (std::size_t i = 0; i < occs.size(); ++i) {
    const auto& occ = occs[i];
    if (static_cast<int>(occ.embedding.size()) != occ.gadget.order()) {
      throw CertificationError("occurrence " + std::to_string(i) + ": embedding size " +
                                   std::to_string(occ.embedding.size()) + " != gadget order " +
                                   std::to_string(occ.gadget.order()),
                               i);
    }
    for (Vertex v : occ.embedding) {
      if (!g.valid_vertex(v)) {
        throw CertificationError("occurrence " + std::to_string(i) + ": vertex out of range", i);
      }
      if (lay.owner[v] >= 0) {
        const std::string what = lay.owner[v] == static_cast<int>(i)
                                     ? "embedding is not injective"
                                     : "overlaps occurrence " + std::to_string(lay.owner[v]);
        throw CertificationError("occurrence " + std::to_string(i) + ": " + what, i);
      }
      lay.owner[v] = static_cast<int>(i);
    }
  }

  std::vector<std::vector<Edge>> inner(occs.size());
  std::vector<std::vector<Vertex>> local(occs.size());
  std::vector<int> local_id(g.order(), -1);
  for (std::size_t i = 0; i < occs.size(); ++i) {
    for (std::size_t x = 0; x < occs[i].embedding.size(); ++x) {
      local_id[occs[i].embedding[x]] = static_cast<int>(x);
    }
  }
  std::vector<std::vector<bool>> boundary(occs.size());
  for (std::size_t i = 0; i < occs.size(); ++i) boundary[i].assign(occs[i].gadget.order(), false);
  for (const Edge& e : g.edges()) {
    const int a = lay.owner[e.u], b = lay.owner[e.v];
    if (a >= 0 && a == b) {
      inner[a].emplace_back(local_id[e.u], local_id[e.v]);
    } else {
      if (a >= 0) boundary[a][local_id[e.u]] = true;
      if (b >= 0) boundary[b][local_id[e.v]] = true;
    }
  }
  for (std::size_t i = 0; i < occs.size(); ++i) {
    std::vector<Edge> expected = occs[i].gadget.graph.edges();
    std::sort(expected.begin(), expected.end());
    std::sort(inner[i].begin(), inner[i].end());
    if (expected != inner[i]) {
      throw CertificationError("occurrence " + std::to_string(i) +
                                   ": image is not an induced copy of gadget " + occs[i].gadget.name,
                               i);
    }
    std::vector<Vertex> att;
    for (Vertex x = 0; x < occs[i].gadget.order(); ++x) {
      if (boundary[i][x]) att.push_back(x);
    }
    lay.attachment.emplace_back(std::move(att));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (lay.owner[v] < 0) lay.outside.push_back(v);
  }
  return lay;
}

}  // namespace

CompositionalBound compositional_lower_bound(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                             const Budget& budget, GadgetCache* cache) {
  const Layout lay = inspect(g, occs);
  CompositionalBound out;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    StabilityReport rep = check_stability(occs[i].gadget.graph, lay.attachment[i], budget, cache);
    if (rep.stable == Verdict::inconclusive) {
      throw CertificationError("occurrence " + std::to_string(i) + ": stability check ran out of budget",
                               i, true);
    }
    if (rep.stable == Verdict::no) {
      std::string detail;
      for (const auto& entry : rep.table) {
        if (entry.result.gamma != rep.gamma) {
          detail = "gamma(H - " + to_string(entry.removed) + ") = " + std::to_string(entry.result.gamma) +
                   " != " + std::to_string(rep.gamma);
          break;
        }
      }
      throw CertificationError("occurrence " + std::to_string(i) + " (" + occs[i].gadget.name +
                                   ") is not stable on its attachment set: " + detail,
                               i);
    }
    out.parts.push_back({lay.attachment[i], rep.gamma});
    out.gadget_sum += rep.gamma;
  }

  std::vector<bool> blocked(g.order(), false);
  for (Vertex u : lay.outside) {
    std::vector<Vertex> closed = g.simple_neighbors(u);
    closed.push_back(u);
    const bool fits = std::all_of(closed.begin(), closed.end(),
                                  [&](Vertex w) { return lay.owner[w] < 0 && !blocked[w]; });
    if (!fits) continue;
    for (Vertex w : closed) blocked[w] = true;
    out.packing.push_back(u);
  }
  out.lower_bound = out.gadget_sum + static_cast<int>(out.packing.size());
  return out;
}

namespace {

class ProfileSearch {
 public:
  ProfileSearch(const Graph& g, const std::vector<GadgetOccurrence>& occs, const Layout& lay,
                std::vector<ProfileTable> tables, int extra)
      : g_(g), occs_(occs), lay_(lay), tables_(std::move(tables)), extra_(extra) {
    required_.assign(occs.size(), 0);
    picked_.assign(g.order(), false);
    bit_.assign(g.order(), -1);
    for (std::size_t i = 0; i < occs.size(); ++i) {
      const auto& att = lay.attachment[i].vertices();
      for (std::size_t b = 0; b < att.size(); ++b) bit_[occs[i].embedding[att[b]]] = static_cast<int>(b);
    }
  }

  std::optional<VertexSet> run() {
    if (!dfs()) return std::nullopt;
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < occs_.size(); ++i) {
      for (Vertex x : tables_[i].witness[required_[i]]) out.push_back(occs_[i].embedding[x]);
    }
    for (Vertex v : lay_.outside) {
      if (picked_[v]) out.push_back(v);
    }
    return VertexSet(std::move(out));
  }

 private:
  static constexpr std::uint64_t kNodeLimit = 2'000'000;

  bool covers(Vertex w) const {
    if (lay_.owner[w] < 0) return picked_[w];
    const int occ = lay_.owner[w];
    return bit_[w] >= 0 && (required_[occ] & (1u << bit_[w]));
  }

  Vertex first_undominated() const {
    for (Vertex u : lay_.outside) {
      if (picked_[u]) continue;
      const auto& nbrs = g_.neighbors(u);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return covers(w); })) return u;
    }
    return -1;
  }

  bool dfs() {
    if (++nodes_ > kNodeLimit) return false;
    const Vertex u = first_undominated();
    if (u < 0) return true;
    for (Vertex w : g_.simple_neighbors(u)) {
      const int occ = lay_.owner[w];
      if (occ < 0 || bit_[w] < 0) continue;
      const unsigned before = required_[occ];
      const unsigned after = before | (1u << bit_[w]);
      if (!tables_[occ].feasible[after]) continue;
      required_[occ] = after;
      if (dfs()) return true;
      required_[occ] = before;
    }
    if (used_ < extra_) {
      std::vector<Vertex> closed = g_.simple_neighbors(u);
      closed.insert(closed.begin(), u);
      for (Vertex w : closed) {
        if (lay_.owner[w] >= 0 || picked_[w]) continue;
        picked_[w] = true;
        ++used_;
        if (dfs()) return true;
        --used_;
        picked_[w] = false;
      }
    }
    return false;
  }

  const Graph& g_;
  const std::vector<GadgetOccurrence>& occs_;
  const Layout& lay_;
  std::vector<ProfileTable> tables_;
  int extra_;
  int used_ = 0;
  std::vector<unsigned> required_;
  std::vector<bool> picked_;
  std::vector<int> bit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<VertexSet> profile_witness(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                         const CompositionalBound& bound, const Budget& budget,
                                         GadgetCache* cache) {
  const Layout lay = inspect(g, occs);
  std::vector<ProfileTable> tables;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    ProfileTable t = terminal_profiles(occs[i].gadget.graph, lay.attachment[i], budget, cache);
    if (t.complete != Verdict::yes) return std::nullopt;
    tables.push_back(std::move(t));
  }
  return ProfileSearch(g, occs, lay, std::move(tables), bound.lower_bound - bound.gadget_sum).run();
}

DominationResult certified_gamma(const Graph& g, const std::vector<GadgetOccurrence>& occs,
                                 const Budget& budget, GadgetCache* cache, const WitnessBuilder& builder) {
  const CompositionalBound bound = compositional_lower_bound(g, occs, budget, cache);
  std::optional<VertexSet> witness = builder ? builder(g, occs, bound, budget, cache) : std::nullopt;
  if (witness && !is_dominating(g, *witness)) witness.reset();

  if (witness && static_cast<int>(witness->size()) == bound.lower_bound) {
    DominationResult r;
    r.gamma = r.lower_bound = r.upper_bound = bound.lower_bound;
    r.witness = std::move(*witness);
    r.certificate = Certificate::compositional;
    r.status = SolveStatus::optimal;
    r.ratio = g.order() == 0 ? Rational(0) : Rational(r.gamma, g.order());
    return r;
  }

  SolveOptions opt;
  opt.budget = budget;
  opt.warm_start = witness;
  opt.known_lower_bound = bound.lower_bound;
  DominationResult r = gamma_exact(g, opt);
  r.lower_bound = std::max(r.lower_bound, std::min(bound.lower_bound, r.upper_bound));
  return r;
}

}  // namespace domlab
