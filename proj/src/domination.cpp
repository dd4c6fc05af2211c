#include "domlab/domination.hpp"

#include <algorithm>
#include <cstdint>

namespace domlab {

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::brute_force: return "brute-force";
    case Certificate::branch_and_bound: return "branch-and-bound";
    case Certificate::compositional: return "compositional";
    case Certificate::bounds_only: return "bounds-only";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::bounded: return "bounded";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

namespace {

std::vector<std::vector<Vertex>> closed_neighborhoods(const Graph& g) {
  std::vector<std::vector<Vertex>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v] = g.simple_neighbors(v);
    out[v].insert(std::lower_bound(out[v].begin(), out[v].end(), v), v);
  }
  return out;
}

Rational ratio_of(int gamma, int n) { return n == 0 ? Rational(0) : Rational(gamma, n); }

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  d.validate(g);
  std::vector<bool> covered(g.order(), false);
  for (Vertex v : d) {
    covered[v] = true;
    for (Vertex w : g.neighbors(v)) covered[w] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

DominationResult gamma_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceCap) {
    throw GraphError("brute-force oracle is capped at " + std::to_string(kBruteForceCap) +
                     " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> mask(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    mask[v] |= 1u << v;
    for (Vertex w : g.neighbors(v)) mask[v] |= 1u << w;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1u;

  DominationResult r;
  r.certificate = Certificate::brute_force;
  r.status = SolveStatus::optimal;
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      ++r.nodes;
      if (n == 0) break;
      continue;
    }
    // Gosper's hack over all k-subsets of n bits.
    std::uint32_t s = (1u << k) - 1u;
    while (s <= full) {
      ++r.nodes;
      std::uint32_t cover = 0;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) cover |= mask[__builtin_ctz(rest)];
      if (cover == full) {
        std::vector<Vertex> members;
        for (std::uint32_t rest = s; rest; rest &= rest - 1) members.push_back(__builtin_ctz(rest));
        r.witness = VertexSet(std::move(members));
        r.gamma = r.lower_bound = r.upper_bound = k;
        r.ratio = ratio_of(k, n);
        return r;
      }
      const std::uint32_t c = s & (~s + 1u);
      const std::uint32_t next = s + c;
      s = (((next ^ s) >> 2) / c) | next;
    }
  }
  r.ratio = ratio_of(0, n);
  return r;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolveOptions& opt)
      : n_(g.order()), nb_(closed_neighborhoods(g)), opt_(opt) {
    chosen_.assign(n_, false);
    excluded_.assign(n_, false);
    dom_.assign(n_, 0);
    cand_.assign(n_, 0);
    cov_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      cand_[v] = static_cast<int>(nb_[v].size());
      cov_[v] = static_cast<int>(nb_[v].size());
      max_cover_ = std::max(max_cover_, cov_[v]);
    }
    undominated_ = n_;
    buckets_.assign(max_cover_ + 1, 0);
    start_ = std::chrono::steady_clock::now();
  }

  DominationResult solve() {
    opt_.forced.validate(Graph(n_));
    for (Vertex v : opt_.forced) choose(v);

    best_ = greedy();
    if (opt_.warm_start && opt_.warm_start->size() < best_.size() && admissible(*opt_.warm_start)) {
      best_ = opt_.warm_start->vertices();
    }
    root_bound_ = count_ + bound();
    if (static_cast<int>(best_.size()) > std::max(root_bound_, opt_.known_lower_bound)) search();

    DominationResult r;
    r.witness = VertexSet(best_);
    r.upper_bound = static_cast<int>(best_.size());
    r.gamma = r.upper_bound;
    r.nodes = nodes_;
    r.ratio = ratio_of(r.gamma, n_);
    if (!aborted_) {
      r.status = SolveStatus::optimal;
      r.certificate = Certificate::branch_and_bound;
      r.lower_bound = r.upper_bound;
    } else {
      r.status = SolveStatus::timeout;
      r.certificate = Certificate::bounds_only;
      r.lower_bound = std::max(root_bound_, opt_.known_lower_bound);
      r.lower_bound = std::min(r.lower_bound, r.upper_bound);
    }
    return r;
  }

 private:
  bool admissible(const VertexSet& s) const {
    for (Vertex v : opt_.forced) {
      if (!s.contains(v)) return false;
    }
    for (Vertex v : s) {
      if (v < 0 || v >= n_) return false;
    }
    std::vector<bool> covered(n_, false);
    for (Vertex v : s)
      for (Vertex w : nb_[v]) covered[w] = true;
    return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
  }

  void choose(Vertex w) {
    chosen_[w] = true;
    ++count_;
    for (Vertex v : nb_[w]) {
      if (dom_[v]++ == 0) {
        --undominated_;
        for (Vertex x : nb_[v]) --cov_[x];
      }
    }
  }

  void unchoose(Vertex w) {
    chosen_[w] = false;
    --count_;
    for (Vertex v : nb_[w]) {
      if (--dom_[v] == 0) {
        ++undominated_;
        for (Vertex x : nb_[v]) ++cov_[x];
      }
    }
  }

  void exclude(Vertex w) {
    excluded_[w] = true;
    for (Vertex v : nb_[w]) --cand_[v];
  }

  void include_again(Vertex w) {
    excluded_[w] = false;
    for (Vertex v : nb_[w]) ++cand_[v];
  }

  // Fewest extra vertices whose coverage counts could sum to the number of
  // undominated vertices.
  int bound() {
    if (undominated_ == 0) return 0;
    std::fill(buckets_.begin(), buckets_.end(), 0);
    for (Vertex w = 0; w < n_; ++w) {
      if (!chosen_[w] && !excluded_[w] && cov_[w] > 0) ++buckets_[cov_[w]];
    }
    int need = undominated_, picked = 0;
    for (int c = max_cover_; c >= 1 && need > 0; --c) {
      const int take = std::min(buckets_[c], (need + c - 1) / c);
      picked += take;
      need -= take * c;
    }
    return need > 0 ? n_ + 1 : picked;
  }

  std::vector<Vertex> greedy() {
    std::vector<Vertex> picks;
    while (undominated_ > 0) {
      Vertex best = -1;
      for (Vertex w = 0; w < n_; ++w) {
        if (!chosen_[w] && !excluded_[w] && (best < 0 || cov_[w] > cov_[best])) best = w;
      }
      if (best < 0 || cov_[best] == 0) break;
      choose(best);
      picks.push_back(best);
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (chosen_[v]) out.push_back(v);
    }
    for (auto it = picks.rbegin(); it != picks.rend(); ++it) unchoose(*it);
    return out;
  }

  bool out_of_budget() {
    if (opt_.budget.node_limit && nodes_ >= opt_.budget.node_limit) return true;
    if (opt_.budget.time_limit.count() > 0 && (nodes_ & 1023) == 0) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed >= opt_.budget.time_limit) return true;
    }
    return false;
  }

  // Returns true when the search may stop (budget or matched lower bound).
  bool search() {
    ++nodes_;
    if (out_of_budget()) {
      aborted_ = true;
      return true;
    }
    if (undominated_ == 0) {
      if (count_ < static_cast<int>(best_.size())) {
        best_.clear();
        for (Vertex v = 0; v < n_; ++v) {
          if (chosen_[v]) best_.push_back(v);
        }
        if (count_ <= opt_.known_lower_bound) return true;
      }
      return false;
    }
    if (count_ + bound() >= static_cast<int>(best_.size())) return false;

    Vertex u = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (dom_[v] == 0 && (u < 0 || cand_[v] < cand_[u])) u = v;
    }
    if (cand_[u] == 0) return false;

    std::vector<Vertex> tried;
    bool stop = false;
    for (Vertex w : nb_[u]) {
      if (excluded_[w]) continue;
      choose(w);
      stop = search();
      unchoose(w);
      if (stop) break;
      exclude(w);
      tried.push_back(w);
      if (count_ + 1 >= static_cast<int>(best_.size())) break;
    }
    for (Vertex w : tried) include_again(w);
    return stop;
  }

  int n_;
  std::vector<std::vector<Vertex>> nb_;
  SolveOptions opt_;
  std::vector<bool> chosen_, excluded_;
  std::vector<int> dom_, cand_, cov_, buckets_;
  int max_cover_ = 1;
  int undominated_ = 0;
  int count_ = 0;
  int root_bound_ = 0;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

DominationResult gamma_exact(const Graph& g, const SolveOptions& options) {
  return BranchAndBound(g, options).solve();
}

DominationResult gamma_exact(const Graph& g, const Budget& budget) {
  SolveOptions opt;
  opt.budget = budget;
  return gamma_exact(g, opt);
}

DominationResult gamma_deleted(const Graph& g, const VertexSet& removed, const Budget& budget) {
  Deletion del = delete_vertices(g, removed);
  DominationResult r = gamma_exact(del.graph, budget);
  std::vector<Vertex> back;
  for (Vertex v : r.witness) back.push_back(del.old_id[v]);
  r.witness = VertexSet(std::move(back));
  return r;
}

}  // namespace domlab
