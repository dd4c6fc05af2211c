#include "domlab/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace domlab {

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

std::vector<std::size_t> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    std::size_t parent_edge;
    std::size_t next;  // position in incident list
  };
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        const std::size_t e = inc[f.next];
        const Vertex w = g.neighbors(f.v)[f.next];
        ++f.next;
        if (e == f.parent_edge) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > disc[parent.v]) out.push_back(done.parent_edge);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Unit vertex-capacity flow network on the split graph: v_in = 2v, v_out = 2v+1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : heads_(2 * g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.simple_neighbors(v)) {
        if (v < w) {
          add_arc(2 * v + 1, 2 * w, kInf);
          add_arc(2 * w + 1, 2 * v, kInf);
        }
      }
    }
  }

  int max_flow(int source, int sink, int cap) {
    int flow = 0;
    std::vector<int> via(heads_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a : heads_[x]) {
          if (arcs_[a].residual > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source;) {
        const int a = via[x];
        arcs_[a].residual -= 1;
        arcs_[a ^ 1].residual += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr int kInf = 1 << 20;
  struct Arc {
    int to;
    int residual;
  };

  void add_arc(int from, int to, int cap) {
    heads_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    heads_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  std::vector<std::vector<int>> heads_;
  std::vector<Arc> arcs_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  if (g.adjacent(s, t)) throw GraphError("local vertex connectivity needs non-adjacent vertices");
  SplitNetwork net(g);
  return net.max_flow(2 * s + 1, 2 * t, cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = n - 1;
  // A minimum separator misses one of the first best+1 vertices; that vertex
  // and some later vertex lie on opposite sides.
  for (Vertex s = 0; s <= best && s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of g minus `cut` that contain a cycle (edges >= vertices).
std::vector<int> cyclic_components(const Graph& g, const std::vector<std::size_t>& cut) {
  DisjointSets ds(g.order());
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) ds.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<int> verts(g.order(), 0), edges(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) ++verts[ds.find(v)];
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) ++edges[ds.find(g.edge(e).u)];
  }
  std::vector<int> roots;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ds.find(v) == v && edges[v] >= verts[v]) roots.push_back(v);
  }
  return roots;
}

}  // namespace

bool separates_cycles(const Graph& g, const std::vector<std::size_t>& cut) {
  for (std::size_t e : cut) g.edge(e);
  return cyclic_components(g, cut).size() >= 2;
}

CyclicCutResult cyclic_4_edge_connectivity(const Graph& g) {
  if (!is_cubic(g)) throw GraphError("cyclic connectivity check needs a cubic graph");
  const std::size_t m = g.size();
  std::vector<std::size_t> cut;

  auto check = [&]() -> bool {
    DisjointSets ds(g.order());
    for (std::size_t e = 0; e < m; ++e) {
      if (std::find(cut.begin(), cut.end(), e) == cut.end()) ds.unite(g.edge(e).u, g.edge(e).v);
    }
    const int root = ds.find(0);
    bool split = false;
    for (Vertex v = 1; v < g.order() && !split; ++v) split = ds.find(v) != root;
    return split && cyclic_components(g, cut).size() >= 2;
  };

  for (std::size_t a = 0; a < m; ++a) {
    cut = {a};
    if (check()) return {false, cut};
    for (std::size_t b = a + 1; b < m; ++b) {
      cut = {a, b};
      if (check()) return {false, cut};
      for (std::size_t c = b + 1; c < m; ++c) {
        cut = {a, b, c};
        if (check()) return {false, cut};
      }
    }
  }
  return {true, std::nullopt};
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not-found";
    case SearchStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, std::uint64_t budget) : n_(g.order()), budget_(budget) {
    adj_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.simple_neighbors(v);
    on_path_.assign(n_, false);
  }

  HamiltonResult run() {
    HamiltonResult result;
    for (Vertex v = 0; v < n_; ++v) {
      if (adj_[v].size() < 2) return result;
    }
    // Start at a minimum-degree vertex: fewer first choices.
    Vertex start = 0;
    for (Vertex v = 1; v < n_; ++v) {
      if (adj_[v].size() < adj_[start].size()) start = v;
    }
    path_.push_back(start);
    on_path_[start] = true;
    const bool found = extend();
    result.expansions = expansions_;
    if (found) {
      result.status = SearchStatus::found;
      result.cycle = path_;
    } else {
      result.status = exhausted_ ? SearchStatus::budget_exhausted : SearchStatus::not_found;
    }
    return result;
  }

 private:
  bool extend() {
    if (++expansions_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n_) {
      return std::binary_search(adj_[end].begin(), adj_[end].end(), path_.front());
    }
    if (!feasible()) return false;
    for (Vertex w : adj_[end]) {
      if (on_path_[w]) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend()) return true;
      on_path_[w] = false;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  // Every off-path vertex needs two usable neighbors, and all of them must be
  // reachable from the path end through off-path vertices.
  bool feasible() {
    const Vertex start = path_.front(), end = path_.back();
    for (Vertex v = 0; v < n_; ++v) {
      if (on_path_[v]) continue;
      int usable = 0;
      for (Vertex w : adj_[v]) {
        if (!on_path_[w] || w == end || w == start) ++usable;
      }
      if (usable < 2) return false;
    }
    seen_.assign(n_, false);
    std::vector<Vertex> stack{end};
    seen_[end] = true;
    int reached = 0;
    bool closes = false;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v]) {
        if (w == start && v != end) closes = true;
        if (on_path_[w] || seen_[w]) continue;
        seen_[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == n_ - static_cast<int>(path_.size()) && closes;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> path_;
  std::vector<bool> on_path_, seen_;
};

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3) throw GraphError("Hamiltonian cycle search needs at least 3 vertices");
  HamiltonResult result = HamiltonSearch(g, budget).run();
  if (result.status == SearchStatus::found && !is_hamiltonian_cycle(g, result.cycle)) {
    throw GraphError("internal error: invalid Hamiltonian cycle produced");
  }
  return result;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (static_cast<int>(cycle.size()) != g.order() || cycle.size() < 3) return false;
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : cycle) {
    if (!g.valid_vertex(v) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace domlab
