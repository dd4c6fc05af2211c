#include "domlab/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "domlab/analysis.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/scan.hpp"

namespace domlab {

using nlohmann::json;

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string instance_of(const Graph& g) {
  if (g.is_simple()) return "graph6 " + write_graph6(g);
  std::string out = "n=" + std::to_string(g.order()) + " edges";
  for (const Edge& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

// K2^3 counts as 3-connected by convention; everything else uses the
// standard vertex connectivity.
bool is_triple_edge(const Graph& g) { return g.order() == 2 && g.multiplicity(0, 1) == 3; }

int kappa_by_convention(const Graph& g) { return is_triple_edge(g) ? 3 : vertex_connectivity(g); }

std::string subset_key(const RootedGadget& h, unsigned mask) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.terminals.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (out.size() > 1) out += ",";
    out += h.terminal_names.empty() ? std::to_string(h.terminals[i]) : h.terminal_names[i];
  }
  return out + "}";
}

VertexSet terminal_subset(const RootedGadget& h, unsigned mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < h.terminals.size(); ++i) {
    if (mask & (1u << i)) out.push_back(h.terminals[i]);
  }
  return VertexSet(std::move(out));
}

/// gamma(H - V) over every subset V of the terminals, from the exact solver,
/// cross-checked against the subset oracle where it fits.
ClaimOutcome gadget_table(const RootedGadget& h, const std::function<int(unsigned)>& expected_at,
                          const ClaimContext& ctx) {
  ClaimOutcome out;
  out.instance = "gadget " + h.name;
  bool agree = true, stable = true;
  int base = 0;
  for (unsigned mask = 0; mask < (1u << h.terminals.size()); ++mask) {
    const VertexSet removed = terminal_subset(h, mask);
    const DominationResult r = gamma_deleted(h.graph, removed, ctx.budget);
    if (!r.optimal()) out.exhausted = true;
    if (h.order() - static_cast<int>(removed.size()) <= kBruteForceCap) {
      const int oracle = gamma_bruteforce(delete_vertices(h.graph, removed).graph).gamma;
      if (oracle != r.gamma) {
        agree = false;
        out.notes.push_back("oracle disagrees at " + subset_key(h, mask));
      }
    }
    if (mask == 0) base = r.gamma;
    stable = stable && r.gamma == base;
    const std::string key = subset_key(h, mask);
    out.expected["gamma_minus"][key] = expected_at(mask);
    out.computed["gamma_minus"][key] = r.gamma;
  }
  bool expect_stable = true;
  for (unsigned mask = 0; mask < (1u << h.terminals.size()); ++mask) {
    expect_stable = expect_stable && expected_at(mask) == expected_at(0);
  }
  out.expected["stable"] = expect_stable;
  out.computed["stable"] = stable;
  out.expected["oracle_agrees"] = true;
  out.computed["oracle_agrees"] = agree;
  return out;
}

Claim gadget_claim(const std::string& name, const std::string& citation, const std::string& quote,
                   std::function<int(unsigned)> expected_at) {
  return {name + ".table", citation, quote, false, [name, expected_at](const ClaimContext& ctx) {
            return gadget_table(gadget_catalog(name), expected_at, ctx);
          }};
}

/// Computes exactly the keys present in `expected`.
ClaimOutcome measure(const Graph& g, const std::vector<GadgetOccurrence>& occs, json expected,
                     const ClaimContext& ctx, const Graph* base = nullptr) {
  ClaimOutcome out;
  out.instance = instance_of(g);
  out.expected = std::move(expected);
  json& c = out.computed;
  const int n = g.order();
  auto wants = [&out](const char* key) { return out.expected.contains(key); };

  if (wants("v")) c["v"] = n;
  if (wants("cubic")) c["cubic"] = is_cubic(g);
  if (wants("gamma") || wants("ratio") || wants("exceeds_reed_bound")) {
    const DominationResult r = occs.empty() ? gamma_exact(g, ctx.budget)
                                            : certified_gamma(g, occs, ctx.budget, ctx.cache);
    if (!r.optimal()) {
      out.exhausted = true;
      out.notes.push_back("gamma bounds " + std::to_string(r.lower_bound) + ".." + std::to_string(r.upper_bound));
    }
    if (!is_dominating(g, r.witness) || static_cast<int>(r.witness.size()) != r.upper_bound) {
      throw std::logic_error("solver returned an invalid witness");
    }
    out.notes.push_back(std::string("certificate ") + to_string(r.certificate));
    if (wants("gamma")) c["gamma"] = r.gamma;
    if (wants("ratio")) c["ratio"] = Rational(r.gamma, n).str();
    if (wants("exceeds_reed_bound")) c["exceeds_reed_bound"] = r.gamma > reed_bound(n);
  }
  if (wants("kappa")) c["kappa"] = kappa_by_convention(g);
  if (wants("kappa_preserved")) c["kappa_preserved"] = base && kappa_by_convention(g) == kappa_by_convention(*base);
  if (wants("bridges")) c["bridges"] = static_cast<int>(bridges(g).size());
  if (wants("cyclically_4_connected")) {
    const CyclicCutResult cut = cyclic_4_edge_connectivity(g);
    c["cyclically_4_connected"] = cut.cyclically_4_connected;
    if (cut.witness) {
      std::string w = "cyclic cut edges";
      for (std::size_t e : *cut.witness) w += " " + std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
      out.notes.push_back(w);
    }
  }
  if (wants("hamiltonian")) {
    const HamiltonResult h = hamiltonian_cycle(g);
    if (h.status == SearchStatus::budget_exhausted) out.exhausted = true;
    if (h.status == SearchStatus::found && !is_hamiltonian_cycle(g, h.cycle)) {
      throw std::logic_error("hamiltonian search returned an invalid cycle");
    }
    c["hamiltonian"] = h.status == SearchStatus::found;
  }
  return out;
}

// Every member of these families is stated to beat ceil(v/3).
json counterexample(int v, int gamma, Rational ratio) {
  return {{"v", v}, {"cubic", true}, {"gamma", gamma}, {"ratio", ratio.str()}, {"exceeds_reed_bound", true}};
}

struct Base {
  std::string name;
  Graph graph;
};

std::vector<Base> base_graphs() {
  return {{"K23", banana_graph(3)}, {"K4", complete_graph(4)}, {"prism", prism_graph()}};
}

void add_gadget_claims(std::vector<Claim>& out) {
  out.push_back(gadget_claim("A", "gadget A", "gamma(A) = gamma(A - a_i) = 3, gamma(A - {a_1, a_2}) = 2",
                             [](unsigned mask) { return mask == 3 ? 2 : 3; }));
  out.push_back(gadget_claim("B", "gadget B", "gamma(B - V) = 3 for every V in {b_1, b_2, b_3}",
                             [](unsigned) { return 3; }));
  out.push_back(gadget_claim("S", "gadget S", "gamma(S) = gamma(S - s) = 6", [](unsigned) { return 6; }));
  out.push_back(gadget_claim("T", "gadget T", "gamma(T) = gamma(T - t_1) = gamma(T - t_2) = gamma(T - {t_1,t_2}) = 6",
                             [](unsigned) { return 6; }));
  out.push_back(gadget_claim("P", "gadget P", "gamma(P) = gamma(P - p_1) = gamma(P - p_2) = gamma(P - {p_1,p_2}) = 7",
                             [](unsigned) { return 7; }));
  out.push_back(gadget_claim("Q", "gadget Q", "gamma(Q - V) = 7 for every V in {q_1, q_2, q_3}",
                             [](unsigned) { return 7; }));
  // Terminal order t1, t2, p1, p2.
  out.push_back(gadget_claim("W", "gadget W",
                             "gamma(W - V) = 1 if V = {p_1, p_2, t_i} for some i, and 2 otherwise",
                             [](unsigned mask) { return mask == 0b1101 || mask == 0b1110 ? 1 : 2; }));
}

void add_family_claims(std::vector<Claim>& out) {
  for (int k = 3; k <= 5; ++k) {
    out.push_back({"R.k" + std::to_string(k), "cycle family R_k",
                   "R_k is cubic, kappa(R_k) = 2, v(R_k) = 20k, gamma(R_k) = 7k, rho(R_k) = 7/20", false,
                   [k](const ClaimContext& ctx) {
                     Construction c = build_R(k);
                     json e = counterexample(20 * k, 7 * k, Rational(7, 20));
                     e["kappa"] = 2;
                     return measure(c.graph, c.occurrences, e, ctx);
                   }});
  }
  for (int r = 1; r <= 3; ++r) {
    out.push_back({"L.r" + std::to_string(r), "path family L_r",
                   "L_r has exactly r+1 bridges, kappa(L_r) = 1, v(L_r) = 20r + 34, gamma(L_r) = 7r + 12, "
                   "rho(L_r) = 7/20 + 1/(200r + 340)",
                   false, [r](const ClaimContext& ctx) {
                     Construction c = build_L(r);
                     json e = counterexample(20 * r + 34, 7 * r + 12, Rational(7, 20) + Rational(1, 200 * r + 340));
                     e["bridges"] = r + 1;
                     e["kappa"] = 1;
                     return measure(c.graph, c.occurrences, e, ctx);
                   }});
  }
  const auto bases = base_graphs();
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const Base base = bases[b];
    const int k = base.graph.order() / 2;
    out.push_back({"GofP." + base.name, "edge replacement G(P)",
                   "v(G(P)) = 62k, gamma(G(P)) = 21k, rho(G(P)) = 1/3 + 1/186; 2-connected G gives kappa = 2",
                   false, [base, k](const ClaimContext& ctx) {
                     Construction c = build_GP(base.graph);
                     json e = counterexample(62 * k, 21 * k, Rational(1, 3) + Rational(1, 186));
                     e["kappa"] = 2;
                     ClaimOutcome o = measure(c.graph, c.occurrences, e, ctx);
                     o.notes.push_back("base " + base.name + "; gamma - ceil(v/3) = floor(k/3) = " +
                                       std::to_string(k / 3));
                     return o;
                   }});
    out.push_back({"GPB." + base.name, "vertex and edge replacement G(P,B)",
                   "v(G') = 78k, gamma(G') = 27k, rho(G') = 1/3 + 1/78; 2-connected G gives kappa = 2", false,
                   [base, k](const ClaimContext& ctx) {
                     Construction c = build_GPB(base.graph);
                     json e = counterexample(78 * k, 27 * k, Rational(1, 3) + Rational(1, 78));
                     e["kappa"] = 2;
                     ClaimOutcome o = measure(c.graph, c.occurrences, e, ctx);
                     o.notes.push_back("base " + base.name);
                     return o;
                   }});
    if (base.name == "prism") continue;
    out.push_back({"GB." + base.name, "vertex replacement G[B]",
                   "v(G') = 9v(G), gamma(G') = 3v(G), kappa(G') = kappa(G), G' is not cyclically 4-connected",
                   false, [base](const ClaimContext& ctx) {
                     Construction c = build_GB(base.graph);
                     const int n = base.graph.order();
                     json e = {{"v", 9 * n}, {"cubic", true}, {"gamma", 3 * n}, {"kappa_preserved", true},
                               {"cyclically_4_connected", false}};
                     ClaimOutcome o = measure(c.graph, c.occurrences, e, ctx, &base.graph);
                     if (is_triple_edge(base.graph)) o.notes.push_back("K2^3 counted as 3-connected by convention");
                     return o;
                   }});
  }
}

json recursive_expect(int v, int gamma) {
  return {{"v", v}, {"gamma", gamma}, {"stable", true}};
}

ClaimOutcome recursive_gadget(const RootedGadget& h, json expected, const ClaimContext& ctx) {
  ClaimOutcome out;
  out.instance = "gadget " + h.name;
  out.expected = std::move(expected);
  const StabilityReport s = check_stability(h, ctx.budget, ctx.cache);
  if (s.stable == Verdict::inconclusive) out.exhausted = true;
  out.computed["v"] = h.order();
  out.computed["gamma"] = s.gamma;
  out.computed["stable"] = s.stable == Verdict::yes;
  return out;
}

void add_recursive_claims(std::vector<Claim>& out) {
  for (int i = 1; i <= 2; ++i) {
    out.push_back({"Pi.i" + std::to_string(i), "recursive gadget P^i",
                   "gamma(P^{i+1}) = 2 gamma(P^i) + 1, P^i stable over {p_1, p_2}, v(P^i) = 3 * 2^{i+2} - 4, "
                   "gamma(P^i) = 2^{i+2} - 1, rho(P^i) = 1/3 + 1/(12(3 * 2^i - 1))",
                   false, [i](const ClaimContext& ctx) {
                     const int g = (1 << (i + 2)) - 1;
                     json e = recursive_expect(3 * (1 << (i + 2)) - 4, g);
                     e["ratio"] = (Rational(1, 3) + Rational(1, 12 * (3 * (1 << i) - 1))).str();
                     if (i > 1) e["recursion_holds"] = true;
                     ClaimOutcome o = recursive_gadget(gadget_P_i(i), e, ctx);
                     o.computed["ratio"] = Rational(o.computed["gamma"].get<int>(), o.computed["v"].get<int>()).str();
                     if (i > 1) {
                       const StabilityReport prev = check_stability(gadget_P_i(i - 1), ctx.budget, ctx.cache);
                       if (prev.stable == Verdict::inconclusive) o.exhausted = true;
                       o.computed["recursion_holds"] = o.computed["gamma"].get<int>() == 2 * prev.gamma + 1;
                     }
                     return o;
                   }});
  }
  out.push_back({"Pi.i3", "recursive gadget P^i", "v(P^3) = 92, gamma(P^3) = 31 (compositional)", false,
                 [](const ClaimContext& ctx) {
                   const RootedGadget p2 = gadget_P_i(2);
                   const RootedGadget p3 = op_F2(p2);
                   json e = {{"v", 92}, {"gamma", 31}, {"ratio", (Rational(1, 3) + Rational(1, 12 * 23)).str()}};
                   return measure(p3.graph, twin_copies(p2), e, ctx);
                 }});
  for (int i = 1; i <= 2; ++i) {
    out.push_back({"Qi.i" + std::to_string(i), "recursive gadget Q^i",
                   "gamma(Q^i) = gamma(Q^i - V) for every V in {q_1, q_2, q_3}, v(Q^i) = 3(2^{i+2} - 1), "
                   "gamma(Q^i) = 2^{i+2} - 1, v(Q^i) = 3 gamma(Q^i)",
                   false, [i](const ClaimContext& ctx) {
                     const int g = (1 << (i + 2)) - 1;
                     json e = recursive_expect(3 * g, g);
                     e["v_is_3_gamma"] = true;
                     ClaimOutcome o = recursive_gadget(gadget_Q_i(i), e, ctx);
                     o.computed["v_is_3_gamma"] = o.computed["v"].get<int>() == 3 * o.computed["gamma"].get<int>();
                     o.notes.push_back("Q^i built as F3(P^{i-1}) with P^0 = A");
                     return o;
                   }});
  }
  out.push_back({"eRplPi.R3.P2", "swapped counterexamples",
                 "G' obtained by replacing copies of P with members of the P^i family is cubic, "
                 "gamma(G') > ceil(v(G')/3), and stays 2-connected",
                 false, [](const ClaimContext& ctx) {
                   Construction c = build_R(3, {2, 1, 1});
                   json e = counterexample(84, 29, Rational(29, 84));
                   e["kappa"] = 2;
                   ClaimOutcome o = measure(c.graph, c.occurrences, e, ctx);
                   o.notes.push_back("R_3 with one P copy replaced by P^2");
                   return o;
                 }});
}

void add_extremal_claims(std::vector<Claim>& out) {
  const int offset[3] = {0, -2, 2};
  const int gamma_offset[3] = {0, -1, 1};
  for (int r = 0; r <= 2; ++r) {
    for (int k = 1; k <= 4; ++k) {
      out.push_back({"Mk.r" + std::to_string(r) + ".k" + std::to_string(k), "ladder family M^r_k",
                     "each M^r_k is a cubic cyclically 4-connected Hamiltonian graph; v = 6k, 6k-2, 6k+2 and "
                     "gamma = 2k, 2k-1, 2k+1 for r = 0, 1, 2",
                     false, [=](const ClaimContext& ctx) {
                       Construction c = build_M(r, k);
                       json e = {{"v", 6 * k + offset[r]},
                                 {"cubic", true},
                                 {"gamma", 2 * k + gamma_offset[r]},
                                 {"kappa", 3},
                                 {"cyclically_4_connected", true},
                                 {"hamiltonian", true}};
                       ClaimOutcome o = measure(c.graph, {}, e, ctx);
                       o.notes.push_back("crossing pairs at i = 2 (mod 3)");
                       o.instance += " (r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")";
                       return o;
                     }});
    }
    const std::pair<int, int> params[] = {{3, 2}, {4, 2}, {4, 3}};
    for (auto [k, i] : params) {
      out.push_back({"Nk.r" + std::to_string(r) + ".k" + std::to_string(k) + ".i" + std::to_string(i),
                     "swapped ladder family N^r_k(i)",
                     "each N^r_k(i) is a cubic 3-connected (but not cyclically 4-connected) Hamiltonian graph; "
                     "v = 6k, 6k-2, 6k+2 and gamma = 2k, 2k-1, 2k+1 for r = 0, 1, 2",
                     false, [=](const ClaimContext& ctx) {
                       Construction c = build_N(r, k, i);
                       json e = {{"v", 6 * k + offset[r]},
                                 {"cubic", true},
                                 {"gamma", 2 * k + gamma_offset[r]},
                                 {"kappa", 3},
                                 {"cyclically_4_connected", false},
                                 {"hamiltonian", true}};
                       ClaimOutcome o = measure(c.graph, {}, e, ctx);
                       o.notes.push_back("edge swap applied to M^r_k");
                       o.instance += " (r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                                     ", i=" + std::to_string(i) + ")";
                       return o;
                     }});
    }
  }
  out.push_back({"GP72", "generalized Petersen GP(7,2)",
                 "GP(7,2) is cubic cyclically 4-connected with 14 vertices, gamma = 5 = ceil(v/3), Hamiltonian",
                 false, [](const ClaimContext& ctx) {
                   json e = {{"v", 14}, {"cubic", true}, {"gamma", 5}, {"hamiltonian", true},
                             {"cyclically_4_connected", true}};
                   return measure(generalized_petersen(7, 2), {}, e, ctx);
                 }});
}

void add_stretch_claims(std::vector<Claim>& out) {
  const Budget hour = Budget::seconds(3600);
  out.push_back({"R3.exact", "cycle family R_k", "gamma(R_3) = 21 (whole-graph search)", true,
                 [hour](const ClaimContext& ctx) {
                   ClaimContext wide = ctx;
                   wide.budget = hour;
                   return measure(build_R(3).graph, {}, {{"gamma", 21}}, wide);
                 }});
  out.push_back({"L1.exact", "path family L_r", "gamma(L_1) = 19 (whole-graph search)", true,
                 [hour](const ClaimContext& ctx) {
                   ClaimContext wide = ctx;
                   wide.budget = hour;
                   return measure(build_L(1).graph, {}, {{"gamma", 19}}, wide);
                 }});
}

std::vector<Claim> make_registry() {
  std::vector<Claim> out;
  add_gadget_claims(out);
  add_family_claims(out);
  add_recursive_claims(out);
  add_extremal_claims(out);
  add_stretch_claims(out);
  std::sort(out.begin(), out.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

std::vector<std::string> default_claim_ids() {
  std::vector<std::string> ids;
  for (const Claim& c : claim_registry()) {
    if (!c.stretch) ids.push_back(c.id);
  }
  return ids;
}

ClaimReport run_claim(const Claim& claim, const ClaimContext& ctx) {
  ClaimReport report;
  report.claim_id = claim.id;
  report.citation = claim.citation;
  report.quote = claim.quote;
  const auto start = std::chrono::steady_clock::now();
  ClaimOutcome o;
  try {
    o = claim.check(ctx);
    report.status = o.exhausted ? ClaimStatus::inconclusive
                                : (o.expected == o.computed ? ClaimStatus::pass : ClaimStatus::fail);
  } catch (const CertificationError& e) {
    report.status = e.inconclusive() ? ClaimStatus::inconclusive : ClaimStatus::fail;
    o.notes.push_back(std::string("certification refused: ") + e.what());
  } catch (const std::exception& e) {
    report.status = ClaimStatus::fail;
    o.notes.push_back(std::string("error: ") + e.what());
  }
  report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.expected = std::move(o.expected);
  report.computed = std::move(o.computed);
  if (report.status != ClaimStatus::pass && !o.instance.empty()) o.notes.push_back("instance: " + o.instance);
  report.notes = join(o.notes);
  return report;
}

std::vector<ClaimReport> verify_claims(const std::vector<std::string>& ids, const VerifyOptions& options) {
  std::set<std::string> wanted;
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const std::string& d : default_claim_ids()) wanted.insert(d);
    } else {
      wanted.insert(id);
    }
  }
  std::vector<const Claim*> todo;
  for (const std::string& id : wanted) {
    const auto& reg = claim_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&id](const Claim& c) { return c.id == id; });
    if (it == reg.end()) throw std::invalid_argument("unknown claim id '" + id + "'");
    todo.push_back(&*it);
  }

  GadgetCache cache;
  const ClaimContext ctx{options.per_claim, &cache};
  std::vector<ClaimReport> reports(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) reports[i] = run_claim(*todo[i], ctx);
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(todo.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return reports;
}

int exit_code(const std::vector<ClaimReport>& reports) {
  bool inconclusive = false;
  for (const ClaimReport& r : reports) {
    if (r.status == ClaimStatus::fail) return 1;
    if (r.status == ClaimStatus::inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace domlab
