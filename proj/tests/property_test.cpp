#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "domlab/analysis.hpp"
#include "domlab/certify.hpp"
#include "domlab/domination.hpp"
#include "domlab/families.hpp"
#include "domlab/gadgets.hpp"
#include "domlab/io.hpp"
#include "support.hpp"

using namespace domlab;
using namespace domlab::testing;

TEST_CASE("graph6 round trip on random simple graphs") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> order(0, 80);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = random_simple_graph(rng, order(rng), density(rng));
    const std::string text = write_graph6(g);
    CAPTURE(text);
    CHECK(parse_graph6(text) == g);
    CHECK(write_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("bridges agree with edge deletion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> order(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_simple_graph(rng, order(rng), density(rng));
    CAPTURE(write_graph6(g));
    CHECK(bridges(g) == naive_bridges(g));
  }
  for (const Graph& g : load_corpus("cubic_connected_n4_12.g6")) CHECK(bridges(g) == naive_bridges(g));
}

TEST_CASE("vertex connectivity agrees with subset enumeration") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_simple_graph(rng, order(rng), density(rng));
    CAPTURE(write_graph6(g));
    CHECK(vertex_connectivity(g) == naive_vertex_connectivity(g));
  }
  for (const Graph& g : load_corpus("cubic_connected_n4_12.g6")) {
    CAPTURE(write_graph6(g));
    CHECK(vertex_connectivity(g) == naive_vertex_connectivity(g));
  }
}

TEST_CASE("branch and bound matches the subset oracle on random graphs") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> order(10, 16);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_connected_min2(rng, order(rng));
    CAPTURE(write_graph6(g));
    const DominationResult exact = gamma_exact(g);
    REQUIRE(exact.optimal());
    CHECK(exact.gamma == gamma_bruteforce(g).gamma);
    CHECK(is_dominating(g, exact.witness));
    CHECK(static_cast<int>(exact.witness.size()) == exact.gamma);
  }
}

TEST_CASE("branch and bound matches the subset oracle on cubic graphs and catalog gadgets") {
  for (const Graph& g : load_corpus("cubic_connected_n4_12.g6")) {
    CAPTURE(write_graph6(g));
    CHECK(gamma_exact(g).gamma == gamma_bruteforce(g).gamma);
  }
  for (const auto& name : catalog_names()) {
    const RootedGadget h = gadget_catalog(name);
    if (h.order() > 21) continue;
    CAPTURE(name);
    CHECK(gamma_exact(h.graph).gamma == gamma_bruteforce(h.graph).gamma);
  }
  for (int r = 0; r <= 2; ++r)
    for (int k = 1; k <= 3; ++k) {
      const Graph g = build_M(r, k).graph;
      CHECK(gamma_exact(g).gamma == gamma_bruteforce(g).gamma);
    }
  const Graph gp = generalized_petersen(7, 2);
  CHECK(gamma_exact(gp).gamma == gamma_bruteforce(gp).gamma);
}

TEST_CASE("deleting a vertex lowers gamma by at most one") {
  for (const Graph& g : load_corpus("cubic_connected_n4_12.g6")) {
    const int gamma = gamma_exact(g).gamma;
    for (Vertex v = 0; v < g.order(); ++v) CHECK(gamma_deleted(g, VertexSet{v}).gamma >= gamma - 1);
  }
}

TEST_CASE("solutions under forced vertices are dominating and contain them") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> order(8, 14);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_min2(rng, order(rng));
    std::uniform_int_distribution<int> any(0, g.order() - 1);
    SolveOptions opt;
    opt.forced = VertexSet{any(rng)};
    const DominationResult r = gamma_exact(g, opt);
    CHECK(is_dominating(g, r.witness));
    CHECK(r.witness.contains(opt.forced.vertices()[0]));
    CHECK(r.gamma >= gamma_exact(g).gamma);
  }
}

TEST_CASE("hamiltonian cycles revalidate and agree with the corpus") {
  for (const Graph& g : load_corpus("cubic_connected_n14.g6")) {
    const HamiltonResult h = hamiltonian_cycle(g);
    REQUIRE(h.status != SearchStatus::budget_exhausted);
    if (h.status == SearchStatus::found) CHECK(is_hamiltonian_cycle(g, h.cycle));
  }
  // The Petersen graph is the only non-Hamiltonian bridgeless cubic graph on 10 vertices.
  int missing = 0;
  for (const Graph& g : load_corpus("cubic_connected_n4_12.g6")) {
    if (g.order() == 10 && bridges(g).empty() && hamiltonian_cycle(g).status == SearchStatus::not_found) ++missing;
  }
  CHECK(missing == 1);
}

TEST_CASE("cyclic cut witnesses revalidate") {
  int without = 0;
  for (const char* file : {"cubic_connected_n4_12.g6", "cubic_connected_n14.g6"}) {
    for (const Graph& g : load_corpus(file)) {
      const CyclicCutResult r = cyclic_4_edge_connectivity(g);
      CHECK(r.cyclically_4_connected == !r.witness.has_value());
      if (r.witness) {
        CHECK(r.witness->size() <= 3);
        CHECK(separates_cycles(g, *r.witness));
      } else {
        ++without;
      }
    }
  }
  CHECK(without > 0);
}

TEST_CASE("replacements leave other vertices' degrees alone") {
  std::mt19937 rng(9);
  for (const Graph& base : load_corpus("cubic_connected_n4_12.g6")) {
    std::uniform_int_distribution<std::size_t> edge(0, base.size() - 1);
    Replacement e = replace_edge(base, edge(rng), gadget_P_prime());
    for (Vertex v = 0; v < base.order(); ++v) CHECK(e.graph.degree(v) == base.degree(v));
    Replacement r = replace_vertex(base, 0, gadget_B());
    for (Vertex v = 1; v < base.order(); ++v) CHECK(r.graph.degree(r.host_map[v]) == base.degree(v));
  }
}

TEST_CASE("vertex count formulas") {
  for (int k = 3; k <= 8; ++k) CHECK(build_R(k).graph.order() == 20 * k);
  for (int r = 1; r <= 5; ++r) CHECK(build_L(r).graph.order() == 20 * r + 34);
  for (int i = 1; i <= 5; ++i) CHECK(gadget_P_i(i).order() == 3 * (1 << (i + 2)) - 4);
  for (const auto& name : {"A", "P", "S", "T", "Q"}) {
    RootedGadget h = gadget_catalog(name);
    if (h.terminals.size() != 2) continue;
    CHECK(op_F2(h).order() == 2 * h.order() + 4);
  }
}

TEST_CASE("compositional bound never exceeds the exact optimum") {
  GadgetCache cache;
  const Budget budget = Budget::seconds(120);
  auto check = [&](const Graph& g, const std::vector<GadgetOccurrence>& occs) {
    const CompositionalBound b = compositional_lower_bound(g, occs, budget, &cache);
    const DominationResult exact = gamma_exact(g, budget);
    REQUIRE(exact.optimal());
    CHECK(b.lower_bound <= exact.gamma);
    return b.lower_bound;
  };
  const RootedGadget p1 = gadget_P();
  CHECK(check(op_F2(p1).graph, twin_copies(p1)) == 15);
  CHECK(check(op_F3(p1).graph, twin_copies(p1)) == 15);
  Construction gb = build_GB(banana_graph(3));
  CHECK(check(gb.graph, gb.occurrences) == 6);
  Construction l1 = build_L(1);
  CHECK(check(l1.graph, l1.occurrences) == 19);
}

TEST_CASE("ratios are exact") {
  for (int k = 3; k <= 5; ++k) CHECK(Rational(7 * k, 20 * k) == Rational(7, 20));
  for (int r = 1; r <= 5; ++r)
    CHECK(Rational(7 * r + 12, 20 * r + 34) == Rational(7, 20) + Rational(1, 200 * r + 340));
}
