#include <algorithm>
#include <set>

#include "doctest.h"

#include "domlab/analysis.hpp"
#include "domlab/families.hpp"

using namespace domlab;

namespace {

// Images disjoint, and each image induces exactly the gadget's edges.
void check_occurrences(const Construction& c) {
  std::set<Vertex> used;
  for (const auto& occ : c.occurrences) {
    REQUIRE(occ.embedding.size() == static_cast<std::size_t>(occ.gadget.order()));
    std::vector<Edge> mapped;
    for (const Edge& e : occ.gadget.graph.edges()) mapped.emplace_back(occ.embedding[e.u], occ.embedding[e.v]);
    std::vector<Edge> induced;
    std::set<Vertex> image(occ.embedding.begin(), occ.embedding.end());
    for (const Edge& e : c.graph.edges())
      if (image.count(e.u) && image.count(e.v)) induced.push_back(e);
    std::sort(mapped.begin(), mapped.end());
    std::sort(induced.begin(), induced.end());
    CHECK(mapped == induced);
    for (Vertex v : occ.embedding) CHECK(used.insert(v).second);
  }
}

}  // namespace

TEST_CASE("R_k and L_r vertex counts and occurrences") {
  for (int k = 3; k <= 8; ++k) {
    Construction c = build_R(k);
    CHECK(c.graph.order() == 20 * k);
    CHECK(is_cubic(c.graph));
    CHECK(c.occurrences.size() == static_cast<std::size_t>(k));
    check_occurrences(c);
  }
  for (int r = 1; r <= 5; ++r) {
    Construction c = build_L(r);
    CHECK(c.graph.order() == 20 * r + 34);
    CHECK(is_cubic(c.graph));
    check_occurrences(c);
  }
  CHECK(bridges(build_L(1).graph).size() == 2);
  CHECK(bridges(build_L(2).graph).size() == 3);
  CHECK_THROWS_AS(build_R(2), GraphError);
  CHECK_THROWS_AS(build_R(3, {1, 1}), GraphError);
  CHECK_THROWS_AS(build_L(0), GraphError);
}

TEST_CASE("R_k with deeper slots") {
  Construction c = build_R(3, {2, 1, 1});
  CHECK(c.graph.order() == 84);
  CHECK(is_cubic(c.graph));
  check_occurrences(c);
}

TEST_CASE("replacement families over small bases") {
  const Graph k23 = banana_graph(3);
  CHECK(build_GP(k23).graph.order() == 62);
  CHECK(build_GPB(k23).graph.order() == 78);
  CHECK(build_GB(k23).graph.order() == 18);
  const Graph k4 = complete_graph(4);
  Construction gp = build_GP(k4);
  CHECK(gp.graph.order() == 4 + 20 * 6);
  check_occurrences(gp);
  Construction gpb = build_GPB(k4);
  CHECK(gpb.graph.order() == 156);
  check_occurrences(gpb);
  Construction gb = build_GB(k4);
  CHECK(gb.graph.order() == 36);
  CHECK(vertex_connectivity(gb.graph) == 3);
  check_occurrences(gb);
  for (const auto* c : {&gp, &gpb, &gb}) {
    CHECK(is_cubic(c->graph));
    CHECK(c->graph.is_simple());
  }
  CHECK_THROWS_AS(build_GP(path_graph(3)), GraphError);
  CHECK_THROWS_AS(build_GB(k4, {gadget_B()}), GraphError);
}

TEST_CASE("ladder families") {
  CHECK(build_M(2, 1).graph.order() == 8);
  CHECK(build_M(0, 2).graph.order() == 12);
  for (int k = 1; k <= 5; ++k) {
    CHECK(build_M(0, k).graph.order() == 6 * k);
    CHECK(build_M(1, k).graph.order() == 6 * k - 2);
    CHECK(build_M(2, k).graph.order() == 6 * k + 2);
  }
  CHECK(is_hamiltonian_cycle(build_M(2, 1).graph, hamiltonian_cycle(build_M(2, 1).graph).cycle));
  Construction n = build_N(2, 4, 2);
  CHECK(n.graph.order() == 26);
  CHECK(is_cubic(n.graph));
  CHECK(n.graph.adjacent(n.names.at("x7"), n.names.at("y6")));
  CHECK_FALSE(n.graph.adjacent(n.names.at("x7"), n.names.at("x8")));
  CHECK_THROWS_AS(build_M(3, 1), GraphError);
  CHECK_THROWS_AS(build_M(0, 0), GraphError);
  CHECK_THROWS_AS(build_N(0, 2, 1), GraphError);
  CHECK_THROWS_AS(build_N(0, 4, 4), GraphError);
  CHECK_THROWS_AS(build_N(0, 4, 1), GraphError);
}

TEST_CASE("generalized Petersen graphs") {
  Graph g = generalized_petersen(7, 2);
  CHECK(g.order() == 14);
  CHECK(is_cubic(g));
  CHECK(generalized_petersen(5, 2).size() == 15);
  CHECK_THROWS_AS(generalized_petersen(4, 2), GraphError);
  CHECK_THROWS_AS(generalized_petersen(2, 1), GraphError);
}
