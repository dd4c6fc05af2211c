#include "doctest.h"

#include "domlab/domination.hpp"
#include "domlab/families.hpp"
#include "domlab/gadgets.hpp"

using namespace domlab;

TEST_CASE("dominating set checks") {
  CHECK(is_dominating(complete_graph(4), VertexSet{0}));
  CHECK(is_dominating(cycle_graph(6), VertexSet{0, 3}));
  CHECK_FALSE(is_dominating(cycle_graph(6), VertexSet{0, 1}));
  CHECK_THROWS_AS(is_dominating(cycle_graph(6), VertexSet{7}), GraphError);
}

TEST_CASE("subset oracle") {
  DominationResult r = gamma_bruteforce(gadget_A().graph);
  CHECK(r.gamma == 3);
  CHECK(r.optimal());
  CHECK(r.certificate == Certificate::brute_force);
  CHECK(is_dominating(gadget_A().graph, r.witness));
  CHECK(gamma_bruteforce(delete_vertices(gadget_B().graph, VertexSet{6, 7, 8}).graph).gamma == 3);
  const RootedGadget w = gadget_W();
  CHECK(gamma_bruteforce(w.graph).gamma == 2);
  CHECK(gamma_bruteforce(delete_vertices(w.graph, VertexSet{0, 4, 5}).graph).gamma == 1);
  CHECK(gamma_bruteforce(Graph(0)).gamma == 0);
  CHECK_THROWS_AS(gamma_bruteforce(cycle_graph(kBruteForceCap + 1)), GraphError);
}

TEST_CASE("branch and bound") {
  CHECK(gamma_exact(gadget_P().graph).gamma == 7);
  CHECK(gamma_exact(gadget_S().graph).gamma == 6);
  CHECK(gamma_exact(gadget_T().graph).gamma == 6);
  DominationResult r = gamma_exact(gadget_P_i(2).graph);
  CHECK(r.gamma == 15);
  CHECK(r.certificate == Certificate::branch_and_bound);
  CHECK(r.lower_bound == r.upper_bound);
  CHECK(r.ratio == Rational(15, 44));
  CHECK(gamma_exact(Graph(3)).gamma == 3);
}

TEST_CASE("forced vertices, warm starts and known bounds") {
  SolveOptions opt;
  opt.forced = VertexSet{0, 1};
  DominationResult r = gamma_exact(cycle_graph(6), opt);
  CHECK(r.gamma == 3);
  CHECK(r.witness.contains(0));
  CHECK(r.witness.contains(1));

  opt = {};
  opt.warm_start = VertexSet{0, 3};
  opt.known_lower_bound = 2;
  r = gamma_exact(cycle_graph(6), opt);
  CHECK(r.gamma == 2);
  CHECK(r.optimal());

  opt.warm_start = VertexSet{0};  // not dominating, ignored
  opt.known_lower_bound = 0;
  CHECK(gamma_exact(cycle_graph(6), opt).gamma == 2);
}

TEST_CASE("exhausted budgets report bounds, not answers") {
  const Graph g = build_R(3).graph;
  DominationResult r = gamma_exact(g, Budget{1, {}});
  CHECK(r.status == SolveStatus::timeout);
  CHECK(r.certificate == Certificate::bounds_only);
  CHECK(r.lower_bound <= r.upper_bound);
  CHECK(r.upper_bound == static_cast<int>(r.witness.size()));
  CHECK(is_dominating(g, r.witness));
  CHECK(std::string(to_string(r.status)) == "timeout");
}

TEST_CASE("deleting vertices") {
  const RootedGadget a = gadget_A();
  CHECK(gamma_deleted(a.graph, VertexSet{6, 7}).gamma == 2);
  DominationResult r = gamma_deleted(gadget_Q().graph, VertexSet{18, 19, 20});
  CHECK(r.gamma == 7);
  for (Vertex v : r.witness) CHECK(v < 18);
  CHECK(gamma_deleted(cycle_graph(6), VertexSet{}).gamma == 2);
}

TEST_CASE("rationals stay exact") {
  CHECK(Rational(21, 60) == Rational(7, 20));
  CHECK(Rational(7, 20).str() == "7/20");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 60) == Rational(7, 20));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(1, 3) < Rational(7, 20));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(ceil_div(54, 3) == 18);
  CHECK(ceil_div(55, 3) == 19);
}
