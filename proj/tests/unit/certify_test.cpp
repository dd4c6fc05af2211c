#include "doctest.h"

#include "domlab/certify.hpp"
#include "domlab/families.hpp"

using namespace domlab;

TEST_CASE("stability over terminal sets") {
  const Budget budget = Budget::seconds(60);
  StabilityReport a = check_stability(gadget_A(), budget);
  CHECK(a.stable == Verdict::no);
  CHECK(a.gamma == 3);
  REQUIRE(a.table.size() == 4);
  CHECK(a.table.back().result.gamma == 2);

  StabilityReport p = check_stability(gadget_P(), budget);
  CHECK(p.stable == Verdict::yes);
  CHECK(p.gamma == 7);
  CHECK(check_stability(gadget_B(), budget).stable == Verdict::yes);
  CHECK(check_stability(gadget_Q(), budget).stable == Verdict::yes);
}

TEST_CASE("stability results are cached per graph and attachment set") {
  GadgetCache cache;
  const RootedGadget p = gadget_P();
  const VertexSet x(std::vector<Vertex>(p.terminals.begin(), p.terminals.end()));
  CHECK_FALSE(cache.find_stability(cache_key(p.graph, x)));
  check_stability(p.graph, x, Budget::seconds(60), &cache);
  CHECK(cache.find_stability(cache_key(p.graph, x)));
  CHECK(cache_key(p.graph, x) != cache_key(p.graph, VertexSet{}));
}

TEST_CASE("terminal profiles mark which terminal sets fit an optimum") {
  const RootedGadget a = gadget_A();
  ProfileTable t = terminal_profiles(a.graph, VertexSet{6, 7}, Budget::seconds(60));
  CHECK(t.complete == Verdict::yes);
  REQUIRE(t.feasible.size() == 4);
  CHECK(t.feasible[0]);
  for (std::size_t m = 0; m < 4; ++m) {
    if (!t.feasible[m]) continue;
    CHECK(t.witness[m].size() == 3);
  }
}

TEST_CASE("compositional lower bounds") {
  Construction r3 = build_R(3);
  CompositionalBound b = compositional_lower_bound(r3.graph, r3.occurrences, Budget::seconds(60));
  CHECK(b.gadget_sum == 21);
  CHECK(b.lower_bound >= 21);
  CHECK(b.parts.size() == 3);

  Construction l1 = build_L(1);
  b = compositional_lower_bound(l1.graph, l1.occurrences, Budget::seconds(60));
  CHECK(b.gadget_sum == 6 + 6 + 7);

  // One occurrence covering the whole graph gives gamma itself.
  const RootedGadget p = gadget_P();
  std::vector<Vertex> id(p.order());
  for (int v = 0; v < p.order(); ++v) id[v] = v;
  b = compositional_lower_bound(p.graph, {{p, id}}, Budget::seconds(60));
  CHECK(b.lower_bound == 7);
}

TEST_CASE("certification refuses bad occurrences") {
  Construction r3 = build_R(3);
  auto occs = r3.occurrences;
  const Budget budget = Budget::seconds(60);

  auto overlapping = occs;
  overlapping[2].embedding = overlapping[1].embedding;
  try {
    compositional_lower_bound(r3.graph, overlapping, budget);
    FAIL("overlap accepted");
  } catch (const CertificationError& e) {
    CHECK(e.occurrence() == 2);
    CHECK_FALSE(e.inconclusive());
  }

  auto short_map = occs;
  short_map[0].embedding.pop_back();
  CHECK_THROWS_AS(compositional_lower_bound(r3.graph, short_map, budget), CertificationError);

  auto out_of_range = occs;
  out_of_range[1].embedding[0] = 1000;
  CHECK_THROWS_AS(compositional_lower_bound(r3.graph, out_of_range, budget), CertificationError);

  // The A copies inside P are induced but not stable at their attachment.
  const RootedGadget p = gadget_P();
  auto twins = twin_copies(gadget_A());
  try {
    compositional_lower_bound(p.graph, twins, budget);
    FAIL("unstable occurrence accepted");
  } catch (const CertificationError& e) {
    CHECK(e.occurrence() == 0);
  }

  // Claiming a P copy where the host has an extra chord: not induced.
  Graph chord = r3.graph;
  chord.add_edge(occs[0].embedding[0], occs[0].embedding[5]);
  try {
    compositional_lower_bound(chord, occs, budget);
    FAIL("non-induced occurrence accepted");
  } catch (const CertificationError& e) {
    CHECK(e.occurrence() == 0);
  }
}

TEST_CASE("certified gamma closes with an explicit witness") {
  GadgetCache cache;
  Construction r3 = build_R(3);
  DominationResult r = certified_gamma(r3.graph, r3.occurrences, Budget::seconds(60), &cache);
  CHECK(r.gamma == 21);
  CHECK(r.certificate == Certificate::compositional);
  CHECK(r.optimal());
  CHECK(is_dominating(r3.graph, r.witness));
  CHECK(r.ratio == Rational(7, 20));

  Construction l1 = build_L(1);
  CHECK(certified_gamma(l1.graph, l1.occurrences, Budget::seconds(60), &cache).gamma == 19);

  Construction gp = build_GP(banana_graph(3));
  r = certified_gamma(gp.graph, gp.occurrences, Budget::seconds(60), &cache);
  CHECK(r.gamma == 21);
  CHECK(gp.graph.order() == 62);
}

TEST_CASE("a useless witness builder falls back to the exact solver") {
  Construction r3 = build_R(3);
  WitnessBuilder none = [](const Graph&, const std::vector<GadgetOccurrence>&, const CompositionalBound&,
                           const Budget&, GadgetCache*) -> std::optional<VertexSet> { return std::nullopt; };
  DominationResult r = certified_gamma(r3.graph, r3.occurrences, Budget::seconds(120), nullptr, none);
  CHECK(r.optimal());
  CHECK(r.gamma == 21);
  CHECK(r.certificate == Certificate::branch_and_bound);
}
