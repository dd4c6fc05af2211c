#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"

#include "domlab/claims.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/report.hpp"
#include "domlab/scan.hpp"

using namespace domlab;

TEST_CASE("the registry has unique sorted ids and keeps stretch claims out of the default set") {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (const Claim& c : reg) CHECK(ids.insert(c.id).second);
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; }));
  const auto defaults = default_claim_ids();
  CHECK(std::find(defaults.begin(), defaults.end(), "R3.exact") == defaults.end());
  CHECK(std::find(defaults.begin(), defaults.end(), "R.k3") != defaults.end());
  CHECK(ids.count("R3.exact"));
}

TEST_CASE("verify runs selected claims in id order") {
  auto reports = verify_claims({"R.k3", "GP72", "Mk.r1.k2"});
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].claim_id == "GP72");
  CHECK(reports[1].claim_id == "Mk.r1.k2");
  CHECK(reports[2].claim_id == "R.k3");
  for (const auto& r : reports) CHECK(r.status == ClaimStatus::pass);
  CHECK(reports[2].computed["gamma"] == 21);
  CHECK(reports[2].computed["ratio"] == "7/20");
  CHECK(reports[1].computed["v"] == 10);
  CHECK(reports[1].computed["gamma"] == 3);
  CHECK(exit_code(reports) == 0);
  CHECK_THROWS_AS(verify_claims({"nope"}), std::invalid_argument);
}

TEST_CASE("claim status follows exact comparison and budgets") {
  Claim fake{"x", "c", "q", false, [](const ClaimContext&) {
               ClaimOutcome o;
               o.expected = {{"gamma", 3}};
               o.computed = {{"gamma", 4}};
               o.instance = "graph6 C~";
               return o;
             }};
  ClaimReport r = run_claim(fake, {});
  CHECK(r.status == ClaimStatus::fail);
  CHECK(r.notes.find("graph6 C~") != std::string::npos);
  CHECK(exit_code({r}) == 1);

  fake.check = [](const ClaimContext&) {
    ClaimOutcome o;
    o.exhausted = true;
    return o;
  };
  r = run_claim(fake, {});
  CHECK(r.status == ClaimStatus::inconclusive);
  CHECK(exit_code({r}) == 2);

  fake.check = [](const ClaimContext&) -> ClaimOutcome { throw GraphError("boom"); };
  r = run_claim(fake, {});
  CHECK(r.status == ClaimStatus::fail);
  CHECK(r.notes.find("boom") != std::string::npos);
}

TEST_CASE("reports") {
  std::ostringstream json, csv;
  emit_report({}, ReportFormat::json, json);
  CHECK(json.str() == "[]\n");
  emit_report({}, ReportFormat::csv, csv);
  CHECK(csv.str() == "claim_id,citation,quote,expected,computed,status,runtime_s,notes\n");

  ClaimReport pass{"a", "c", "q, with comma", {{"ratio", "7/20"}}, {{"ratio", "7/20"}}, ClaimStatus::pass, 0.5, ""};
  ClaimReport fail = pass;
  fail.claim_id = "b";
  fail.status = ClaimStatus::fail;
  auto j = to_json({pass, fail});
  CHECK(j[0]["status"] == "pass");
  CHECK(j[1]["status"] == "fail");
  CHECK(j[0]["expected"]["ratio"] == "7/20");
  CHECK(j[0].begin().key() == "claim_id");
  std::ostringstream rows;
  emit_report({pass}, ReportFormat::csv, rows);
  CHECK(rows.str().find("\"q, with comma\"") != std::string::npos);
  CHECK_THROWS_AS(emit_report({}, ReportFormat::json, std::string("/nonexistent/dir/r.json")), std::runtime_error);
}

TEST_CASE("conjectured bounds") {
  CHECK(reed_bound(54) == 18);
  CHECK(kelmans_bound(54) == 18);
  CHECK(reed_bound(14) == 5);
  CHECK(kelmans_bound(10) == 3);  // 10 = 1 mod 3
  CHECK(reed_bound(10) == 4);
}

TEST_CASE("scanning finds the path-family violation and survives bad lines") {
  std::stringstream in;
  in << write_graph6(build_L(1).graph) << "\n" << "not graph6\n" << write_graph6(complete_graph(4)) << "\n"
     << write_graph6(cycle_graph(5)) << "\n";
  ScanFilters filters;
  filters.kappa_min = 1;
  ScanResult r = scan_corpus(in, Conjecture::reed, filters);
  CHECK(r.summary.lines == 4);
  CHECK(r.summary.parse_errors == 1);
  CHECK(r.errors.at(0).line == 2);
  CHECK(r.summary.skipped == 1);  // C5 is not cubic
  CHECK(r.summary.violated == 1);
  CHECK(r.summary.holds == 1);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].gamma == 19);
  CHECK(r.records[0].reed_bound == 18);
  CHECK(r.records[0].reed == ScanVerdict::violated);
  CHECK(r.records[0].graph6 == write_graph6(build_L(1).graph));

  std::stringstream again(in.str());
  filters.kappa_min = 2;
  r = scan_corpus(again, Conjecture::kelmans, filters);
  CHECK(r.summary.violated == 0);
  CHECK(r.summary.skipped == 2);
  auto j = to_json(r);
  CHECK(j["conjecture"] == "kelmans");
  CHECK(j["errors"].size() == 1);
}
