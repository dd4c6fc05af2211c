#include "domlab/scan.hpp"

#include "domlab/analysis.hpp"
#include "domlab/io.hpp"

namespace domlab {

int reed_bound(int n) { return ceil_div(n, 3); }

int kelmans_bound(int n) { return n % 3 == 1 ? n / 3 : ceil_div(n, 3); }

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::holds: return "holds";
    case ScanVerdict::violated: return "violated";
    case ScanVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// gamma <= bound is settled by any witness; gamma > bound needs optimality or
// a lower bound above it.
ScanVerdict judge(const DominationResult& r, int bound) {
  if (r.upper_bound <= bound) return ScanVerdict::holds;
  if (r.lower_bound > bound) return ScanVerdict::violated;
  return ScanVerdict::inconclusive;
}

}  // namespace

ScanResult scan_corpus(std::istream& in, Conjecture conjecture, const ScanFilters& filters, const Budget& per_graph) {
  ScanResult out;
  out.conjecture = conjecture;
  for (const Graph6Line& line : read_graph6_lines(in)) {
    ++out.summary.lines;
    Graph g;
    try {
      g = parse_graph6(line.text);
    } catch (const Graph6Error& e) {
      out.errors.push_back({line.line_number, e.what()});
      ++out.summary.parse_errors;
      continue;
    }
    if (filters.cubic_only && !is_cubic(g)) {
      ++out.summary.skipped;
      continue;
    }
    ScanRecord rec;
    rec.line = line.line_number;
    rec.graph6 = line.text;
    rec.n = g.order();
    rec.kappa = vertex_connectivity(g);
    if (rec.kappa < filters.kappa_min) {
      ++out.summary.skipped;
      continue;
    }
    const DominationResult r = gamma_exact(g, per_graph);
    rec.gamma = r.gamma;
    rec.kelmans_bound = kelmans_bound(rec.n);
    rec.reed_bound = reed_bound(rec.n);
    rec.kelmans = judge(r, rec.kelmans_bound);
    rec.reed = judge(r, rec.reed_bound);
    // Records always carry an exact gamma; anything less is inconclusive.
    if (!r.optimal()) rec.kelmans = rec.reed = ScanVerdict::inconclusive;
    switch (conjecture == Conjecture::kelmans ? rec.kelmans : rec.reed) {
      case ScanVerdict::holds: ++out.summary.holds; break;
      case ScanVerdict::violated: ++out.summary.violated; break;
      case ScanVerdict::inconclusive: ++out.summary.inconclusive; break;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

nlohmann::ordered_json to_json(const ScanResult& result) {
  nlohmann::ordered_json j;
  j["conjecture"] = result.conjecture == Conjecture::kelmans ? "kelmans" : "reed";
  j["summary"] = {{"lines", result.summary.lines},
                  {"skipped", result.summary.skipped},
                  {"holds", result.summary.holds},
                  {"violated", result.summary.violated},
                  {"inconclusive", result.summary.inconclusive},
                  {"parse_errors", result.summary.parse_errors}};
  j["records"] = nlohmann::ordered_json::array();
  for (const ScanRecord& r : result.records) {
    j["records"].push_back({{"line", r.line},
                            {"graph6", r.graph6},
                            {"n", r.n},
                            {"gamma", r.gamma},
                            {"kappa", r.kappa},
                            {"kelmans_bound", r.kelmans_bound},
                            {"reed_bound", r.reed_bound},
                            {"kelmans", to_string(r.kelmans)},
                            {"reed", to_string(r.reed)}});
  }
  j["errors"] = nlohmann::ordered_json::array();
  for (const ScanError& e : result.errors) j["errors"].push_back({{"line", e.line}, {"message", e.message}});
  return j;
}

}  // namespace domlab
