#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domlab/analysis.hpp"
#include "domlab/certify.hpp"
#include "domlab/claims.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/report.hpp"
#include "domlab/scan.hpp"

using namespace domlab;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_first_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  auto lines = read_graph6_lines(in);
  if (lines.empty()) throw UsageError("'" + path + "' holds no graph6 line");
  return parse_graph6(lines.front().text);
}

Graph base_graph(const std::string& spec) {
  if (spec == "K23") return banana_graph(3);
  if (spec == "K4") return complete_graph(4);
  if (spec == "prism") return prism_graph();
  return parse_graph6(spec);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string family;
  int k = 3, r = 1, i = 2, n = 7, j = 2;
  std::string base = "K4";
  std::string out = "-";
  std::string format = "g6";
};

int run_build(const BuildArgs& a) {
  Graph g;
  std::map<Vertex, std::string> labels;
  const std::string& f = a.family;
  auto gadget = [&](const RootedGadget& h) {
    g = h.graph;
    labels = h.labels();
  };
  if (f == "A" || f == "B" || f == "S" || f == "T" || f == "P" || f == "Q" || f == "W" || f == "P'") {
    gadget(gadget_catalog(f));
  } else if (f == "Pi") {
    gadget(gadget_P_i(a.i));
  } else if (f == "Qi") {
    gadget(gadget_Q_i(a.i));
  } else if (f == "R") {
    g = build_R(a.k).graph;
  } else if (f == "L") {
    g = build_L(a.r).graph;
  } else if (f == "GP") {
    g = build_GP(base_graph(a.base)).graph;
  } else if (f == "GPB") {
    g = build_GPB(base_graph(a.base)).graph;
  } else if (f == "GB") {
    g = build_GB(base_graph(a.base)).graph;
  } else if (f == "M" || f == "N") {
    Construction c = f == "M" ? build_M(a.r, a.k) : build_N(a.r, a.k, a.i);
    g = std::move(c.graph);
    for (const auto& [name, v] : c.names) labels[v] = name;
  } else if (f == "petersen") {
    g = generalized_petersen(a.n, a.j);
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  write_text(a.out, a.format == "dot" ? to_dot(g, labels) : write_graph6(g) + "\n");
  return 0;
}

// ---------------------------------------------------------------- analyze

int run_analyze(const std::string& in_path, const std::vector<std::string>& checks, double budget_s) {
  std::ifstream in(in_path);
  if (!in) throw UsageError("cannot read '" + in_path + "'");
  bool exhausted = false;
  ojson out = ojson::array();
  for (const Graph6Line& line : read_graph6_lines(in)) {
    ojson row;
    row["line"] = line.line_number;
    Graph g;
    try {
      g = parse_graph6(line.text);
    } catch (const Graph6Error& e) {
      row["error"] = e.what();
      out.push_back(row);
      continue;
    }
    row["n"] = g.order();
    row["m"] = g.size();
    for (const std::string& check : checks) {
      if (check == "cubic") {
        row["cubic"] = is_cubic(g);
      } else if (check == "bridges") {
        row["bridges"] = bridges(g).size();
      } else if (check == "kappa") {
        row["kappa"] = vertex_connectivity(g);
      } else if (check == "cyc4") {
        if (!is_cubic(g)) {
          row["cyc4"] = "n/a (not cubic)";
          continue;
        }
        const CyclicCutResult c = cyclic_4_edge_connectivity(g);
        row["cyc4"] = c.cyclically_4_connected;
        if (c.witness) {
          ojson cut = ojson::array();
          for (std::size_t e : *c.witness) cut.push_back({g.edge(e).u, g.edge(e).v});
          row["cyc4_witness"] = cut;
        }
      } else if (check == "hamilton") {
        // The search runs at roughly 10^7 expansions per second.
        const auto limit = static_cast<std::uint64_t>(budget_s * 1e7);
        const HamiltonResult h = hamiltonian_cycle(g, limit);
        row["hamilton"] = to_string(h.status);
        if (h.status == SearchStatus::found) row["cycle"] = h.cycle;
        exhausted = exhausted || h.status == SearchStatus::budget_exhausted;
      } else {
        throw UsageError("unknown check '" + check + "'");
      }
    }
    out.push_back(row);
  }
  std::cout << out.dump(2) << '\n';
  return exhausted ? 2 : 0;
}

// ---------------------------------------------------------------- solve

RootedGadget sidecar_gadget(const nlohmann::json& occ) {
  const std::string name = occ.at("gadget").get<std::string>();
  if (name == "Pi") return gadget_P_i(occ.at("i").get<int>());
  if (name == "Qi") return gadget_Q_i(occ.at("i").get<int>());
  return gadget_catalog(name);
}

std::vector<GadgetOccurrence> read_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad occurrence file: " + std::string(e.what()));
  }
  std::vector<GadgetOccurrence> occs;
  try {
    for (const auto& occ : doc.at("occurrences")) {
      occs.push_back({sidecar_gadget(occ), occ.at("embedding").get<std::vector<Vertex>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad occurrence file: " + std::string(e.what()));
  }
  return occs;
}

ojson result_json(const DominationResult& r) {
  return {{"gamma", r.gamma},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"certificate", to_string(r.certificate)},
          {"status", to_string(r.status)},
          {"ratio", r.ratio.str()},
          {"witness", r.witness.vertices()},
          {"nodes", r.nodes}};
}

int run_solve(const std::string& in_path, double budget_s, const std::string& certify) {
  const Graph g = read_first_graph(in_path);
  const Budget budget = Budget::seconds(budget_s);
  DominationResult r;
  if (certify.empty()) {
    r = gamma_exact(g, budget);
  } else {
    GadgetCache cache;
    try {
      r = certified_gamma(g, read_sidecar(certify), budget, &cache);
    } catch (const CertificationError& e) {
      ojson err = {{"error", e.what()}};
      if (e.occurrence() != CertificationError::npos) err["occurrence"] = e.occurrence();
      std::cout << err.dump(2) << '\n';
      return e.inconclusive() ? 2 : 1;
    }
  }
  std::cout << result_json(r).dump(2) << '\n';
  return r.optimal() ? 0 : 2;
}

// ---------------------------------------------------------------- verify

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

int run_verify(const std::string& claims, double budget_s, const std::string& report, const std::string& format,
               unsigned threads) {
  VerifyOptions opt;
  opt.per_claim = Budget::seconds(budget_s);
  opt.threads = threads;
  std::vector<ClaimReport> reports;
  try {
    reports = verify_claims(split(claims), opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const ClaimReport& r : reports) {
    std::cout << to_string(r.status) << ' ' << r.claim_id << " (" << r.runtime_s << " s)";
    if (r.status != ClaimStatus::pass && !r.notes.empty()) std::cout << "  " << r.notes;
    std::cout << '\n';
  }
  try {
    emit_report(reports, format == "csv" ? ReportFormat::csv : ReportFormat::json, report);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return exit_code(reports);
}

// ---------------------------------------------------------------- scan

int run_scan(const std::string& in_path, const std::string& conjecture, int kappa_min, const std::string& report,
             double budget_s) {
  std::ifstream in(in_path);
  if (!in) throw UsageError("cannot read '" + in_path + "'");
  ScanFilters filters;
  filters.kappa_min = kappa_min;
  const ScanResult result = scan_corpus(in, conjecture == "kelmans" ? Conjecture::kelmans : Conjecture::reed, filters,
                                        Budget::seconds(budget_s));
  write_text(report, to_json(result).dump(2) + "\n");
  const ScanSummary& s = result.summary;
  std::cout << "graphs " << s.lines << ", skipped " << s.skipped << ", holds " << s.holds << ", violated "
            << s.violated << ", inconclusive " << s.inconclusive << ", parse errors " << s.parse_errors << '\n';
  for (const ScanError& e : result.errors) std::cerr << "line " << e.line << ": " << e.message << '\n';
  if (s.violated) return 1;
  return s.inconclusive ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination number laboratory for cubic graphs"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a gadget or graph family");
  b->add_option("--family", build.family, "A,B,S,T,P,Q,W,P',Pi,Qi,R,L,GP,GPB,GB,M,N,petersen")->required();
  b->add_option("--k", build.k, "k parameter (R, M, N)");
  b->add_option("--r", build.r, "r parameter (L, M, N)");
  b->add_option("--i", build.i, "i parameter (Pi, Qi, N)");
  b->add_option("--n", build.n, "petersen: outer cycle length");
  b->add_option("--j", build.j, "petersen: inner step");
  b->add_option("--base", build.base, "base graph for GP/GPB/GB: K23, K4, prism or graph6");
  b->add_option("--out", build.out, "output file, - for stdout")->required();
  b->add_option("--format", build.format)->check(CLI::IsMember({"g6", "dot"}));

  std::string in_path, checks = "cubic,bridges,kappa,cyc4,hamilton";
  double budget_s = 300;
  auto* an = app.add_subcommand("analyze", "Structural checks on every graph6 line");
  an->add_option("--in", in_path)->required();
  an->add_option("--checks", checks, "comma-separated: cubic,bridges,kappa,cyc4,hamilton");
  an->add_option("--budget", budget_s, "seconds");

  std::string certify;
  auto* so = app.add_subcommand("solve", "Domination number of the first graph in a file");
  so->add_option("--in", in_path)->required();
  so->add_option("--budget", budget_s, "seconds");
  so->add_option("--certify", certify, "occurrence sidecar (JSON) for a compositional certificate");

  std::string claims = "all", report, format = "json";
  unsigned threads = 0;
  bool list = false;
  auto* ve = app.add_subcommand("verify", "Run the claim registry");
  ve->add_option("--claims", claims, "all or comma-separated ids");
  ve->add_option("--budget", budget_s, "seconds per claim");
  ve->add_option("--report", report, "report file");
  ve->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  ve->add_option("--threads", threads, "worker threads (0: all cores)");
  ve->add_flag("--list", list, "print claim ids and exit");

  std::string conjecture;
  int kappa_min = 0;
  double scan_budget = 60;
  auto* sc = app.add_subcommand("scan", "Check a graph6 corpus against a domination bound");
  sc->add_option("--in", in_path)->required();
  sc->add_option("--conjecture", conjecture)->required()->check(CLI::IsMember({"kelmans", "reed"}));
  sc->add_option("--kappa-min", kappa_min);
  sc->add_option("--report", report)->required();
  sc->add_option("--budget", scan_budget, "seconds per graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*b) return run_build(build);
    if (*an) return run_analyze(in_path, split(checks), budget_s);
    if (*so) return run_solve(in_path, budget_s, certify);
    if (*ve) {
      if (list) {
        for (const Claim& c : claim_registry()) std::cout << c.id << (c.stretch ? "  (stretch)" : "") << '\n';
        return 0;
      }
      if (report.empty()) throw UsageError("--report is required");
      return run_verify(claims, budget_s, report, format, threads);
    }
    if (*sc) return run_scan(in_path, conjecture, kappa_min, report, scan_budget);
  } catch (const UsageError& e) {
    std::cerr << "domlab: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "domlab: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
