#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "domlab/domination.hpp"

namespace domlab {

enum class Conjecture { kelmans, reed };

/// ceil(n/3), or floor(n/3) when n = 1 (mod 3).
int kelmans_bound(int n);
/// ceil(n/3).
int reed_bound(int n);

struct ScanFilters {
  int kappa_min = 0;
  bool cubic_only = true;
};

enum class ScanVerdict { holds, violated, inconclusive };
const char* to_string(ScanVerdict v);

struct ScanRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  int gamma = 0;  // upper bound when the solve did not finish
  int kappa = 0;
  int kelmans_bound = 0;
  int reed_bound = 0;
  ScanVerdict kelmans = ScanVerdict::inconclusive;
  ScanVerdict reed = ScanVerdict::inconclusive;
};

struct ScanError {
  std::size_t line = 0;
  std::string message;
};

struct ScanSummary {
  std::size_t lines = 0;
  std::size_t skipped = 0;  // filtered out
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t inconclusive = 0;
  std::size_t parse_errors = 0;
};

struct ScanResult {
  Conjecture conjecture = Conjecture::reed;
  std::vector<ScanRecord> records;
  std::vector<ScanError> errors;
  ScanSummary summary;
};

/// Solves every graph6 line that passes the filters and checks the selected
/// bound. Malformed lines are recorded and skipped.
ScanResult scan_corpus(std::istream& in, Conjecture conjecture, const ScanFilters& filters,
                       const Budget& per_graph = Budget::seconds(60));

nlohmann::ordered_json to_json(const ScanResult& result);

}  // namespace domlab
