#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "domlab/certify.hpp"
#include "domlab/domination.hpp"

namespace domlab {

enum class ClaimStatus { pass, fail, inconclusive };
const char* to_string(ClaimStatus s);

struct ClaimReport {
  std::string claim_id;
  std::string citation;  // statement label the claim reproduces
  std::string quote;     // verbatim anchor for the expected values
  nlohmann::json expected;
  nlohmann::json computed;
  ClaimStatus status = ClaimStatus::inconclusive;
  double runtime_s = 0.0;
  std::string notes;
};

/// What a check hands back: pass iff expected == computed, unless some
/// search ran out of budget.
struct ClaimOutcome {
  nlohmann::json expected = nlohmann::json::object();
  nlohmann::json computed = nlohmann::json::object();
  bool exhausted = false;
  std::string instance;  // graph6 or parameters, for rerunning a failure
  std::vector<std::string> notes;
};

struct ClaimContext {
  Budget budget;
  GadgetCache* cache = nullptr;
};

struct Claim {
  std::string id;
  std::string citation;
  std::string quote;
  /// Stretch claims run only when named explicitly.
  bool stretch = false;
  std::function<ClaimOutcome(const ClaimContext&)> check;
};

/// Every registered claim, sorted by id.
const std::vector<Claim>& claim_registry();

/// Ids run by "all": the registry minus stretch claims.
std::vector<std::string> default_claim_ids();

struct VerifyOptions {
  Budget per_claim = Budget::seconds(300);
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs the named claims ("all" expands to the default set) in a work pool.
/// Reports come back in claim-id order. Throws std::invalid_argument on an
/// unknown id.
std::vector<ClaimReport> verify_claims(const std::vector<std::string>& ids, const VerifyOptions& options = {});

ClaimReport run_claim(const Claim& claim, const ClaimContext& ctx);

/// 0 all pass, 1 any fail, 2 any inconclusive and none failed.
int exit_code(const std::vector<ClaimReport>& reports);

}  // namespace domlab
