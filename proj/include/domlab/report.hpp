#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "domlab/claims.hpp"

namespace domlab {

enum class ReportFormat { json, csv };

/// Array of {claim_id, citation, quote, expected, computed, status, runtime_s, notes}.
nlohmann::ordered_json to_json(const std::vector<ClaimReport>& reports);

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, std::ostream& out);
/// Throws std::runtime_error when the file cannot be written.
void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, const std::string& path);

}  // namespace domlab
