#include "domlab/report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace domlab {

namespace {

const char* const kColumns[] = {"claim_id", "citation", "quote", "expected", "computed", "status", "runtime_s", "notes"};

double millis(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::ordered_json to_json(const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const ClaimReport& r : reports) {
    nlohmann::ordered_json row;
    row["claim_id"] = r.claim_id;
    row["citation"] = r.citation;
    row["quote"] = r.quote;
    row["expected"] = nlohmann::ordered_json::parse(r.expected.dump());
    row["computed"] = nlohmann::ordered_json::parse(r.computed.dump());
    row["status"] = to_string(r.status);
    row["runtime_s"] = millis(r.runtime_s);
    row["notes"] = r.notes;
    out.push_back(std::move(row));
  }
  return out;
}

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::json) {
    out << to_json(reports).dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const ClaimReport& r : reports) {
    const std::string runtime = nlohmann::json(millis(r.runtime_s)).dump();
    const std::string cells[] = {r.claim_id,        r.citation,       r.quote, r.expected.dump(),
                                 r.computed.dump(), to_string(r.status), runtime, r.notes};
    for (std::size_t i = 0; i < std::size(cells); ++i) out << (i ? "," : "") << csv_field(cells[i]);
    out << '\n';
  }
}

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_report(reports, format, file);
  if (!file.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace domlab
