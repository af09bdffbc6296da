#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "foldcx/verify.hpp"

namespace foldcx {

std::string version() { return "0.3.0"; }

bool VerificationReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["report"] = report.name;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.parameters) j["parameters"][k] = v;
  j["verdict"] = report.pass() ? "pass" : "fail";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["input"] = r.input;
    row["classification"] = r.classification;
    row["chi"] = r.euler;
    row["pass"] = r.pass;
    if (!r.detail.empty()) row["detail"] = r.detail;
    j["rows"].push_back(std::move(row));
  }
  j["notes"] = report.notes;
  if (include_timing) j["wall_clock_ms"] = report.wall_clock_ms;
  return j.dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& report) {
  std::size_t w_input = 5, w_class = 14;
  for (const auto& r : report.rows) {
    w_input = std::max(w_input, r.input.size());
    w_class = std::max(w_class, r.classification.size());
  }
  std::ostringstream out;
  out << report.name << "\n";
  for (const auto& [k, v] : report.parameters) out << "  " << k << " = " << v << "\n";
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  out << pad("input", w_input) << "  " << pad("classification", w_class) << "  chi  result  detail\n";
  for (const auto& r : report.rows) {
    char chi[16];
    std::snprintf(chi, sizeof chi, "%3ld", r.euler);
    out << pad(r.input, w_input) << "  " << pad(r.classification, w_class) << "  " << chi << "  "
        << (r.pass ? "pass  " : "FAIL  ") << "  " << r.detail << "\n";
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", report.wall_clock_ms);
  out << "verdict: " << (report.pass() ? "pass" : "FAIL") << " (" << report.rows.size() << " rows, " << ms
      << " ms)\n";
  return out.str();
}

}  // namespace foldcx
