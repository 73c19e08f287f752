#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpfaff/pfaff.hpp"

namespace qpfaff {

inline constexpr const char* kVersion = "0.1.0";

// Machine-readable run report. Serialization is byte-stable for fixed
// inputs: key order is fixed, map iteration is ordered, and the millis
// field is normalized to 0 in files (wall time goes to the console only).
struct ReportDocument {
  std::string command;
  std::string id;
  std::uint64_t seed = 0;
  long n_max = 0;
  std::vector<CertReport> reports;
  bool pass = true;
};

nlohmann::ordered_json report_to_json(const ReportDocument& doc);
std::string report_to_string(const ReportDocument& doc);

// Human-readable one-liner per identity plus a verdict, for the console.
std::string report_summary(const ReportDocument& doc, long long elapsed_ms);

}  // namespace qpfaff
