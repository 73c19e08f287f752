#include "qpfaff/report.hpp"

#include <sstream>

namespace qpfaff {

using nlohmann::ordered_json;

namespace {

ordered_json cert_points_json(const CertReport& rep) {
  ordered_json points = ordered_json::array();
  for (const auto& pr : rep.points) {
    ordered_json point = ordered_json::object();
    for (const auto& [sym, val] : pr.frees) point[sym] = to_string(val);
    ordered_json checks = ordered_json::array();
    for (const auto& c : pr.checks) {
      ordered_json check{{"name", c.name}, {"pass", c.pass}};
      if (c.residual) check["residual"] = *c.residual;
      if (c.stages) check["stages"] = *c.stages;
      checks.push_back(std::move(check));
    }
    points.push_back(ordered_json{{"point", point}, {"checks", checks}});
  }
  return points;
}

ordered_json cert_to_json(const CertReport& rep) {
  ordered_json j{{"id", rep.id},
                 {"samples", cert_points_json(rep)},
                 {"verdict", rep.pass ? "pass" : "fail"}};
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

}  // namespace

ordered_json report_to_json(const ReportDocument& doc) {
  ordered_json j{{"version", kVersion},
                 {"command", doc.command},
                 {"id", doc.id},
                 {"seed", doc.seed},
                 {"n_max", doc.n_max}};
  if (doc.reports.size() == 1) {
    const CertReport& rep = doc.reports.front();
    j["samples"] = cert_points_json(rep);
    if (!rep.notes.empty()) j["notes"] = rep.notes;
  } else {
    ordered_json ids = ordered_json::array();
    for (const auto& rep : doc.reports) ids.push_back(cert_to_json(rep));
    j["identities"] = ids;
  }
  j["verdict"] = doc.pass ? "pass" : "fail";
  // normalized so reports are byte-identical across runs; wall time is
  // printed on the console instead
  j["millis"] = 0;
  return j;
}

std::string report_to_string(const ReportDocument& doc) {
  return report_to_json(doc).dump(2) + "\n";
}

std::string report_summary(const ReportDocument& doc, long long elapsed_ms) {
  std::ostringstream os;
  for (const auto& rep : doc.reports) {
    std::size_t checks = 0, failed = 0;
    for (const auto& pr : rep.points) {
      checks += pr.checks.size();
      for (const auto& c : pr.checks)
        if (!c.pass) ++failed;
    }
    os << (rep.pass ? "PASS" : "FAIL") << "  " << rep.id << "  points="
       << rep.points.size() << " checks=" << checks;
    if (failed) os << " failed=" << failed;
    os << '\n';
  }
  os << "verdict: " << (doc.pass ? "pass" : "fail") << " (" << elapsed_ms << " ms)\n";
  return os.str();
}

}  // namespace qpfaff
