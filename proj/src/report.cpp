#include "taulab/report.hpp"

#include "taulab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace taulab {

namespace {

using nlohmann::ordered_json;

ordered_json config_json(const SuiteConfig& c, const std::vector<std::string>& claims) {
  return {{"order", c.order_text}, {"seed", c.seed},     {"samples", c.samples},
          {"claims", claims},      {"format", c.format}};
}

ordered_json record_json(const ClaimRecord& r) {
  return {{"claimId", r.claim_id}, {"paperAnchor", r.paper_anchor}, {"order", r.order},
          {"samples", r.samples},  {"passed", r.passed},            {"witnesses", r.witnesses},
          {"elapsedMs", r.elapsed_ms}};
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <class T>
std::string optional_text(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) return *v ? "yes" : "no";
  else return std::to_string(*v);
}

}  // namespace

std::string render_report(const Report& report, const std::string& format) {
  std::vector<std::string> claims;
  for (const auto& r : report.records) claims.push_back(r.claim_id);
  std::size_t passed = 0;
  for (const auto& r : report.records) passed += r.passed;
  const std::size_t total = report.records.size();

  if (format == "json") {
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) records.push_back(record_json(r));
    const ordered_json doc = {
        {"config", config_json(report.config, claims)},
        {"records", records},
        {"summary", {{"total", total}, {"passed", passed}, {"failed", total - passed}, {"allPassed", passed == total}}},
    };
    return doc.dump(2) + "\n";
  }
  if (format != "text") throw Error(ErrorKind::InvalidArgument, "unknown format '" + format + "'");

  std::ostringstream out;
  out << "order " << report.config.order_text << ", seed " << report.config.seed << ", samples "
      << report.config.samples << "\n";
  for (const auto& r : report.records) {
    out << (r.passed ? "PASS " : "FAIL ") << r.claim_id << "  [" << r.paper_anchor << "]  samples=" << r.samples
        << "  " << r.elapsed_ms << " ms\n";
    for (const auto& w : r.witnesses) out << "    witness: " << w << "\n";
  }
  out << passed << "/" << total << " claims passed\n";
  return out.str();
}

std::string render_finite(const FiniteReport& report) {
  std::size_t checked = report.rows.size();
  if (report.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"n", r.n},
                      {"topologyCount", r.topology_count},
                      {"homeoClassCount", r.homeo_class_count},
                      {"stronglyReversibleCount", optional_json(r.strongly_reversible_count)},
                      {"condensationClassesEqualHomeoClasses", optional_json(r.condensation_classes_equal_homeo_classes)},
                      {"allReversible", optional_json(r.all_reversible)}});
    }
    const ordered_json doc = {{"config", {{"n", report.sizes}, {"format", report.format}}},
                              {"rows", rows},
                              {"summary", {{"rows", checked}}}};
    return doc.dump(2) + "\n";
  }
  if (report.format != "text") throw Error(ErrorKind::InvalidArgument, "unknown format '" + report.format + "'");
  std::ostringstream out;
  out << "n  topologies  homeo-classes  strongly-reversible  condensation=homeo  all-reversible\n";
  for (const auto& r : report.rows) {
    out << r.n << "  " << r.topology_count << "  " << r.homeo_class_count << "  "
        << optional_text(r.strongly_reversible_count) << "  "
        << optional_text(r.condensation_classes_equal_homeo_classes) << "  " << optional_text(r.all_reversible)
        << "\n";
  }
  return out.str();
}

void write_output(const std::string& text, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
}

}  // namespace taulab
