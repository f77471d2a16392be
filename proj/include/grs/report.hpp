#ifndef GRS_REPORT_HPP
#define GRS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace grs {

struct CheckEntry {
  std::string name;
  double value;
  double tol;
  bool pass;
};

/// Structured residuals, bounds, and classifications. Serialization uses a
/// fixed key order and shortest round-trip doubles so identical inputs give
/// byte-identical reports.
struct DiagnosticsReport {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> truncation;
  std::vector<CheckEntry> checks;
  std::vector<std::string> outputs;

  bool all_pass() const;
  void add_check(const std::string& name, double value, double tol);
  std::string to_json() const;
  /// Human-readable summary table.
  std::string to_text() const;
};

}  // namespace grs

#endif
