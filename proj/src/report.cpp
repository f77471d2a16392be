#include "grs/report.hpp"

#include <sstream>

#include <json.hpp>

#include "grs/io.hpp"

namespace grs {

bool DiagnosticsReport::all_pass() const {
  for (const CheckEntry& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void DiagnosticsReport::add_check(const std::string& name, double value,
                                  double tol) {
  checks.push_back({name, value, tol, value <= tol});
}

std::string DiagnosticsReport::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family;
  nlohmann::ordered_json jp = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) jp[k] = v;
  j["params"] = jp;
  nlohmann::ordered_json jt = nlohmann::ordered_json::object();
  for (const auto& [k, v] : truncation) jt[k] = v;
  j["truncation"] = jt;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckEntry& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    j["checks"].push_back(jc);
  }
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

std::string DiagnosticsReport::to_text() const {
  std::ostringstream os;
  os << "family: " << family << "\n";
  for (const auto& [k, v] : params) os << "  " << k << " = " << v << "\n";
  for (const auto& [k, v] : truncation) os << "  " << k << " = " << v << "\n";
  os << "checks:\n";
  for (const CheckEntry& c : checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  value="
       << format_double(c.value) << "  tol=" << format_double(c.tol) << "\n";
  }
  return os.str();
}

}  // namespace grs
