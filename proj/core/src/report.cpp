#include "pvalg/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pvalg {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

namespace {

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["target"] = r.target;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace

std::string SuiteReport::to_json() const { return report_json(*this).dump(2); }

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << suite << " [" << target << "] seed=" << seed << " trials=" << trials << ": "
     << (passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json j;
  j["passed"] = std::all_of(reports.begin(), reports.end(),
                            [](const SuiteReport& r) { return r.passed(); });
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(report_json(r));
  return j.dump(2);
}

}  // namespace pvalg
