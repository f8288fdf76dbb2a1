#include "diagrw/report.hpp"

#include <iomanip>
#include <sstream>

namespace diagrw {

bool FileReport::passed() const {
  if (!check.all_ok()) return false;
  if (model) {
    for (const auto& m : *model) {
      if (!m.holds) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const FileReport& report) {
  auto lemmas = nlohmann::json::array();
  for (const auto& l : report.check.lemmas) {
    nlohmann::json j = {{"name", l.name}, {"status", l.status == LemmaStatus::Ok ? "ok" : "failed"}};
    if (l.failed_step) j["failed_step"] = *l.failed_step;
    if (!l.reason.empty()) j["reason"] = l.reason;
    j["millis"] = l.millis;
    lemmas.push_back(std::move(j));
  }
  nlohmann::json out = {{"file", report.file}, {"lemmas", std::move(lemmas)}};
  if (report.oracle) {
    auto arr = nlohmann::json::array();
    for (const auto& o : *report.oracle) {
      nlohmann::json j = {{"name", o.name},
                          {"kind", o.kind},
                          {"verdict", to_string(o.result.verdict)},
                          {"trials", o.result.trials_run}};
      if (o.result.seed) j["seed"] = *o.result.seed;
      arr.push_back(std::move(j));
    }
    out["oracle"] = std::move(arr);
  }
  if (report.model) {
    auto arr = nlohmann::json::array();
    for (const auto& m : *report.model) {
      nlohmann::json j = {{"name", m.name}, {"kind", m.kind}, {"holds", m.holds}};
      if (!m.error.empty()) j["error"] = m.error;
      arr.push_back(std::move(j));
    }
    out["model"] = std::move(arr);
  }
  return out;
}

std::string format_report(const FileReport& report, const Signature& sig) {
  std::ostringstream os;
  os << report.file;
  if (!report.theory.empty()) os << " (theory " << report.theory << ")";
  os << '\n';
  os << "  generators:";
  for (const auto& [name, arity] : sig.generators) os << ' ' << name << ' ' << arity.first << "->" << arity.second;
  os << "\n  rules:";
  for (const Rule& r : sig.rules) os << ' ' << r.name;
  os << '\n';
  for (const auto& l : report.check.lemmas) {
    os << "  lemma " << l.name << ": ";
    if (l.status == LemmaStatus::Ok) {
      os << "ok";
    } else {
      os << "FAILED at step " << l.failed_step.value_or(0) << ": " << l.reason;
    }
    os << " (" << std::fixed << std::setprecision(1) << l.millis << " ms)\n";
  }
  if (report.oracle) {
    for (const auto& o : *report.oracle) {
      os << "  oracle " << o.kind << ' ' << o.name << ": " << to_string(o.result.verdict);
      if (o.result.seed) os << " (seed " << *o.result.seed << ')';
      os << '\n';
    }
  }
  if (report.model) {
    for (const auto& m : *report.model) {
      os << "  model " << m.kind << ' ' << m.name << ": " << (m.holds ? "holds" : "DOES NOT HOLD");
      if (!m.error.empty()) os << " (" << m.error << ')';
      os << '\n';
    }
  }
  os << "  result: " << (report.passed() ? "ok" : "FAILED") << '\n';
  return os.str();
}

}  // namespace diagrw
