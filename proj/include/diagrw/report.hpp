#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagrw/theory.hpp"

namespace diagrw {

struct OracleEntry {
  std::string name;  // rule or lemma
  std::string kind;  // "rule" or "lemma"
  OracleResult result;
};

struct ModelEntry {
  std::string name;
  std::string kind;
  bool holds = false;
  /// Set when the model could not interpret the equation.
  std::string error;
};

/// Everything `check` reports for one file.
struct FileReport {
  std::string file;
  std::string theory;
  CheckReport check;
  std::optional<std::vector<OracleEntry>> oracle;
  std::optional<std::vector<ModelEntry>> model;

  bool passed() const;
};

/// {file, lemmas: [{name, status, failed_step?, reason?, millis}], oracle?, model?}
nlohmann::json to_json(const FileReport& report);

/// Human-readable summary, one line per rule set, lemma and oracle verdict.
std::string format_report(const FileReport& report, const Signature& sig);

}  // namespace diagrw
