#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "diagrw/errors.hpp"
#include "diagrw/model.hpp"
#include "diagrw/parser.hpp"
#include "diagrw/report.hpp"
#include "diagrw/theory.hpp"

namespace diagrw {

namespace {

namespace fs = std::filesystem;

struct UsageError {
  std::string message;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reads and resolves a theory file, printing diagnostics on failure.
std::optional<Theory> load(const std::string& path, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << path << ": cannot read file\n";
    return std::nullopt;
  }
  auto loaded = load_theory(*text);
  for (const Diagnostic& d : loaded.diagnostics) err << path << ':' << to_string(d) << '\n';
  return std::move(loaded.theory);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void dump_states(const LemmaReport& lemma, const std::string& dot_dir, const std::string& json_dir) {
  for (std::size_t k = 0; k < lemma.states.size(); ++k) {
    const ProofState& s = lemma.states[k];
    const std::string stem = lemma.name + "." + std::to_string(k);
    if (!dot_dir.empty()) {
      write_file(fs::path(dot_dir) / (stem + ".lhs.dot"), to_dot(s.lhs, stem + ".lhs"));
      write_file(fs::path(dot_dir) / (stem + ".rhs.dot"), to_dot(s.rhs, stem + ".rhs"));
    }
    if (!json_dir.empty()) {
      nlohmann::json j = {{"lemma", lemma.name}, {"state", k}, {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}};
      write_file(fs::path(json_dir) / (stem + ".json"), j.dump(2) + "\n");
    }
  }
}

struct CheckArgs {
  std::vector<std::string> files;
  std::size_t oracle_trials = 0;
  std::uint64_t seed = 1;
  bool json = false;
  std::string dump_dot;
  std::string dump_json;
  std::string model;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<TensorModel> model;
  if (!a.model.empty()) {
    auto text = read_file(a.model);
    if (!text) {
      err << a.model << ": cannot read file\n";
      return kExitUsage;
    }
    try {
      model = model_from_json(nlohmann::json::parse(*text));
    } catch (const std::exception& e) {
      err << a.model << ": invalid model: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  for (const std::string& dir : {a.dump_dot, a.dump_json}) {
    if (!dir.empty()) fs::create_directories(dir);
  }

  bool all_passed = true;
  auto json_reports = nlohmann::json::array();
  for (const std::string& file : a.files) {
    auto theory = load(file, err);
    if (!theory) return kExitUsage;

    FileReport report;
    report.file = file;
    report.theory = theory->signature.name;
    try {
      CheckOptions opts;
      opts.record_states = !a.dump_dot.empty() || !a.dump_json.empty();
      report.check = check_theory(*theory, opts);
    } catch (const std::exception& e) {
      err << file << ": " << e.what() << '\n';
      return kExitUsage;
    }
    for (const auto& l : report.check.lemmas) dump_states(l, a.dump_dot, a.dump_json);

    // Equations to cross-check: every rule, then every proved lemma.
    std::vector<std::tuple<std::string, std::string, const Term*, const Term*>> equations;
    for (const Rule& r : theory->signature.rules) equations.emplace_back(r.name, "rule", &r.lhs, &r.rhs);
    for (const Lemma& l : theory->lemmas) {
      const LemmaReport* lr = report.check.find(l.name);
      if (lr && lr->status == LemmaStatus::Ok) equations.emplace_back(l.name, "lemma", &l.lhs, &l.rhs);
    }
    if (a.oracle_trials > 0) {
      report.oracle.emplace();
      for (const auto& [name, kind, lhs, rhs] : equations) {
        report.oracle->push_back(
            {name, kind, oracle_check(*lhs, *rhs, a.oracle_trials, a.seed, theory->signature.equiv)});
      }
    }
    if (model) {
      report.model.emplace();
      auto interp = model->interpretation();
      for (const auto& [name, kind, lhs, rhs] : equations) {
        ModelEntry entry{name, kind, false, {}};
        try {
          entry.holds = concrete_model_check(*lhs, *rhs, interp, model->index, model->field);
        } catch (const std::exception& e) {
          entry.error = e.what();
        }
        report.model->push_back(std::move(entry));
      }
    }

    all_passed = all_passed && report.passed();
    if (a.json) {
      json_reports.push_back(to_json(report));
    } else {
      out << format_report(report, theory->signature);
    }
  }
  if (a.json) out << (json_reports.size() == 1 ? json_reports[0] : json_reports).dump(2) << '\n';
  return all_passed ? kExitOk : kExitCheckFailed;
}

std::string describe_match(const Match& m) {
  std::ostringstream os;
  os << '@' << m.occurrence << ": edges [";
  bool first = true;
  for (EdgeId e : m.image_edges()) {
    os << (first ? "" : ", ") << e.value;
    first = false;
  }
  os << "] vertices {";
  first = true;
  for (const auto& [p, h] : m.vertex_map) {
    os << (first ? "" : ", ") << p.value << "->" << h.value;
    first = false;
  }
  os << '}';
  return os.str();
}

int run_matches(const std::string& file, const std::string& lemma, std::size_t step, std::ostream& out,
                std::ostream& err) {
  auto theory = load(file, err);
  if (!theory) return kExitUsage;
  StepMatches sm;
  try {
    sm = step_matches(*theory, lemma, step);
  } catch (const ResolutionError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << file << ": " << e.what() << '\n';
    return kExitCheckFailed;
  }
  for (const Lemma& l : theory->lemmas) {
    if (l.name == lemma) out << "lemma " << lemma << " step " << step << ": " << to_string(l.proof[step - 1]) << '\n';
  }
  out << sm.matches.size() << " occurrence" << (sm.matches.size() == 1 ? "" : "s") << '\n';
  for (const Match& m : sm.matches) out << "  " << describe_match(m) << '\n';
  return kExitOk;
}

int run_show(const std::string& file, const std::string& name, const std::string& lemma, const std::string& format,
             std::ostream& out, std::ostream& err) {
  auto theory = load(file, err);
  if (!theory) return kExitUsage;
  const std::string wanted = lemma.empty() ? name : lemma;
  if (wanted.empty()) throw UsageError{"show needs a NAME or --lemma NAME"};

  std::optional<std::pair<Term, Term>> sides;
  std::optional<Term> single;
  if (lemma.empty()) {
    if (const Rule* r = theory->signature.find_rule(wanted)) sides.emplace(r->lhs, r->rhs);
    auto g = theory->signature.generators.find(wanted);
    if (!sides && g != theory->signature.generators.end()) {
      single = Term::generator(Label(wanted), g->second.first, g->second.second);
    }
  }
  if (!sides && !single) {
    for (const Lemma& l : theory->lemmas) {
      if (l.name == wanted) sides.emplace(l.lhs, l.rhs);
    }
  }
  if (!sides && !single) {
    err << file << ": no " << (lemma.empty() ? "rule, lemma or generator" : "lemma") << " named '" << wanted << "'\n";
    return kExitUsage;
  }

  auto emit = [&](const Term& t, const std::string& label) {
    InterfacedGraph g = term_to_graph(t);
    if (format == "dot") {
      out << to_dot(g, label);
    } else if (format == "term") {
      out << label << ": " << to_string(t) << '\n';
    } else {
      out << nlohmann::json{{"name", label}, {"term", to_string(t)}, {"graph", to_json(g)}}.dump(2) << '\n';
    }
  };
  if (single) {
    emit(*single, wanted);
  } else {
    emit(sides->first, wanted + ".lhs");
    emit(sides->second, wanted + ".rhs");
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check string-diagram theories by hypergraph rewriting", "diagrw"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check every lemma of one or more theory files");
  check_cmd->add_option("files", check.files, "Theory files (.thy)")->required();
  check_cmd->add_option("--oracle", check.oracle_trials, "Random Z_p trials per rule and lemma");
  check_cmd->add_option("--seed", check.seed, "First oracle seed");
  check_cmd->add_flag("--json", check.json, "Print a JSON report");
  check_cmd->add_option("--dump-dot", check.dump_dot, "Write DOT graphs of every proof state to DIR");
  check_cmd->add_option("--dump-json", check.dump_json, "Write JSON graphs of every proof state to DIR");
  check_cmd->add_option("--model", check.model, "Check rules and lemmas against a tensor model (JSON)");

  std::string m_file, m_lemma;
  std::size_t m_step = 0;
  auto* matches_cmd = app.add_subcommand("matches", "List the occurrences available to a proof step");
  matches_cmd->add_option("file", m_file, "Theory file")->required();
  matches_cmd->add_option("lemma", m_lemma, "Lemma name")->required();
  matches_cmd->add_option("step", m_step, "1-based step number")->required();

  std::string s_file, s_name, s_lemma, s_format = "json";
  auto* show_cmd = app.add_subcommand("show", "Print the graphs of a rule, lemma or generator");
  show_cmd->add_option("file", s_file, "Theory file")->required();
  show_cmd->add_option("name", s_name, "Rule, lemma or generator name");
  show_cmd->add_option("--lemma", s_lemma, "Lemma name");
  show_cmd->add_option("--format", s_format, "json, dot or term")->check(CLI::IsMember({"json", "dot", "term"}));

  std::vector<std::string> argv_storage{"diagrw"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check, out, err);
    if (*matches_cmd) return run_matches(m_file, m_lemma, m_step, out, err);
    return run_show(s_file, s_name, s_lemma, s_format, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace diagrw
