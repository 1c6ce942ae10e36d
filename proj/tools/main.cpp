// Command-line front end: analyze, survey and batch.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "cutgroups/errors.hpp"
#include "cutgroups/report_json.hpp"
#include "cutgroups/spec_parser.hpp"
#include "cutgroups/surveys.hpp"
#include "cutgroups/sym_fastpath.hpp"

using namespace cutgroups;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpec = 2;
constexpr int kExitCap = 3;
constexpr int kExitGolden = 4;
constexpr int kExitIo = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json error_json(const std::exception& e, std::size_t line, const std::string& text) {
  Json err = Json::object();
  err["line"] = line;
  err["spec"] = text;
  std::string kind = "Error";
  if (dynamic_cast<const ParseError*>(&e))
    kind = "ParseError";
  else if (dynamic_cast<const InvalidSpec*>(&e))
    kind = "InvalidSpec";
  else if (dynamic_cast<const OrderCapExceeded*>(&e))
    kind = "OrderCapExceeded";
  else if (dynamic_cast<const NOutOfRange*>(&e))
    kind = "NOutOfRange";
  err["kind"] = kind;
  err["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["position"] = pe->position();
    err["expected"] = pe->expected();
  }
  Json j = Json::object();
  j["error"] = std::move(err);
  return j;
}

int cmd_analyze(const std::string& text, bool json, const AnalyzeOptions& opts) {
  const GroupReport r = analyze(parse_spec(text), opts);
  if (json)
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << report_text(r);
  return kExitOk;
}

int report_issues(const std::vector<std::string>& issues) {
  for (const auto& i : issues)
    std::cerr << "mismatch: " << i << "\n";
  if (!issues.empty()) {
    std::cerr << issues.size() << " mismatches against the published table\n";
    return kExitGolden;
  }
  std::cerr << "matches the published table\n";
  return kExitOk;
}

int survey_metacyclic(bool json, bool expect) {
  const MetacyclicSurvey s = metacyclic_sr_survey();
  if (json) {
    Json rows = Json::array();
    for (const auto& row : s.rows)
      rows.push_back(survey_row_json(row));
    Json doc = Json::object();
    doc["survey"] = "metacyclic-sr";
    doc["searched"] = s.all.size();
    doc["rows"] = std::move(rows);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "searched " << s.all.size() << " presentations, " << s.rows.size()
              << " semi-rational non-cut groups up to fingerprint\n";
    for (const auto& row : s.rows) {
      std::cout << render_spec(row.spec) << "  order " << to_string(row.fingerprint.order) << "  usr ";
      if (row.usr_m_set.empty()) {
        std::cout << "none";
      } else {
        std::cout << "m mod " << row.usr_m_set.period << " in {";
        for (std::size_t i = 0; i < row.usr_m_set.residues->size(); ++i)
          std::cout << (i ? "," : "") << (*row.usr_m_set.residues)[i];
        std::cout << "}";
      }
      std::cout << "  qr " << (row.verdicts.quadratic_rational.value_or(false) ? "yes" : "no");
      if (!row.notes.empty())
        std::cout << "  (" << row.notes << ")";
      std::cout << "\n";
    }
  }
  return expect ? report_issues(compare_metacyclic_with_paper(s)) : kExitOk;
}

int survey_alternating(std::uint32_t max_n, bool json, bool expect) {
  const auto rows = alternating_survey(max_n);
  if (json) {
    Json doc = Json::object();
    doc["survey"] = "alternating";
    Json arr = Json::array();
    for (const auto& row : rows)
      arr.push_back(alternating_row_json(row));
    doc["rows"] = std::move(arr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "  n  cut  usr  period\n";
    for (const auto& row : rows) {
      std::cout << (row.n < 10 ? "  " : " ") << row.n << "  " << (row.cut ? "yes" : "no ") << "  "
                << (row.usr ? "yes" : "no ") << "  " << row.usr_m_set.period << "\n";
    }
  }
  return expect ? report_issues(compare_alternating_with_paper(rows)) : kExitOk;
}

int survey_gk(bool json, bool expect, const AnalyzeOptions& opts) {
  std::vector<std::string> issues;
  Json doc = Json::object();
  doc["survey"] = "gk-catalog";
  Json catalog = Json::array();
  for (const auto& g : figure1_catalog()) {
    Json e = gk_json(g.graph, g.label);
    e["realizability_open"] = g.realizability_open;
    catalog.push_back(std::move(e));
    if (!json)
      std::cout << g.label << (g.realizability_open ? "*" : " ") << " " << g.graph.str() << "\n";
  }
  doc["catalog"] = std::move(catalog);
  Json groups = Json::array();
  for (const auto& entry : corpus_up_to(2000)) {
    const GroupReport r = analyze(entry.spec, opts);
    if (!r.flags.cut || !r.structure.solvable.value_or(false) || r.order == 1)
      continue;
    Json e = Json::object();
    e["spec"] = r.spec;
    e["gk_graph"] = gk_json(r.gk, r.figure1_label);
    groups.push_back(std::move(e));
    if (!json)
      std::cout << r.spec << "  " << r.gk.str() << "  -> " << (r.figure1_label ? *r.figure1_label : '?') << "\n";
    if (!r.figure1_label || *r.figure1_label >= 's')
      issues.push_back(r.spec + " has prime graph " + r.gk.str() + " outside (a)-(r)");
  }
  doc["solvable_cut_groups"] = std::move(groups);
  if (json)
    std::cout << doc.dump(2) << "\n";
  return expect ? report_issues(issues) : kExitOk;
}

int cmd_batch(const std::string& path, const AnalyzeOptions& opts, unsigned jobs) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path);
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.emplace_back(no, line.substr(first, last - first + 1));
  }
  if (in.bad())
    throw IoError("error reading " + path);

  auto run = [&opts](std::size_t no, const std::string& text) {
    try {
      return report_json(analyze(parse_spec(text), opts)).dump();
    } catch (const std::exception& e) {
      return error_json(e, no, text).dump();
    }
  };
  std::vector<std::string> out(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += jobs) {
    std::vector<std::future<std::string>> batch;
    for (std::size_t i = start; i < std::min(lines.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, run, lines[i].first, lines[i].second));
    for (std::size_t i = 0; i < batch.size(); ++i)
      out[start + i] = batch[i].get();
  }
  for (const auto& s : out)
    std::cout << s << "\n";
  std::cout.flush();
  if (!std::cout)
    throw IoError("error writing output");
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationality and cut-group analysis of finite groups"};
  app.require_subcommand(1);
  std::uint64_t cap = kDefaultOrderCap;
  std::uint64_t dixon_prime = 0;
  app.add_option("--cap", cap, "Largest group order to realize")->check(CLI::PositiveNumber);
  app.add_option("--dixon-prime", dixon_prime, "Prime for the Dixon-Schneider reduction");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one group");
  std::string spec_text;
  bool json = false;
  analyze_cmd->add_option("spec", spec_text, "Group specification")->required();
  analyze_cmd->add_flag("--json", json, "Print the JSON report");

  auto* survey_cmd = app.add_subcommand("survey", "Reproduce a published table");
  std::string survey_name;
  std::uint32_t max_n = kMaxFastpathDegree;
  std::string expect;
  bool survey_json = false;
  survey_cmd->add_option("name", survey_name, "metacyclic-sr, alternating or gk-catalog")
      ->required()
      ->check(CLI::IsMember({"metacyclic-sr", "alternating", "gk-catalog"}));
  survey_cmd->add_option("--max", max_n, "Largest degree for the alternating survey");
  survey_cmd->add_option("--expect", expect, "Compare with embedded tables")->check(CLI::IsMember({"paper"}));
  survey_cmd->add_flag("--json", survey_json, "Print JSON");

  auto* batch_cmd = app.add_subcommand("batch", "Analyze one spec per line, printing JSON lines");
  std::string batch_path;
  unsigned jobs = 1;
  batch_cmd->add_option("file", batch_path, "Input file")->required();
  batch_cmd->add_option("--jobs", jobs, "Lines analyzed concurrently")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSpec;
  }

  AnalyzeOptions opts;
  opts.cap = cap;
  if (dixon_prime != 0)
    opts.dixon_prime = dixon_prime;

  try {
    if (*analyze_cmd)
      return cmd_analyze(spec_text, json, opts);
    if (*survey_cmd) {
      const bool want = expect == "paper";
      if (survey_name == "metacyclic-sr")
        return survey_metacyclic(survey_json, want);
      if (survey_name == "alternating")
        return survey_alternating(max_n, survey_json, want);
      return survey_gk(survey_json, want, opts);
    }
    return cmd_batch(batch_path, opts, jobs);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitSpec;
  } catch (const InvalidSpec& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitSpec;
  } catch (const NOutOfRange& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kExitSpec;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "order cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
