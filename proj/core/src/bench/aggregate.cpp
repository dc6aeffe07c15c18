// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bench/aggregate.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "randbench/bench/report_json.hpp"
#include "randbench/error.hpp"
#include "randbench/sts/suite.hpp"

namespace randbench::bench {
using nlohmann::json;

namespace {

std::string Fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Renders rows of cells as left-aligned columns separated by two spaces.
std::string RenderGrid(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) s += (c ? "  " : "") + Pad(cells[c], width[c]);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(header);
  if (rows.empty()) out << "(no rows)\n";
  for (const auto& r : rows) line(r);
  return out.str();
}

struct StageRef {
  std::string run;
  std::string label;
  std::string stage;
  const json* stage_json;
};

std::vector<StageRef> Stages(const std::vector<NamedReport>& runs) {
  std::vector<StageRef> out;
  for (const NamedReport& r : runs) {
    for (const json& src : r.report.at("sources")) {
      for (const json& st : src.at("stages")) {
        out.push_back({r.run, src.at("label").get<std::string>(), st.at("stage").get<std::string>(), &st});
      }
    }
  }
  return out;
}

std::string RowName(const StageRef& s, bool with_run) {
  return (with_run ? s.run + ":" : "") + s.label + "." + s.stage;
}

json OptionalNumber(const json& j, const char* key) {
  return j.contains(key) && j[key].is_number() ? j[key] : json(nullptr);
}

}  // namespace

AggregateResult Aggregate(const std::vector<NamedReport>& runs,
                          const std::vector<PredictionReport>& predictions) {
  if (runs.empty()) throw ParameterError("aggregate needs at least one run report");
  const bool with_run = runs.size() > 1;
  const std::vector<StageRef> stages = Stages(runs);
  AggregateResult result;
  std::ostringstream text;

  // Statistical battery matrix.
  {
    std::vector<sts::SuiteReport> suites;
    json rows = json::array();
    for (const StageRef& s : stages) {
      const json& m = s.stage_json->at("measures");
      if (!m.contains("sts")) continue;
      sts::SuiteReport suite;
      suite.stream.label = RowName(s, with_run);
      suite.all_pass = m["sts"].at("all_pass").get<bool>();
      json cells = json::array();
      for (const json& r : m["sts"].at("results")) {
        suite.results.push_back(TestResultFromJson(r));
        switch (sts::CellOf(suite.results.back())) {
          case sts::Cell::kPass: cells.push_back("pass"); break;
          case sts::Cell::kFail: cells.push_back("fail"); break;
          case sts::Cell::kInapplicable: cells.push_back("inapplicable"); break;
          case sts::Cell::kError: cells.push_back("error"); break;
        }
      }
      json row = {{"run", s.run}, {"label", s.label}, {"stage", s.stage},
                  {"cells", std::move(cells)}, {"all_pass", suite.all_pass}};
      if (m["sts"].contains("rerun")) row["rerun_all_pass"] = m["sts"]["rerun"].at("all_pass");
      rows.push_back(std::move(row));
      suites.push_back(std::move(suite));
    }
    json columns = json::array();
    for (sts::TestId id : sts::AllTests()) columns.push_back(sts::TestName(id));
    result.tables["sts"] = {{"columns", columns}, {"rows", rows}};
    text << "Statistical test battery\n";
    if (suites.empty()) {
      text << "(no rows)\n";
    } else {
      text << sts::RenderMatrix(sts::BuildMatrix(suites));
      for (const json& row : rows) {
        if (row.contains("rerun_all_pass")) {
          text << "rerun " << row["label"].get<std::string>() << "." << row["stage"].get<std::string>()
               << ": " << (row["rerun_all_pass"].get<bool>() ? "all pass" : "failures") << "\n";
        }
      }
    }
    text << "\n";
  }

  // LZ-76 table.
  {
    json rows = json::array();
    std::vector<std::vector<std::string>> grid;
    for (const StageRef& s : stages) {
      const json& m = s.stage_json->at("measures");
      if (!m.contains("lz76")) continue;
      const json& lz = m["lz76"];
      json rel = OptionalNumber(lz, "relative_to_seed");
      rows.push_back({{"run", s.run}, {"label", s.label}, {"stage", s.stage}, {"C", lz.at("C")},
                      {"length", lz.at("input_length")}, {"normalized", lz.at("normalized")},
                      {"relative_to_seed", rel}});
      grid.push_back({RowName(s, with_run), std::to_string(lz.at("input_length").get<std::size_t>()),
                      std::to_string(lz.at("C").get<std::size_t>()), Fixed(lz.at("normalized").get<double>(), 4),
                      rel.is_null() ? "absent" : Fixed(rel.get<double>(), 4)});
    }
    result.tables["lz76"] = {{"columns", {"C", "length", "normalized", "relative_to_seed"}}, {"rows", rows}};
    text << "LZ-76 complexity\n"
         << RenderGrid({"stream", "bits", "C", "normalized", "relative"}, grid) << "\n";
  }

  // Borel normality grid.
  {
    json rows = json::array();
    std::vector<std::vector<std::string>> grid;
    std::size_t max_level = 0;
    for (const StageRef& s : stages) {
      const json& m = s.stage_json->at("measures");
      if (!m.contains("borel")) continue;
      json levels = json::array();
      std::vector<std::string> cells{RowName(s, with_run)};
      for (const json& l : m["borel"].at("levels")) {
        if (!l.at("applicable").get<bool>()) {
          levels.push_back(nullptr);
          cells.push_back("-");
        } else {
          const bool pass = l.at("pass").get<bool>();
          levels.push_back(pass ? 1 : 0);
          cells.push_back(pass ? "1" : "0");
        }
      }
      max_level = std::max(max_level, levels.size());
      rows.push_back({{"run", s.run}, {"label", s.label}, {"stage", s.stage}, {"levels", std::move(levels)}});
      grid.push_back(std::move(cells));
    }
    std::vector<std::string> header{"stream"};
    json columns = json::array();
    for (std::size_t m = 1; m <= max_level; ++m) {
      header.push_back("m=" + std::to_string(m));
      columns.push_back(m);
    }
    result.tables["borel"] = {{"columns", columns}, {"rows", rows}};
    text << "Borel normality (1 pass, 0 fail)\n" << RenderGrid(header, grid) << "\n";
  }

  // Next-byte prediction.
  {
    std::map<std::pair<std::string, std::string>, const PredictionReport*> by_key;
    for (const PredictionReport& p : predictions) by_key[{p.source_label, p.stage}] = &p;
    std::set<std::pair<std::string, std::string>> matched;
    json rows = json::array();
    std::vector<std::vector<std::string>> grid;
    auto add = [&](const std::string& run, const std::string& label, const std::string& stage,
                   const std::string& row_name) {
      auto it = by_key.find({label, stage});
      const PredictionReport* p = it == by_key.end() ? nullptr : it->second;
      if (p) matched.insert({label, stage});
      rows.push_back({{"run", run.empty() ? json(nullptr) : json(run)}, {"label", label}, {"stage", stage},
                      {"p_ml_percent", p ? json(p->p_ml_percent) : json(nullptr)},
                      {"p_g_percent", kGuessPercent},
                      {"ci95", p ? json(p->ci95) : json(nullptr)}});
      grid.push_back({row_name, p ? Fixed(p->p_ml_percent, 3) : "absent", Fixed(kGuessPercent, 6),
                      p ? "[" + Fixed(p->ci95[0], 3) + ", " + Fixed(p->ci95[1], 3) + "]" : "absent"});
    };
    for (const StageRef& s : stages) {
      if (s.stage_json->contains("dataset")) add(s.run, s.label, s.stage, RowName(s, with_run));
    }
    for (const PredictionReport& p : predictions) {
      if (!matched.count({p.source_label, p.stage})) {
        add("", p.source_label, p.stage, p.source_label + "." + p.stage);
      }
    }
    result.tables["prediction"] = {{"columns", {"p_ml_percent", "p_g_percent", "ci95"}}, {"rows", rows}};
    text << "Next-byte prediction (percent)\n"
         << RenderGrid({"stream", "P_ml", "P_g", "ci95"}, grid);
  }
  result.text = text.str();
  return result;
}

std::string RenderRunSummary(const json& report) {
  std::ostringstream out;
  const json& tool = report.value("tool", json::object());
  out << "randbench " << tool.value("version", std::string("?")) << "\n";
  out << "config sha256 " << report.value("config_sha256", std::string("?")) << "\n";
  if (report.contains("config") && report["config"].contains("preset") && !report["config"]["preset"].is_null()) {
    out << "preset " << report["config"]["preset"].get<std::string>() << "\n";
  }
  out << "started " << report.value("started_utc", std::string("?")) << ", finished "
      << report.value("finished_utc", std::string("?")) << "\n";
  if (report.contains("lz76_reference")) {
    out << "LZ-76 reference " << report["lz76_reference"].value("label", std::string()) << " = "
        << Fixed(report["lz76_reference"].value("normalized", 0.0), 5) << "\n";
  }
  out << "stage errors " << report.value("error_count", 0) << "\n";
  for (const json& src : report.at("sources")) {
    const std::string label = src.at("label").get<std::string>();
    for (const auto& [where, msg] : src.at("errors").items()) {
      out << "  " << label << " " << where << ": " << msg.get<std::string>() << "\n";
    }
    for (const json& st : src.at("stages")) {
      const std::string stage = st.at("stage").get<std::string>();
      for (const auto& [where, msg] : st.at("errors").items()) {
        out << "  " << label << "." << stage << " " << where << ": " << msg.get<std::string>() << "\n";
      }
      if (st.contains("extraction")) {
        const json& e = st["extraction"];
        out << "  " << label << "." << stage << " extracted " << e.at("input_bits").get<std::size_t>()
            << " -> " << e.at("emitted_bits").get<std::size_t>() << " bits (n=" << e.at("n").get<std::size_t>()
            << ", m=" << e.at("m").get<std::size_t>() << ", " << e.at("blocks_processed").get<std::size_t>()
            << " blocks, tail " << e.at("discarded_tail_bits").get<std::size_t>() << ")\n";
      }
      if (st.contains("measures") && st["measures"].contains("sts") && st["measures"]["sts"].contains("rerun")) {
        const json& r = st["measures"]["sts"]["rerun"];
        out << "  " << label << "." << stage << " battery rerun with extractor seed_value "
            << r.at("extractor_seed_value").get<std::uint32_t>() << ": "
            << (r.at("all_pass").get<bool>() ? "all pass" : "failures") << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace randbench::bench
