// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bench/report_json.hpp"

#include "randbench/error.hpp"

namespace randbench::bench {
using nlohmann::json;

namespace {

json Optional(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json ToJson(const sts::TestResult& r) {
  json j = {
      {"test", sts::TestName(r.test)},
      {"p_values", r.p_values},
      {"pass", r.pass},
      {"applicable", r.applicable},
      {"alpha", r.alpha},
      {"params_used", r.params_used},
  };
  if (!r.family_p_values.empty()) j["family_p_values"] = r.family_p_values;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.error) j["error"] = true;
  return j;
}

json ToJson(const sts::SuiteReport& report) {
  json results = json::array();
  for (const auto& r : report.results) results.push_back(ToJson(r));
  return {
      {"label", report.stream.label},
      {"length", report.stream.length},
      {"post_processed", report.stream.post_processed},
      {"all_pass", report.all_pass},
      {"results", std::move(results)},
  };
}

json ToJson(const Lz76Report& r) {
  return {
      {"C", r.phrase_count},
      {"input_length", r.input_length},
      {"normalized", r.normalized},
      {"relative_to_seed", Optional(r.relative_to_seed)},
      {"seed_normalized", Optional(r.seed_normalized)},
      {"seed_label", r.seed_label},
  };
}

json ToJson(const BorelReport& report) {
  json levels = json::array();
  for (const BorelLevel& l : report.levels) {
    json level = {
        {"m", l.m},
        {"applicable", l.applicable},
        {"word_count", l.word_count},
        {"max_deviation", l.max_deviation},
        {"bound", l.bound},
        {"pass", l.pass},
    };
    if (l.m <= 8) level["counts"] = l.counts;
    levels.push_back(std::move(level));
  }
  return {{"length", report.length}, {"all_pass", report.all_pass}, {"levels", std::move(levels)}};
}

json ToJson(const ExtractionReport& r) {
  return {
      {"input_bits", r.input_bits},
      {"output_bits", r.output_bits},
      {"emitted_bits", r.emitted_bits},
      {"blocks_processed", r.blocks_processed},
      {"discarded_tail_bits", r.discarded_tail_bits},
      {"compression_ratio", r.compression_ratio},
      {"n", r.block_input_bits},
      {"m", r.block_output_bits},
      {"seed_provenance", r.seed_provenance},
      {"seed_value", r.seed_value ? json(*r.seed_value) : json(nullptr)},
  };
}

sts::TestResult TestResultFromJson(const json& j) {
  try {
    sts::TestResult r;
    r.test = sts::ParseTestId(j.at("test").get<std::string>());
    for (const json& p : j.at("p_values")) r.p_values.push_back(p.is_null() ? 0.0 : p.get<double>());
    if (j.contains("family_p_values")) {
      for (const json& p : j["family_p_values"]) {
        r.family_p_values.push_back(p.is_null() ? 0.0 : p.get<double>());
      }
    }
    r.pass = j.at("pass").get<bool>();
    r.applicable = j.at("applicable").get<bool>();
    r.alpha = j.value("alpha", sts::kDefaultAlpha);
    if (j.contains("params_used")) {
      r.params_used = j["params_used"].get<std::map<std::string, std::int64_t>>();
    }
    r.note = j.value("note", std::string());
    r.error = j.value("error", false);
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed test result: ") + e.what());
  } catch (const ParameterError& e) {
    throw FormatError(std::string("malformed test result: ") + e.what());
  }
}

}  // namespace randbench::bench
