// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bench/pipeline.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>
#include <vector>

#include "randbench/bench/report_json.hpp"
#include "randbench/bitstream_io.hpp"
#include "randbench/borel.hpp"
#include "randbench/error.hpp"
#include "randbench/sts/suite.hpp"
#include "randbench/toeplitz.hpp"

#ifndef RANDBENCH_VERSION
#define RANDBENCH_VERSION "unknown"
#endif

namespace randbench::bench {
namespace fs = std::filesystem;
using nlohmann::json;

std::string_view ToolVersion() { return RANDBENCH_VERSION; }

namespace {

struct Stage {
  std::string name;
  bool post = false;
  std::optional<BitStream> bits;
  json extraction = nullptr;
  std::string failure;  // upstream failure that left the stage without bits
};

bool MeasuredStage(const MeasuresConfig& m, bool post) { return post ? m.post : m.pre; }
bool ExportedStage(const PredictorExportConfig& x, bool post) {
  return x.enabled && (post ? x.post : x.pre);
}

ToeplitzSpec MakeSpec(const ExtractorConfig& e, std::size_t m, std::uint32_t seed_value) {
  if (e.explicit_seed) return ToeplitzSpec(e.n, m, *e.explicit_seed, "config");
  return ToeplitzSpec::FromMt19937(e.n, m, seed_value);
}

class SourceRunner {
 public:
  SourceRunner(const RunConfig& cfg, const SourceSpec& spec,
               const std::optional<SeedReference>& lz_ref, const LogFn& log)
      : cfg_(cfg), spec_(spec), lz_ref_(lz_ref), log_(log) {}

  json Run() {
    json out = {{"label", spec_.label}, {"kind", SourceKindName(spec_.kind())}, {"errors", json::object()}};
    std::vector<Stage> stages;
    Stage pre{"pre", false, std::nullopt, nullptr, {}};
    try {
      pre.bits = Generate(spec_);
      out["raw"] = {{"bits", pre.bits->size()}, {"sha256", Sha256Hex(*pre.bits)}};
      Log("generated " + std::to_string(pre.bits->size()) + " bits");
    } catch (const std::exception& e) {
      out["errors"]["generate"] = e.what();
      ++errors_;
      pre.failure = std::string("generation failed: ") + e.what();
      Log(pre.failure);
    }
    stages.push_back(std::move(pre));
    if (cfg_.extractor.enabled) Extract(stages, out);

    raw_ = stages.front().bits ? &*stages.front().bits : nullptr;
    json stage_json = json::array();
    for (Stage& s : stages) stage_json.push_back(RunStage(s));
    out["stages"] = std::move(stage_json);
    return out;
  }

  std::size_t errors() const { return errors_; }

 private:
  void Log(const std::string& msg) const {
    if (log_) log_(spec_.label + ": " + msg);
  }

  void Extract(std::vector<Stage>& stages, json& out) {
    const ExtractorConfig& e = cfg_.extractor;
    // Copied: `stages` grows below.
    const std::optional<BitStream> raw = stages.front().bits;
    std::vector<std::pair<std::string, std::optional<std::size_t>>> targets;
    if (e.sweep_targets.empty()) {
      targets.emplace_back("post", e.target_bits);
    } else {
      for (std::size_t t : e.sweep_targets) targets.emplace_back("post@" + std::to_string(t), t);
    }
    for (const auto& [name, target] : targets) {
      Stage stage{name, true, std::nullopt, nullptr, {}};
      if (!raw) {
        stage.failure = stages.front().failure;
      } else {
        try {
          std::size_t m = e.m;
          if (!e.sweep_targets.empty()) {
            const std::size_t blocks = raw->size() / e.n;
            if (blocks == 0) throw InputError("stream shorter than one extractor block");
            m = (*target + blocks - 1) / blocks;
            if (m >= e.n) {
              throw ParameterError("sweep target " + std::to_string(*target) + " needs m = " +
                                   std::to_string(m) + " >= n");
            }
          }
          ExtractionResult r = ToeplitzHasher(MakeSpec(e, m, e.seed_value)).HashStream(*raw, target);
          stage.extraction = ToJson(r.report);
          stage.bits = std::move(r.output);
          Log(name + ": extracted " + std::to_string(stage.bits->size()) + " bits");
        } catch (const std::exception& ex) {
          out["errors"]["extract:" + name] = ex.what();
          ++errors_;
          stage.failure = std::string("extraction failed: ") + ex.what();
          Log(stage.failure);
        }
      }
      stages.push_back(std::move(stage));
    }
  }

  json RunStage(const Stage& s) {
    json j = {{"stage", s.name}, {"post_processed", s.post}, {"errors", json::object()}, {"measures", json::object()}};
    if (!s.extraction.is_null()) j["extraction"] = s.extraction;
    const bool measured = MeasuredStage(cfg_.measures, s.post);
    if (!s.bits) {
      // Keep the report complete: every enabled measure gets an explicit entry.
      if (measured) {
        for (Measure m : cfg_.measures.enabled) j["errors"][std::string(MeasureName(m))] = "not run: " + s.failure;
      }
      return j;
    }
    const BitStream& bits = *s.bits;
    j["length"] = bits.size();
    j["sha256"] = Sha256Hex(bits);
    const std::string rel = "streams/" + spec_.label + "." + s.name + ".bin";
    try {
      WriteStream(bits, cfg_.output_dir / rel, FileFormat::kPacked, spec_.label + "." + s.name);
      j["stream"] = rel;
    } catch (const std::exception& e) {
      j["errors"]["write"] = e.what();
      ++errors_;
    }
    if (measured) {
      for (Measure m : cfg_.measures.enabled) {
        const std::string name(MeasureName(m));
        try {
          j["measures"][name] = RunMeasure(m, s, bits);
        } catch (const std::exception& e) {
          j["errors"][name] = e.what();
          ++errors_;
          Log(s.name + ": " + name + " failed: " + e.what());
        }
      }
    }
    if (ExportedStage(cfg_.predictor_export, s.post)) {
      try {
        DatasetDescriptor d = ExportPredictorDataset(bits, spec_.label, s.name, cfg_.predictor_export,
                                                     cfg_.output_dir / "datasets",
                                                     [this](std::string_view msg) { Log(std::string(msg)); });
        json dj = ToJson(d);
        dj["descriptor"] = "datasets/" + spec_.label + "." + s.name + ".json";
        j["dataset"] = std::move(dj);
      } catch (const std::exception& e) {
        j["errors"]["export"] = e.what();
        ++errors_;
      }
    }
    return j;
  }

  json RunMeasure(Measure m, const Stage& s, const BitStream& bits) {
    switch (m) {
      case Measure::kSts: {
        sts::SuiteReport suite =
            sts::RunSuite(bits, cfg_.sts, {spec_.label, bits.size(), s.post}, cfg_.sts_threads);
        Log(s.name + ": sts " + (suite.all_pass ? "all pass" : "failures"));
        json j = ToJson(suite);
        if (s.post && !suite.all_pass && cfg_.extractor.rerun_on_sts_failure && s.name == "post") {
          j["rerun"] = Rerun();
        }
        return j;
      }
      case Measure::kLz76:
        return ToJson(KolmogorovReport(bits, lz_ref_));
      case Measure::kBorel:
        return ToJson(BorelNormality(bits, cfg_.measures.borel_max_level));
    }
    throw Error("unknown measure");
  }

  // Second battery with the next extractor seed value; the headline result
  // is kept as is.
  json Rerun() {
    const ExtractorConfig& e = cfg_.extractor;
    const std::uint32_t seed = e.seed_value + 1;
    Log("post: rerunning sts with extractor seed_value " + std::to_string(seed));
    ExtractionResult r = ToeplitzHasher(MakeSpec(e, e.m, seed)).HashStream(*raw_, e.target_bits);
    sts::SuiteReport suite =
        sts::RunSuite(r.output, cfg_.sts, {spec_.label, r.output.size(), true}, cfg_.sts_threads);
    return {
        {"reason", "headline battery failed"},
        {"extractor_seed_value", seed},
        {"sha256", Sha256Hex(r.output)},
        {"all_pass", suite.all_pass},
        {"sts", ToJson(suite)},
    };
  }

  const RunConfig& cfg_;
  const SourceSpec& spec_;
  const std::optional<SeedReference>& lz_ref_;
  const LogFn& log_;
  const BitStream* raw_ = nullptr;
  std::size_t errors_ = 0;
};

json ReplayableConfig(const RunConfig& cfg) {
  json j = ConfigToJson(cfg);
  j.erase("output_dir");
  j.erase("provenance");
  return j;
}

}  // namespace

std::optional<SeedReference> RunLz76Reference(const RunConfig& cfg) {
  if (!cfg.measures.enabled.count(Measure::kLz76)) return std::nullopt;
  if (cfg.measures.lz76_reference == Lz76Reference::kRecorded) return RecordedMtSeedReference();
  std::size_t bits = cfg.measures.lz76_reference_bits.value_or(
      cfg.extractor.target_bits.value_or(kDefaultExtractedBits));
  return Mt19937SeedReference(cfg.extractor.seed_value, bits);
}

RunOutcome RunPipeline(const RunConfig& cfg, const LogFn& log) {
  std::mutex log_mutex;
  LogFn safe_log = [&](std::string_view msg) {
    if (!log) return;
    std::lock_guard lock(log_mutex);
    log(msg);
  };
  const std::string started = UtcTimestamp();
  fs::create_directories(cfg.output_dir / "streams");

  json report;
  report["tool"] = {{"name", "randbench"}, {"version", ToolVersion()}};
  report["started_utc"] = started;
  report["config"] = ConfigToJson(cfg);
  const std::string canonical = ReplayableConfig(cfg).dump();
  report["config_sha256"] = Sha256Hex(std::span(reinterpret_cast<const std::uint8_t*>(canonical.data()), canonical.size()));

  std::size_t errors = 0;
  std::optional<SeedReference> lz_ref;
  try {
    lz_ref = RunLz76Reference(cfg);
    if (lz_ref) {
      report["lz76_reference"] = {{"label", lz_ref->label}, {"normalized", lz_ref->normalized}};
    }
  } catch (const std::exception& e) {
    report["errors"]["lz76_reference"] = e.what();
    ++errors;
  }

  std::vector<json> results(cfg.sources.size());
  std::vector<std::size_t> source_errors(cfg.sources.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.sources.size(); i = next++) {
      SourceRunner runner(cfg, cfg.sources[i], lz_ref, safe_log);
      results[i] = runner.Run();
      source_errors[i] = runner.errors();
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(cfg.source_threads, cfg.sources.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t e : source_errors) errors += e;
  report["sources"] = std::move(results);
  report["finished_utc"] = UtcTimestamp();
  report["error_count"] = errors;
  RunOutcome outcome;
  outcome.error_count = errors;
  outcome.exit_code = errors == 0 ? 0 : 1;
  report["exit_code"] = outcome.exit_code;
  outcome.report_path = cfg.output_dir / "report.json";
  std::ofstream out(outcome.report_path, std::ios::trunc);
  out << report.dump(2) << "\n";
  if (!out) throw IoError("cannot write " + outcome.report_path.string());
  outcome.report = std::move(report);
  return outcome;
}

json LoadRunReport(const fs::path& run_dir) {
  const fs::path path = run_dir / "report.json";
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("sources")) throw FormatError(path.string() + ": not a run report");
  return j;
}

BitStream LoadRunStream(const fs::path& run_dir, const json& report, const std::string& label,
                        const std::string& stage) {
  std::string labels;
  for (const json& src : report.at("sources")) {
    labels += (labels.empty() ? "" : ", ") + src.at("label").get<std::string>();
    if (src.at("label") != label) continue;
    std::string stages;
    for (const json& st : src.at("stages")) {
      if (st.contains("stream")) stages += (stages.empty() ? "" : ", ") + st.at("stage").get<std::string>();
      if (st.at("stage") == stage && st.contains("stream")) {
        return ReadStream(run_dir / st.at("stream").get<std::string>(), FileFormat::kPacked);
      }
    }
    throw ParameterError("unknown stage '" + stage + "' for source '" + label + "' (available: " + stages + ")");
  }
  throw ParameterError("unknown source label '" + label + "' (available: " + labels + ")");
}

DatasetDescriptor ExportFromRun(const fs::path& run_dir, const std::string& label,
                                const std::string& stage, const LogFn& log) {
  json report = LoadRunReport(run_dir);
  BitStream bits = LoadRunStream(run_dir, report, label, stage);
  PredictorExportConfig settings;
  if (report.contains("config") && report["config"].contains("predictor_export")) {
    const json& x = report["config"]["predictor_export"];
    settings.window = x.value("window", settings.window);
    settings.stride = x.value("stride", settings.stride);
    settings.split = x.value("split", settings.split);
    settings.shuffle_seed = x.value("shuffle_seed", settings.shuffle_seed);
  }
  return ExportPredictorDataset(bits, label, stage, settings, run_dir / "datasets", log);
}

}  // namespace randbench::bench
