// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randbench/bench/aggregate.hpp"
#include "randbench/bench/config.hpp"
#include "randbench/bench/dataset.hpp"
#include "randbench/bench/pipeline.hpp"
#include "randbench/error.hpp"

namespace fs = std::filesystem;
namespace rb = randbench::bench;

namespace {

constexpr int kExitStageFailure = 1;
constexpr int kExitConfigError = 2;

void Log(std::string_view msg) { std::cerr << "[randbench] " << msg << "\n"; }

std::vector<rb::NamedReport> LoadRuns(const std::vector<std::string>& dirs) {
  std::vector<rb::NamedReport> runs;
  for (const std::string& d : dirs) {
    fs::path p(d);
    std::string name = p.filename().string();
    if (name.empty()) name = p.parent_path().filename().string();
    runs.push_back({name, rb::LoadRunReport(p)});
  }
  return runs;
}

int Validate(const std::string& config, const std::optional<std::string>& preset) {
  rb::RunConfig cfg = preset ? rb::ResolveConfig(fs::path(config), preset) : rb::ValidateConfig(config);
  std::cout << rb::ConfigToJson(cfg).dump(2) << "\n";
  return 0;
}

int Run(const std::optional<std::string>& config, const std::optional<std::string>& preset,
        const std::optional<std::string>& out) {
  std::optional<fs::path> path;
  if (config) path = *config;
  rb::RunConfig cfg = rb::ResolveConfig(path, preset);
  if (out) {
    cfg.output_dir = *out;
    cfg.provenance["run.output_dir"] = "command line";
  }
  rb::RunOutcome outcome = rb::RunPipeline(cfg, Log);
  rb::AggregateResult tables = rb::Aggregate({{cfg.output_dir.filename().string(), outcome.report}});
  std::cout << rb::RenderRunSummary(outcome.report) << "\n" << tables.text;
  Log("report written to " + outcome.report_path.string());
  return outcome.exit_code;
}

int Export(const std::string& run_dir, const std::string& label, const std::string& stage) {
  rb::DatasetDescriptor d = rb::ExportFromRun(run_dir, label, stage, Log);
  std::cout << (fs::path(run_dir) / "datasets" / (label + "." + stage + ".json")).string() << "\n"
            << d.byte_count << " bytes, " << d.remainder_bits << " remainder bit(s) dropped, "
            << d.pair_count << " windows (" << d.train_count << " train / " << d.test_count << " test)\n";
  return 0;
}

int AggregateCmd(const std::vector<std::string>& dirs, const std::optional<std::string>& predictions,
                 const std::optional<std::string>& json_out) {
  std::vector<rb::PredictionReport> reports;
  if (predictions) {
    std::vector<std::string> skipped;
    reports = rb::LoadPredictionReports(*predictions, &skipped);
    for (const std::string& s : skipped) Log("skipped " + s);
  }
  rb::AggregateResult result = rb::Aggregate(LoadRuns(dirs), reports);
  std::cout << result.text;
  if (json_out) {
    std::ofstream out(*json_out, std::ios::trunc);
    out << result.tables.dump(2) << "\n";
    if (!out) throw randbench::IoError("cannot write " + *json_out);
  }
  return 0;
}

int Report(const std::string& run_dir) {
  std::vector<rb::NamedReport> runs = LoadRuns({run_dir});
  std::cout << rb::RenderRunSummary(runs.front().report) << "\n" << rb::Aggregate(runs).text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randbench: randomness test bench (sources, Toeplitz extraction, measures)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rb::ToolVersion()));

  std::string config, run_dir, label, stage;
  std::optional<std::string> preset, out, run_config, predictions, json_out;
  std::vector<std::string> run_dirs;

  auto* validate = app.add_subcommand("validate", "Check a config file and print the resolved settings");
  validate->add_option("config", config, "INI config file")->required();
  validate->add_option("--preset", preset, "Overlay the config on a preset (case1..case6)");

  auto* run = app.add_subcommand("run", "Run the pipeline and write a run directory");
  run->add_option("config", run_config, "INI config file (optional with --preset)");
  run->add_option("--preset", preset, "Experiment preset case1..case6");
  run->add_option("--out", out, "Output directory (overrides the config)");

  auto* exp = app.add_subcommand("export", "Export a predictor dataset from a finished run");
  exp->add_option("run-dir", run_dir, "Run directory")->required();
  exp->add_option("label", label, "Source label")->required();
  exp->add_option("stage", stage, "Stage: pre, post or post@<bits>")->required();

  auto* agg = app.add_subcommand("aggregate", "Comparison tables over one or more runs");
  agg->add_option("run-dirs", run_dirs, "Run directories")->required();
  agg->add_option("--with-predictions", predictions, "Directory of prediction report JSON files");
  agg->add_option("--json", json_out, "Also write the tables as JSON");

  auto* rep = app.add_subcommand("report", "Render the matrices and tables of one run");
  rep->add_option("run-dir", run_dir, "Run directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return Validate(config, preset);
    if (*run) {
      if (!run_config && !preset) throw randbench::ConfigError("run needs a config file or --preset");
      return Run(run_config, preset, out);
    }
    if (*exp) return Export(run_dir, label, stage);
    if (*agg) return AggregateCmd(run_dirs, predictions, json_out);
    if (*rep) return Report(run_dir);
  } catch (const randbench::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStageFailure;
  }
  return 0;
}
