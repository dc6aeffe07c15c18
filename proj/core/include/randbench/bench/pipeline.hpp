// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "randbench/bench/config.hpp"
#include "randbench/bench/dataset.hpp"
#include "randbench/lz76.hpp"

namespace randbench::bench {

std::string_view ToolVersion();

struct RunOutcome {
  nlohmann::json report;
  std::size_t error_count = 0;
  int exit_code = 0;  // 0 iff error_count == 0, otherwise 1
  std::filesystem::path report_path;
};

// Runs every source through generate -> extract -> measures -> export and
// writes streams/, datasets/ and report.json under cfg.output_dir. Stage
// failures are recorded in the report and do not stop other sources.
RunOutcome RunPipeline(const RunConfig& cfg, const LogFn& log = {});

// The single LZ-76 reference shared by all streams of a run, or nullopt when
// LZ-76 is not enabled.
std::optional<SeedReference> RunLz76Reference(const RunConfig& cfg);

// Reads <run_dir>/report.json. Throws IoError / FormatError.
nlohmann::json LoadRunReport(const std::filesystem::path& run_dir);

// Stream of one (label, stage) of a finished run. Throws ParameterError for
// an unknown label or stage, naming the available ones.
BitStream LoadRunStream(const std::filesystem::path& run_dir,
                        const nlohmann::json& report, const std::string& label,
                        const std::string& stage);

// Re-exports a predictor dataset from a finished run into <run_dir>/datasets
// using the run's recorded export settings.
DatasetDescriptor ExportFromRun(const std::filesystem::path& run_dir,
                                const std::string& label,
                                const std::string& stage, const LogFn& log = {});

}  // namespace randbench::bench
