// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "randbench/bench/dataset.hpp"

namespace randbench::bench {

struct NamedReport {
  std::string run;  // usually the run directory name
  nlohmann::json report;
};

struct AggregateResult {
  // {"sts": ..., "lz76": ..., "borel": ..., "prediction": ...}; each has
  // "columns" and "rows".
  nlohmann::json tables;
  std::string text;  // monospace rendering of the same four tables
};

// Comparison tables over one or more run reports. Prediction reports are
// matched to exported datasets by (source label, stage); a stage without one
// shows P_ml as absent. Throws ParameterError for an empty run list.
AggregateResult Aggregate(const std::vector<NamedReport>& runs,
                          const std::vector<PredictionReport>& predictions = {});

// Header lines for a single run: tool, config hash, errors, extraction
// geometry and any battery reruns.
std::string RenderRunSummary(const nlohmann::json& report);

}  // namespace randbench::bench
