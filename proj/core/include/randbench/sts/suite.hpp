// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "randbench/bitstream.hpp"
#include "randbench/sts/tests.hpp"

namespace randbench::sts {

struct StreamInfo {
  std::string label;
  std::size_t length = 0;
  bool post_processed = false;
};

struct SuiteReport {
  StreamInfo stream;
  std::vector<TestResult> results;  // always in AllTests() order
  bool all_pass = false;            // every applicable test passes
};

// Runs all fifteen tests. Per-test exceptions are captured as error results
// (applicable = false, error = true). With threads > 1 tests run
// concurrently; the report is identical either way.
SuiteReport RunSuite(const BitStream& stream, const StsProfile& profile = {},
                     StreamInfo info = {}, unsigned threads = 1);

enum class Cell { kPass, kFail, kInapplicable, kError };
Cell CellOf(const TestResult& result);

struct PassMatrix {
  std::vector<std::string> rows;     // stream labels
  std::vector<std::string> columns;  // test names
  std::vector<std::vector<Cell>> cells;
  std::vector<std::vector<std::vector<double>>> p_values;
};

// Sources x tests grid. Throws ParameterError for an empty list.
PassMatrix BuildMatrix(const std::vector<SuiteReport>& reports);

// Monospace rendering: "P" pass, "F" fail, "-" not applicable, "E" error.
std::string RenderMatrix(const PassMatrix& matrix);

// Multi-sequence proportion mode (calibration only).
struct ProportionRow {
  TestId test = TestId::kFrequency;
  std::size_t sequences = 0;  // applicable sequences
  std::size_t passed = 0;
  double proportion = 0.0;
  double lower_bound = 0.0;  // p_hat - 3 sqrt(p_hat (1 - p_hat) / s)
  double uniformity_p = 0.0;  // chi-square over ten p-value bins
};

std::vector<ProportionRow> RunProportion(const std::vector<BitStream>& streams,
                                         const StsProfile& profile = {});

}  // namespace randbench::sts
