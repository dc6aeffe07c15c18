// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "randbench/bench/config.hpp"
#include "randbench/bitstream.hpp"

namespace randbench::bench {

inline constexpr std::string_view kDatasetFormat = "randbench-predictor-dataset";
inline constexpr int kDatasetVersion = 1;

// Descriptor written next to the byte payload for the external predictor.
// Window i covers bytes [i*stride, i*stride + window) and its target is the
// byte at i*stride + window.
struct DatasetDescriptor {
  std::string source_label;
  std::string stage;
  bool post_processed = false;
  std::size_t bit_length = 0;
  std::size_t byte_count = 0;
  std::size_t remainder_bits = 0;  // dropped trailing bits
  std::size_t window = 100;
  std::size_t stride = 1;
  double split = 0.8;
  std::uint64_t shuffle_seed = 7;
  std::size_t pair_count = 0;
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  std::string payload_file;  // relative to the descriptor
  std::string sha256;        // of the byte payload
};

// Number of (window, target) pairs in `bytes` bytes; zero if too short.
std::size_t PairCount(std::size_t bytes, std::size_t window, std::size_t stride);
// floor(split * pairs).
std::size_t TrainCount(std::size_t pairs, double split);

using LogFn = std::function<void(std::string_view)>;

// Writes <dir>/<label>.<stage>.bytes (MSB-first bytes, remainder dropped) and
// <label>.<stage>.json. A dropped remainder and a stream too short for one
// window are reported through `log`.
DatasetDescriptor ExportPredictorDataset(const BitStream& stream,
                                         const std::string& label,
                                         const std::string& stage,
                                         const PredictorExportConfig& settings,
                                         const std::filesystem::path& dir,
                                         const LogFn& log = {});

nlohmann::json ToJson(const DatasetDescriptor& d);
// Throws FormatError on a missing field or a foreign format tag.
DatasetDescriptor DatasetDescriptorFromJson(const nlohmann::json& j);

// Random-guess next-byte accuracy, 100/256 percent.
inline constexpr double kGuessPercent = 100.0 / 256.0;

// Result file produced by the external next-byte predictor.
struct PredictionReport {
  double p_ml_percent = 0.0;
  double p_g_percent = kGuessPercent;
  std::array<double, 2> ci95{};
  int epochs_run = 0;
  nlohmann::json hyper;
  std::string source_label;
  std::string stage;
  nlohmann::json document;  // as read
};

// Validates 0 <= p_ml <= 100, p_g == 100/256, ci95 = [lo, hi] with lo <= hi
// and a dataset object naming the source label and stage. Throws FormatError.
PredictionReport ParsePredictionReport(const nlohmann::json& j);
PredictionReport LoadPredictionReport(const std::filesystem::path& path);

// Every *.json in `dir` that parses as a prediction report; other files are
// skipped and described in `skipped`.
std::vector<PredictionReport> LoadPredictionReports(
    const std::filesystem::path& dir, std::vector<std::string>* skipped = nullptr);

}  // namespace randbench::bench
