// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "randbench/sources.hpp"
#include "randbench/sts/tests.hpp"

namespace randbench::bench {

inline constexpr std::size_t kDefaultRawBits = 5'000'000;
inline constexpr std::size_t kDefaultExtractedBits = 1'200'000;
inline constexpr std::size_t kDefaultBlockInput = 4000;
inline constexpr std::size_t kDefaultBlockOutput = 960;
inline constexpr std::uint32_t kDefaultExtractorSeed = 19937;

enum class Measure { kSts, kLz76, kBorel };
std::string_view MeasureName(Measure m);

enum class Lz76Reference { kMt19937, kRecorded };

struct ExtractorConfig {
  bool enabled = false;
  std::size_t n = kDefaultBlockInput;
  std::size_t m = kDefaultBlockOutput;
  // Exactly one of the two seed routes is used: MT19937 from seed_value, or
  // explicit seed bits (n + m - 1 of them).
  std::uint32_t seed_value = kDefaultExtractorSeed;
  std::optional<BitStream> explicit_seed;
  std::optional<std::size_t> target_bits = kDefaultExtractedBits;
  // Each sweep target T becomes a stage "post@T" hashed with
  // m_T = ceil(T / blocks); replaces the single "post" stage.
  std::vector<std::size_t> sweep_targets;
  // After a failing post-processed battery, re-extract with seed_value + 1 and
  // record the second battery next to the first.
  bool rerun_on_sts_failure = false;
};

struct MeasuresConfig {
  std::set<Measure> enabled;
  bool pre = true;
  bool post = true;
  unsigned borel_max_level = 4;
  Lz76Reference lz76_reference = Lz76Reference::kMt19937;
  // Length of the regenerated MT reference; defaults to the extractor target.
  std::optional<std::size_t> lz76_reference_bits;
};

struct PredictorExportConfig {
  bool enabled = false;
  bool pre = true;
  bool post = true;
  std::size_t window = 100;
  std::size_t stride = 1;
  double split = 0.8;
  std::uint64_t shuffle_seed = 7;
};

struct RunConfig {
  std::vector<SourceSpec> sources;
  ExtractorConfig extractor;
  MeasuresConfig measures;
  sts::StsProfile sts;
  unsigned sts_threads = 1;
  PredictorExportConfig predictor_export;
  std::filesystem::path output_dir = "run";
  unsigned source_threads = 1;  // sources processed concurrently
  std::string preset;
  // Where each resolved value came from: "config", "preset:<name>" or
  // "default".
  std::map<std::string, std::string> provenance;
};

// Parses INI text (';' comments, [section] headers, key = value lines).
// Sections: [run], [source.<label>], [extractor], [sts], [measures],
// [predictor_export]. Unknown sections or keys, bad values, duplicate labels
// and inconsistent extractor geometry raise ConfigError. Relative external
// paths resolve against `base_dir`.
RunConfig ParseConfig(std::string_view text,
                      const std::filesystem::path& base_dir = {});

// Reads and validates a config file; also checks that every referenced file
// exists. Throws ConfigError (IoError for an unreadable config).
RunConfig ValidateConfig(const std::filesystem::path& path);

// Built-in experiment presets case1..case6 (INI text).
std::vector<std::string> PresetNames();
std::string PresetText(std::string_view name);

// Preset overlaid with an optional user config: user keys replace preset
// keys; user sources are added to the preset's.
RunConfig ResolveConfig(std::optional<std::filesystem::path> config_path,
                        std::optional<std::string> preset);

// Canonical JSON echo of the resolved config.
nlohmann::json ConfigToJson(const RunConfig& config);

}  // namespace randbench::bench
