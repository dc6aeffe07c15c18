// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bench/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "randbench/bitstream_io.hpp"
#include "randbench/error.hpp"

namespace randbench::bench {
namespace fs = std::filesystem;
using nlohmann::json;

std::size_t PairCount(std::size_t bytes, std::size_t window, std::size_t stride) {
  if (stride == 0) throw ParameterError("dataset stride must be positive");
  if (bytes <= window) return 0;
  return (bytes - window - 1) / stride + 1;
}

std::size_t TrainCount(std::size_t pairs, double split) {
  return static_cast<std::size_t>(std::floor(split * static_cast<double>(pairs) + 1e-9));
}

DatasetDescriptor ExportPredictorDataset(const BitStream& stream, const std::string& label,
                                         const std::string& stage,
                                         const PredictorExportConfig& settings,
                                         const fs::path& dir, const LogFn& log) {
  ByteView view = ToBytes(stream);
  DatasetDescriptor d;
  d.source_label = label;
  d.stage = stage;
  d.post_processed = stage != "pre";
  d.bit_length = stream.size();
  d.byte_count = view.bytes.size();
  d.remainder_bits = view.remainder_bits;
  d.window = settings.window;
  d.stride = settings.stride;
  d.split = settings.split;
  d.shuffle_seed = settings.shuffle_seed;
  d.pair_count = PairCount(d.byte_count, d.window, d.stride);
  d.train_count = TrainCount(d.pair_count, d.split);
  d.test_count = d.pair_count - d.train_count;
  d.sha256 = Sha256Hex(view.bytes);

  const std::string stem = label + "." + stage;
  d.payload_file = stem + ".bytes";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / d.payload_file, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(view.bytes.data()),
              static_cast<std::streamsize>(view.bytes.size()));
    if (!out) throw IoError("cannot write " + (dir / d.payload_file).string());
  }
  {
    std::ofstream out(dir / (stem + ".json"), std::ios::trunc);
    out << ToJson(d).dump(2) << "\n";
    if (!out) throw IoError("cannot write " + (dir / (stem + ".json")).string());
  }
  if (log && d.remainder_bits != 0) {
    log(stem + ": dropped " + std::to_string(d.remainder_bits) + " trailing bit(s)");
  }
  if (log && d.pair_count == 0) {
    log(stem + ": " + std::to_string(d.byte_count) + " byte(s) is too short for a window of " +
        std::to_string(d.window));
  }
  return d;
}

json ToJson(const DatasetDescriptor& d) {
  return {
      {"format", kDatasetFormat},
      {"version", kDatasetVersion},
      {"source_label", d.source_label},
      {"stage", d.stage},
      {"post_processed", d.post_processed},
      {"bit_length", d.bit_length},
      {"byte_count", d.byte_count},
      {"remainder_bits", d.remainder_bits},
      {"bit_order", "msb-first"},
      {"window", d.window},
      {"stride", d.stride},
      {"split", d.split},
      {"shuffle_seed", d.shuffle_seed},
      {"pair_count", d.pair_count},
      {"train_count", d.train_count},
      {"test_count", d.test_count},
      {"payload", d.payload_file},
      {"sha256", d.sha256},
  };
}

DatasetDescriptor DatasetDescriptorFromJson(const json& j) {
  try {
    if (j.at("format").get<std::string>() != kDatasetFormat) {
      throw FormatError("not a predictor dataset descriptor");
    }
    DatasetDescriptor d;
    d.source_label = j.at("source_label").get<std::string>();
    d.stage = j.at("stage").get<std::string>();
    d.post_processed = j.at("post_processed").get<bool>();
    d.bit_length = j.at("bit_length").get<std::size_t>();
    d.byte_count = j.at("byte_count").get<std::size_t>();
    d.remainder_bits = j.at("remainder_bits").get<std::size_t>();
    d.window = j.at("window").get<std::size_t>();
    d.stride = j.at("stride").get<std::size_t>();
    d.split = j.at("split").get<double>();
    d.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
    d.pair_count = j.at("pair_count").get<std::size_t>();
    d.train_count = j.at("train_count").get<std::size_t>();
    d.test_count = j.at("test_count").get<std::size_t>();
    d.payload_file = j.at("payload").get<std::string>();
    d.sha256 = j.at("sha256").get<std::string>();
    return d;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed dataset descriptor: ") + e.what());
  }
}

PredictionReport ParsePredictionReport(const json& j) {
  PredictionReport r;
  try {
    r.p_ml_percent = j.at("p_ml_percent").get<double>();
    r.p_g_percent = j.at("p_g_percent").get<double>();
    const json& ci = j.at("ci95");
    if (!ci.is_array() || ci.size() != 2) throw FormatError("ci95 must be [low, high]");
    r.ci95 = {ci[0].get<double>(), ci[1].get<double>()};
    r.epochs_run = j.at("epochs_run").get<int>();
    r.hyper = j.value("hyper", json::object());
    const json& ds = j.at("dataset");
    r.source_label = ds.at("source_label").get<std::string>();
    r.stage = ds.at("stage").get<std::string>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed prediction report: ") + e.what());
  }
  if (!(r.p_ml_percent >= 0.0 && r.p_ml_percent <= 100.0)) {
    throw FormatError("p_ml_percent outside [0, 100]");
  }
  if (std::abs(r.p_g_percent - kGuessPercent) > 1e-9) {
    throw FormatError("p_g_percent must be 0.390625");
  }
  if (!(r.ci95[0] <= r.ci95[1])) throw FormatError("ci95 low exceeds high");
  if (r.epochs_run < 0) throw FormatError("negative epochs_run");
  r.document = j;
  return r;
}

PredictionReport LoadPredictionReport(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw FormatError(path.string() + ": not valid JSON");
  try {
    return ParsePredictionReport(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<PredictionReport> LoadPredictionReports(const fs::path& dir,
                                                    std::vector<std::string>* skipped) {
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PredictionReport> out;
  for (const fs::path& f : files) {
    try {
      out.push_back(LoadPredictionReport(f));
    } catch (const Error& e) {
      if (skipped) skipped->push_back(e.what());
    }
  }
  return out;
}

}  // namespace randbench::bench
