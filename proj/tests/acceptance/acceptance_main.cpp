// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Usage: randbench_acceptance <work-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "randbench/bench/aggregate.hpp"
#include "randbench/bench/config.hpp"
#include "randbench/bench/pipeline.hpp"
#include "randbench/bitstream_io.hpp"
#include "randbench/borel.hpp"
#include "randbench/lz76.hpp"
#include "randbench/sts/tests.hpp"
#include "randbench/toeplitz.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace randbench;

namespace {

// Pinned tolerances.
constexpr double kPValueTol = 1e-5;
constexpr double kLzRelativeLo = 0.98;
constexpr double kLzRelativeHi = 1.02;
constexpr int kExtractorInstances = 1000;
constexpr std::size_t kExtractorMaxDim = 64;
constexpr int kLinearityPairs = 1000;
constexpr int kLz76Streams = 500;
constexpr std::size_t kLz76MaxLength = 4096;
constexpr unsigned kBorelLevels = 4;

struct Check {
  bool pass;
  std::string detail;
};

int failures = 0;

void Report(const std::string& name, const std::function<Check()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    c = fn();
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.pass) ++failures;
  std::printf("%s %s: %s (%.1fs)\n", c.pass ? "PASS" : "FAIL", name.c_str(), c.detail.c_str(), secs);
  std::fflush(stdout);
}

// An externally produced dataset for the ingest path: a packed file of
// std::mt19937_64 output with its descriptor.
SourceSpec IngestedSource(const fs::path& work) {
  const fs::path path = work / "ingested.bin";
  std::mt19937_64 rng(0x9e37);
  WriteStream(testing::RandomStream(rng, bench::kDefaultRawBits), path, FileFormat::kPacked);
  return {"ingested", ExternalSource{path, FileFormat::kPacked}, 0};
}

json RunPreset(const fs::path& work, const std::string& preset, const std::string& dir,
               bool with_ingested = false) {
  bench::RunConfig cfg = bench::ResolveConfig(std::nullopt, preset);
  if (with_ingested) cfg.sources.push_back(IngestedSource(work));
  cfg.output_dir = work / dir;
  fs::remove_all(cfg.output_dir);
  bench::RunOutcome out = bench::RunPipeline(cfg);
  if (out.exit_code != 0) {
    throw std::runtime_error(preset + " run exited " + std::to_string(out.exit_code) + " with " +
                             std::to_string(out.error_count) + " errors");
  }
  return out.report;
}

const json& Stage(const json& source, const std::string& name) {
  for (const json& s : source.at("stages")) {
    if (s.at("stage") == name) return s;
  }
  throw std::runtime_error(source.at("label").get<std::string>() + " has no stage " + name);
}

std::vector<std::string> FailedTests(const json& sts) {
  std::vector<std::string> failed;
  for (const json& r : sts.at("results")) {
    if (r.at("applicable").get<bool>() && !r.at("pass").get<bool>()) failed.push_back(r.at("test"));
  }
  return failed;
}

std::string Join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s.empty() ? "none" : s;
}

BitStream Xor(const BitStream& a, const BitStream& b) {
  std::vector<std::uint8_t> x = a.Unpack(), y = b.Unpack();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= y[i];
  return BitStream::FromBits(x);
}

Check OraclePoints() {
  const auto freq = testing::ToBits("1011010101");
  const auto runs = testing::ToBits("1001101011");
  const auto block = testing::ToBits("0110011010");
  struct Point {
    const char* name;
    double got, expected, oracle;
  } points[] = {
      {"frequency", sts::FrequencyP(freq), 0.527089, oracle::Frequency(freq)},
      {"block_frequency", sts::BlockFrequencyP(block, 3), 0.801252, oracle::BlockFrequency(block, 3)},
      {"runs", sts::RunsP(runs), 0.147232, oracle::Runs(runs)},
  };
  bool ok = true;
  std::ostringstream d;
  for (const Point& p : points) {
    const bool good = std::abs(p.got - p.expected) <= kPValueTol && std::abs(p.got - p.oracle) <= kPValueTol;
    ok = ok && good;
    d << p.name << "=" << p.got << " ";
  }
  d << "tol " << kPValueTol;
  return {ok, d.str()};
}

Check CaseOne(const fs::path& work) {
  const json report = RunPreset(work, "case1", "case1");
  bool ok = true;
  std::ostringstream d;
  for (const json& src : report.at("sources")) {
    const json& sts = Stage(src, "pre").at("measures").at("sts");
    const std::vector<std::string> failed = FailedTests(sts);
    const std::string kind = src.at("kind");
    if (kind == "chacha20") ok = ok && failed.empty();
    if (kind == "lcg") ok = ok && !failed.empty();
    d << src.at("label").get<std::string>() << " failed=" << Join(failed) << "; ";
  }
  return {ok, d.str()};
}

Check CaseTwo(const fs::path& work, json& report) {
  report = RunPreset(work, "case2", "case2", true);
  bool ok = true;
  std::ostringstream d;
  for (const json& src : report.at("sources")) {
    const json& sts = Stage(src, "post").at("measures").at("sts");
    bool pass = sts.at("all_pass").get<bool>();
    d << src.at("label").get<std::string>() << " failed=" << Join(FailedTests(sts));
    if (!pass && sts.contains("rerun")) {
      pass = sts["rerun"].at("all_pass").get<bool>();
      d << " rerun(seed " << sts["rerun"].at("extractor_seed_value") << ")=" << (pass ? "pass" : "fail");
    }
    d << "; ";
    ok = ok && pass;
  }
  return {ok, d.str()};
}

Check CaseFive(const fs::path& work) {
  const json report = RunPreset(work, "case5", "case5");
  bool ok = true;
  std::ostringstream d;
  d.precision(4);
  double lo = 1e9, hi = -1e9;
  for (const json& src : report.at("sources")) {
    const double pre = Stage(src, "pre").at("measures").at("lz76").at("relative_to_seed");
    const double post = Stage(src, "post").at("measures").at("lz76").at("relative_to_seed");
    lo = std::min(lo, post);
    hi = std::max(hi, post);
    ok = ok && post >= kLzRelativeLo && post <= kLzRelativeHi;
    if (src.at("kind") == "lcg" && !(pre < post)) {
      ok = false;
      d << src.at("label").get<std::string>() << " pre " << pre << " >= post " << post << "; ";
    }
  }
  d << "post relative in [" << lo << ", " << hi << "], band [" << kLzRelativeLo << ", " << kLzRelativeHi
    << "], pre < post for every lcg";
  return {ok, d.str()};
}

bool LevelsPass(const json& borel, unsigned upto) {
  for (const json& l : borel.at("levels")) {
    if (l.at("m").get<unsigned>() <= upto && !(l.at("applicable").get<bool>() && l.at("pass").get<bool>())) {
      return false;
    }
  }
  return true;
}

Check CaseSix(const fs::path& work) {
  const json report = RunPreset(work, "case6", "case6");
  bool ok = true;
  std::ostringstream d;
  std::size_t post_sources = 0;
  for (const json& src : report.at("sources")) {
    const bool post = LevelsPass(Stage(src, "post").at("measures").at("borel"), kBorelLevels);
    ok = ok && post;
    ++post_sources;
    if (!post) d << src.at("label").get<std::string>() << " post fails; ";
    if (src.at("kind") == "chacha20") {
      const bool pre = LevelsPass(Stage(src, "pre").at("measures").at("borel"), kBorelLevels);
      ok = ok && pre;
      d << "raw chacha20 " << (pre ? "passes" : "fails") << "; ";
    }
  }
  d << post_sources << " post streams checked at m=1.." << kBorelLevels << "; ";

  const BorelReport zeros = BorelNormality(BitStream::FromBits(std::vector<std::uint8_t>(1024, 0)), 1);
  const BorelReport alt = BorelNormality(FromAscii("0101010101010101"), 2);
  const bool degenerate = !zeros.all_pass && alt.levels[0].pass && !alt.levels[1].pass;
  ok = ok && degenerate;
  d << "all-zeros m=1 " << (zeros.all_pass ? "passes" : "fails") << ", (01)^8 m=1 "
    << (alt.levels[0].pass ? "passes" : "fails") << " m=2 " << (alt.levels[1].pass ? "passes" : "fails");
  return {ok, d.str()};
}

Check ExtractorOracle() {
  std::mt19937_64 rng(0x7e57);
  for (int i = 0; i < kExtractorInstances; ++i) {
    const std::size_t n = 2 + rng() % (kExtractorMaxDim - 1);
    const std::size_t m = 1 + rng() % std::min(n - 1, kExtractorMaxDim);
    const BitStream seed = testing::RandomStream(rng, n + m - 1);
    const BitStream x = testing::RandomStream(rng, n);
    if (ToeplitzHasher(ToeplitzSpec(n, m, seed, "random")).HashBlock(x) != oracle::NaiveToeplitz(seed, n, m, x)) {
      return {false, "mismatch at instance " + std::to_string(i) + " n=" + std::to_string(n) +
                         " m=" + std::to_string(m)};
    }
  }
  const ToeplitzHasher h(ToeplitzSpec::FromMt19937(bench::kDefaultBlockInput, bench::kDefaultBlockOutput,
                                                     bench::kDefaultExtractorSeed));
  for (int i = 0; i < kLinearityPairs; ++i) {
    const BitStream a = testing::RandomStream(rng, bench::kDefaultBlockInput);
    const BitStream b = testing::RandomStream(rng, bench::kDefaultBlockInput);
    if (h.HashBlock(Xor(a, b)) != Xor(h.HashBlock(a), h.HashBlock(b))) {
      return {false, "linearity broken at pair " + std::to_string(i)};
    }
  }
  return {true, std::to_string(kExtractorInstances) + " instances (n,m <= " + std::to_string(kExtractorMaxDim) +
                    ") match the naive product; " + std::to_string(kLinearityPairs) +
                    " block pairs satisfy T(x^y) = Tx^Ty at 4000x960"};
}

Check Lz76Oracle() {
  std::mt19937_64 rng(0x1276);
  for (int i = 0; i < kLz76Streams; ++i) {
    const std::size_t n = 1 + rng() % kLz76MaxLength;
    // Mix random and biased streams so that long phrases occur too.
    const unsigned bias = i % 3 == 0 ? 16 : 2;
    std::string s(n, '0');
    for (char& c : s) c = rng() % bias == 0 ? '1' : '0';
    if (Lz76Complexity(FromAscii(s)) != oracle::BruteForceLz76(s)) {
      return {false, "mismatch on stream " + std::to_string(i) + " length " + std::to_string(n)};
    }
  }
  const std::size_t alt = Lz76Complexity(FromAscii("0101010101010101"));
  const std::size_t zeros = Lz76Complexity(FromAscii("00000000"));
  const std::size_t one = Lz76Complexity(FromAscii("0"));
  return {alt == 3 && zeros == 2 && one == 1,
          std::to_string(kLz76Streams) + " streams <= " + std::to_string(kLz76MaxLength) +
              " bits match brute force; C((01)^8)=" + std::to_string(alt) + " C(0^8)=" + std::to_string(zeros) +
              " C(0)=" + std::to_string(one)};
}

std::map<std::string, std::string> StreamHashes(const json& report) {
  std::map<std::string, std::string> out;
  for (const json& src : report.at("sources")) {
    for (const json& st : src.at("stages")) {
      if (st.at("post_processed").get<bool>()) {
        out[src.at("label").get<std::string>() + "." + st.at("stage").get<std::string>()] = st.at("sha256");
      }
    }
  }
  return out;
}

Check Replay(const fs::path& work, const json& first) {
  const json second = RunPreset(work, "case2", "case2-replay", true);
  const auto a = StreamHashes(first), b = StreamHashes(second);
  const bool same_config = first.at("config_sha256") == second.at("config_sha256");
  return {!a.empty() && a == b && same_config,
          std::to_string(a.size()) + " extracted stream hashes " + (a == b ? "identical" : "differ") +
              ", config hash " + (same_config ? "identical" : "differs")};
}

Check WithoutPredictor(const fs::path& work) {
  std::vector<bench::NamedReport> runs;
  for (const char* preset : {"case3", "case4"}) {
    runs.push_back({preset, RunPreset(work, preset, preset)});
  }
  const bench::AggregateResult agg = bench::Aggregate(runs);
  const json& rows = agg.tables.at("prediction").at("rows");
  bool absent = !rows.empty();
  for (const json& r : rows) absent = absent && r.at("p_ml_percent").is_null();
  const bool text = agg.text.find("absent") != std::string::npos;
  return {absent && text, "case3 and case4 ran; " + std::to_string(rows.size()) +
                              " exported streams show prediction absent"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "randbench-acceptance";
  fs::create_directories(work);

  Report("oracle p-values", OraclePoints);
  Report("case I raw sources", [&] { return CaseOne(work); });
  json case2;
  Report("case II extracted sources", [&] { return CaseTwo(work, case2); });
  Report("case V lz76 relative complexity", [&] { return CaseFive(work); });
  Report("case VI borel normality", [&] { return CaseSix(work); });
  Report("extractor oracle and linearity", ExtractorOracle);
  Report("lz76 oracle", Lz76Oracle);
  Report("replay determinism", [&] {
    if (case2.is_null()) return Check{false, "case II run did not complete"};
    return Replay(work, case2);
  });
  Report("runs without predictor", [&] { return WithoutPredictor(work); });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
