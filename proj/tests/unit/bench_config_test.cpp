// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <fstream>

#include "randbench/bench/config.hpp"
#include "randbench/error.hpp"
#include "test_util.hpp"

namespace randbench::bench {
namespace {

using testing::TempDir;

constexpr const char* kMinimal = R"(
; one generator, everything else defaulted
[source.lcg]
kind = lcg
)";

TEST(ConfigTest, MinimalConfigGetsDefaults) {
  RunConfig cfg = ParseConfig(kMinimal);
  ASSERT_EQ(cfg.sources.size(), 1u);
  const SourceSpec& s = cfg.sources[0];
  EXPECT_EQ(s.label, "lcg");
  EXPECT_EQ(s.requested_bits, kDefaultRawBits);
  const auto& lcg = std::get<LcgParams>(s.params);
  EXPECT_EQ(lcg.a(), 1664525u);
  EXPECT_EQ(lcg.c(), 1013904223u & ((1u << 24) - 1));
  EXPECT_EQ(lcg.k(), 24u);
  EXPECT_EQ(lcg.x0(), 1u);
  EXPECT_EQ(cfg.provenance.at("source.lcg.k"), "default");
  EXPECT_EQ(cfg.provenance.at("source.lcg.kind"), "config");
  EXPECT_FALSE(cfg.extractor.enabled);
  EXPECT_EQ(cfg.sts.block_frequency_block, 128u);
}

TEST(ConfigTest, FullConfigParses) {
  RunConfig cfg = ParseConfig(R"(
[run]
output_dir = out
threads = 2

[source.cc]
kind = chacha20
bits = 1_000_000
key = 000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f
nonce = 000000000000004a00000000
counter = 7

[source.custom]
kind = lcg
a = 5
c = 3
k = 26
x0 = 9

[extractor]
n = 1000
m = 200
seed_value = 5
target_bits = all

[sts]
alpha = 0.001
serial_length = 8
threads = 3

[measures]
enabled = sts, borel
stages = post
borel_max_level = 6

[predictor_export]
stages = pre
window = 50
stride = 2
split = 0.75
shuffle_seed = 99
)");
  EXPECT_EQ(cfg.output_dir, "out");
  EXPECT_EQ(cfg.source_threads, 2u);
  const auto& cc = std::get<ChaChaParams>(cfg.sources[0].params);
  EXPECT_EQ(cfg.sources[0].requested_bits, 1'000'000u);
  EXPECT_EQ(cc.nonce[7], 0x4a);
  EXPECT_EQ(cc.initial_counter, 7u);
  const auto& lcg = std::get<LcgParams>(cfg.sources[1].params);
  EXPECT_EQ(lcg.a(), 5u);
  EXPECT_EQ(lcg.k(), 26u);
  EXPECT_TRUE(cfg.extractor.enabled);
  EXPECT_FALSE(cfg.extractor.target_bits.has_value());
  EXPECT_DOUBLE_EQ(cfg.sts.alpha, 0.001);
  EXPECT_EQ(cfg.sts_threads, 3u);
  EXPECT_EQ(cfg.measures.enabled, (std::set<Measure>{Measure::kSts, Measure::kBorel}));
  EXPECT_FALSE(cfg.measures.pre);
  EXPECT_TRUE(cfg.measures.post);
  EXPECT_TRUE(cfg.predictor_export.enabled);
  EXPECT_EQ(cfg.predictor_export.window, 50u);
  EXPECT_DOUBLE_EQ(cfg.predictor_export.split, 0.75);
}

TEST(ConfigTest, SeedLengthMustMatchGeometry) {
  std::string text = std::string(kMinimal) + "[extractor]\nn = 4000\nm = 960\nseed = " + std::string(100, '1') + "\n";
  try {
    ParseConfig(text);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("n+m-1 = 4959"), std::string::npos) << e.what();
  }
  std::string ok = std::string(kMinimal) + "[extractor]\nn = 6\nm = 3\nseed = 10110 011\n";
  EXPECT_EQ(ParseConfig(ok).extractor.explicit_seed->size(), 8u);
  EXPECT_THROW(ParseConfig(std::string(kMinimal) + "[extractor]\nn = 6\nm = 6\n"), ConfigError);
}

TEST(ConfigTest, DuplicateLabelsRejected) {
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[source.a]\nkind = chacha20\n"), ConfigError);
}

TEST(ConfigTest, UnknownKeysAndSectionsRejected) {
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\nmultiplier = 5\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[extractor]\nsize = 5\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[beacon]\nurl = x\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = mersenne\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a b]\nkind = lcg\n"), ConfigError);
}

TEST(ConfigTest, BadValuesRejected) {
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\nk = 20\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\nbits = lots\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = chacha20\nkey = 00\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[measures]\nenabled = sts, nn\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[measures]\nstages = mid\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[sts]\nalpha = 2\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[predictor_export]\nsplit = 1\n"), ConfigError);
  EXPECT_THROW(ParseConfig("[source.a]\nkind = lcg\n[extractor]\nenabled = maybe\n"), ConfigError);
}

TEST(ConfigTest, ValidateChecksReferencedFiles) {
  TempDir dir("cfg");
  std::ofstream(dir.path() / "c.ini") << "[source.q]\nkind = external\npath = q.txt\nformat = ascii\n";
  EXPECT_THROW(ValidateConfig(dir.path() / "c.ini"), ConfigError);
  std::ofstream(dir.path() / "q.txt") << "0101";
  RunConfig cfg = ValidateConfig(dir.path() / "c.ini");
  EXPECT_EQ(std::get<ExternalSource>(cfg.sources[0].params).path, dir.path() / "q.txt");
  EXPECT_THROW(ValidateConfig(dir.path() / "absent.ini"), IoError);
  std::ofstream(dir.path() / "empty.ini") << "[run]\noutput_dir = x\n";
  EXPECT_THROW(ValidateConfig(dir.path() / "empty.ini"), ConfigError);
}

TEST(PresetTest, AllPresetsResolve) {
  for (const std::string& name : PresetNames()) {
    RunConfig cfg = ResolveConfig(std::nullopt, name);
    EXPECT_EQ(cfg.preset, name);
    EXPECT_EQ(cfg.output_dir, "run-" + name);
    EXPECT_FALSE(cfg.sources.empty()) << name;
  }
  RunConfig c1 = ResolveConfig(std::nullopt, "case1");
  EXPECT_EQ(c1.sources.size(), 3u);
  EXPECT_FALSE(c1.extractor.enabled);
  EXPECT_EQ(c1.measures.enabled, std::set<Measure>{Measure::kSts});

  RunConfig c2 = ResolveConfig(std::nullopt, "case2");
  EXPECT_TRUE(c2.extractor.enabled);
  EXPECT_EQ(c2.extractor.target_bits, kDefaultExtractedBits);
  EXPECT_TRUE(c2.extractor.rerun_on_sts_failure);

  RunConfig c4 = ResolveConfig(std::nullopt, "case4");
  EXPECT_EQ(c4.extractor.sweep_targets,
            (std::vector<std::size_t>{1'000'000, 1'200'000, 1'500'000, 2'000'000}));
  EXPECT_EQ(ResolveConfig(std::nullopt, "case5").sources.size(), 11u);
  EXPECT_THROW(ResolveConfig(std::nullopt, "case7"), ConfigError);
  EXPECT_THROW(ResolveConfig(std::nullopt, std::nullopt), ConfigError);
}

TEST(PresetTest, UserConfigOverlaysPreset) {
  TempDir dir("overlay");
  std::ofstream(dir.path() / "o.ini") << "[extractor]\nseed_value = 7\n\n[source.chacha20]\nbits = 2000\n\n"
                                         "[source.extra]\nkind = lcg\nset = 2\n";
  RunConfig cfg = ResolveConfig(dir.path() / "o.ini", "case2");
  EXPECT_EQ(cfg.extractor.seed_value, 7u);
  EXPECT_EQ(cfg.provenance.at("extractor.seed_value"), "config");
  EXPECT_EQ(cfg.provenance.at("extractor.target_bits"), "preset:case2");
  ASSERT_EQ(cfg.sources.size(), 4u);
  EXPECT_EQ(cfg.sources[2].label, "chacha20");
  EXPECT_EQ(cfg.sources[2].requested_bits, 2000u);
  EXPECT_EQ(cfg.sources[3].label, "extra");
}

TEST(ConfigJsonTest, EchoesResolvedValues) {
  auto j = ConfigToJson(ResolveConfig(std::nullopt, "case2"));
  EXPECT_EQ(j["preset"], "case2");
  EXPECT_EQ(j["sources"].size(), 3u);
  EXPECT_EQ(j["sources"][0]["kind"], "lcg");
  EXPECT_EQ(j["extractor"]["n"], 4000);
  EXPECT_EQ(j["extractor"]["m"], 960);
  EXPECT_EQ(j["extractor"]["seed_value"], kDefaultExtractorSeed);
  EXPECT_EQ(j["measures"]["enabled"], nlohmann::json::array({"sts"}));
}

}  // namespace
}  // namespace randbench::bench
