// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "randbench/bitstream.hpp"

namespace randbench::sts {

// The fifteen SP 800-22 tests, in report order.
enum class TestId {
  kFrequency,
  kBlockFrequency,
  kRuns,
  kLongestRun,
  kMatrixRank,
  kSpectralDft,
  kNonOverlappingTemplate,
  kOverlappingTemplate,
  kUniversal,
  kLinearComplexity,
  kSerial,
  kApproximateEntropy,
  kCumulativeSums,
  kRandomExcursions,
  kRandomExcursionsVariant,
};

inline constexpr std::size_t kTestCount = 15;
inline constexpr double kDefaultAlpha = 0.01;

const std::array<TestId, kTestCount>& AllTests();
std::string_view TestName(TestId id);
// Throws ParameterError for unknown names.
TestId ParseTestId(std::string_view name);

// Tunables of the battery. Zero for universal_block_length selects L from the
// SP 800-22 length table.
struct StsProfile {
  double alpha = kDefaultAlpha;
  unsigned block_frequency_block = 128;
  unsigned nonoverlapping_template_length = 9;
  unsigned overlapping_template_length = 9;
  unsigned overlapping_block = 1032;
  unsigned linear_complexity_block = 500;
  unsigned serial_length = 16;
  unsigned approximate_entropy_length = 10;
  unsigned universal_block_length = 0;
};

struct TestResult {
  TestId test = TestId::kFrequency;
  // Headline p-values; pass requires each to be >= alpha.
  std::vector<double> p_values;
  // Raw per-template / per-state p-values of the family tests, whose
  // headline p-value is the Bonferroni-adjusted minimum of this list.
  std::vector<double> family_p_values;
  bool pass = false;
  bool applicable = false;
  double alpha = kDefaultAlpha;
  std::map<std::string, std::int64_t> params_used;
  std::string note;  // why a test is inapplicable, or the error text
  bool error = false;
};

// Smallest stream length for which `id` is computed under `profile`, and the
// (larger) length SP 800-22 recommends.
std::size_t MinimumLength(TestId id, const StsProfile& profile);
std::size_t RecommendedLength(TestId id);

// Runs one test. Streams below the minimum length (or excursion tests with too
// few cycles) yield applicable = false and no p-values. Invalid profile
// values (e.g. a block longer than the stream) throw ParameterError.
TestResult RunTest(TestId id, const BitStream& stream,
                   const StsProfile& profile = {});
// Same, over bits already unpacked one per byte.
TestResult RunTest(TestId id, std::span<const std::uint8_t> bits,
                   const StsProfile& profile = {});

// Computational kernels. They apply the reference formulas without the
// length recommendations, so they also work on the short worked examples.
double FrequencyP(std::span<const std::uint8_t> bits);
double BlockFrequencyP(std::span<const std::uint8_t> bits, std::size_t block);
double RunsP(std::span<const std::uint8_t> bits);
double LongestRunP(std::span<const std::uint8_t> bits);
double MatrixRankP(std::span<const std::uint8_t> bits);
double SpectralP(std::span<const std::uint8_t> bits);
std::vector<double> NonOverlappingTemplateP(
    std::span<const std::uint8_t> bits, unsigned template_length,
    std::size_t blocks = 8);
double OverlappingTemplateP(std::span<const std::uint8_t> bits,
                            unsigned template_length, std::size_t block);
double UniversalP(std::span<const std::uint8_t> bits, unsigned block_length);
double LinearComplexityP(std::span<const std::uint8_t> bits, std::size_t block);
std::array<double, 2> SerialP(std::span<const std::uint8_t> bits, unsigned m);
double ApproximateEntropyP(std::span<const std::uint8_t> bits, unsigned m);
// {forward, backward}
std::array<double, 2> CumulativeSumsP(std::span<const std::uint8_t> bits);

struct ExcursionOutcome {
  std::size_t cycles = 0;
  std::vector<double> p_values;  // one per state, in increasing state order
};
// States -4..-1, 1..4.
ExcursionOutcome RandomExcursions(std::span<const std::uint8_t> bits);
// States -9..-1, 1..9.
ExcursionOutcome RandomExcursionsVariant(std::span<const std::uint8_t> bits);

// Helpers shared with tests and benchmarks.
std::size_t BerlekampMassey(std::span<const std::uint8_t> bits);
unsigned Gf2Rank(std::array<std::uint32_t, 32> rows);
// Non-periodic templates of length m in increasing numeric order.
std::vector<std::uint32_t> AperiodicTemplates(unsigned m);
// SP 800-22 choice of L for the universal test; 0 if n is too short.
unsigned UniversalBlockLengthFor(std::size_t n);
// Probability that a random 32x32 GF(2) matrix has rank r.
double RankProbability(unsigned r);

}  // namespace randbench::sts
