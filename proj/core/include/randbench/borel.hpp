// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "randbench/bitstream.hpp"

namespace randbench {

struct BorelLevel {
  unsigned m = 0;
  bool applicable = false;
  std::size_t word_count = 0;  // floor(N / m) non-overlapping words
  std::vector<std::uint64_t> counts;  // 2^m entries, empty if not applicable
  double max_deviation = 0.0;  // max_j |count_j / word_count - 2^-m|
  double bound = 0.0;          // 1 / log2(N)
  bool pass = false;
};

struct BorelReport {
  std::size_t length = 0;
  std::vector<BorelLevel> levels;  // m = 1..max_level
  bool all_pass = false;           // every applicable level passes
};

inline constexpr unsigned kMaxBorelLevel = 16;

// Borel normality at levels 1..max_level with non-overlapping word counting.
// A level is applicable when N >= 2^m and N >= 2. Throws ParameterError if
// max_level is 0 or above kMaxBorelLevel.
BorelReport BorelNormality(const BitStream& stream, unsigned max_level = 4);

}  // namespace randbench
