// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/borel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "randbench/error.hpp"

namespace randbench {

BorelReport BorelNormality(const BitStream& stream, unsigned max_level) {
  if (max_level == 0 || max_level > kMaxBorelLevel) {
    throw ParameterError("Borel max_level must be in [1, 16], got " +
                         std::to_string(max_level));
  }
  BorelReport report;
  report.length = stream.size();
  const std::size_t n = stream.size();
  const double bound = n >= 2 ? 1.0 / std::log2(static_cast<double>(n)) : 0.0;

  bool all_pass = true;
  for (unsigned m = 1; m <= max_level; ++m) {
    BorelLevel level;
    level.m = m;
    level.bound = bound;
    const std::size_t alphabet = std::size_t{1} << m;
    level.applicable = n >= 2 && n >= alphabet;
    if (level.applicable) {
      WordView view = Words(stream, m);
      level.word_count = view.words.size();
      level.counts.assign(alphabet, 0);
      for (std::uint32_t w : view.words) ++level.counts[w];
      if (std::accumulate(level.counts.begin(), level.counts.end(),
                          std::uint64_t{0}) != level.word_count) {
        throw Error("Borel word counts do not sum to floor(N/m)");
      }
      const double expected = 1.0 / static_cast<double>(alphabet);
      const double total = static_cast<double>(level.word_count);
      for (std::uint64_t c : level.counts) {
        level.max_deviation = std::max(
            level.max_deviation,
            std::abs(static_cast<double>(c) / total - expected));
      }
      level.pass = level.max_deviation <= bound;
      all_pass = all_pass && level.pass;
    }
    report.levels.push_back(std::move(level));
  }
  report.all_pass = all_pass;
  return report;
}

}  // namespace randbench
