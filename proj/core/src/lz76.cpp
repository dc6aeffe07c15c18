// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/lz76.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "randbench/error.hpp"
#include "randbench/toeplitz.hpp"

namespace randbench {
namespace {

// Suffix automaton over {0, 1}. first_end[v] is the end index of the
// earliest occurrence of the strings in state v.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const std::vector<std::uint8_t>& bits) {
    std::size_t cap = 2 * bits.size() + 1;
    next_.reserve(cap);
    link_.reserve(cap);
    len_.reserve(cap);
    first_end_.reserve(cap);
    AddState(0, -1, -1);
    std::int32_t last = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      last = Extend(last, bits[i], static_cast<std::int32_t>(i));
    }
  }

  std::int32_t Next(std::int32_t v, std::uint8_t c) const {
    return next_[v][c];
  }
  std::int32_t FirstEnd(std::int32_t v) const { return first_end_[v]; }

 private:
  std::int32_t AddState(std::int32_t len, std::int32_t link,
                        std::int32_t first_end) {
    next_.push_back({-1, -1});
    link_.push_back(link);
    len_.push_back(len);
    first_end_.push_back(first_end);
    return static_cast<std::int32_t>(len_.size() - 1);
  }

  std::int32_t Extend(std::int32_t last, std::uint8_t c, std::int32_t pos) {
    std::int32_t cur = AddState(len_[last] + 1, -1, pos);
    std::int32_t p = last;
    while (p != -1 && next_[p][c] == -1) {
      next_[p][c] = cur;
      p = link_[p];
    }
    if (p == -1) {
      link_[cur] = 0;
      return cur;
    }
    std::int32_t q = next_[p][c];
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
      return cur;
    }
    std::int32_t clone = AddState(len_[p] + 1, link_[q], first_end_[q]);
    next_[clone] = next_[q];
    while (p != -1 && next_[p][c] == q) {
      next_[p][c] = clone;
      p = link_[p];
    }
    link_[q] = clone;
    link_[cur] = clone;
    return cur;
  }

  std::vector<std::array<std::int32_t, 2>> next_;
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> len_;
  std::vector<std::int32_t> first_end_;
};

}  // namespace

std::size_t Lz76Complexity(const BitStream& stream) {
  if (stream.empty()) throw InputError("LZ-76 complexity of an empty stream");
  if (stream.size() >= static_cast<std::size_t>(
                           std::numeric_limits<std::int32_t>::max() / 2)) {
    throw InputError("stream too long for LZ-76 analysis");
  }
  std::vector<std::uint8_t> bits = stream.Unpack();
  SuffixAutomaton automaton(bits);
  const std::int64_t n = static_cast<std::int64_t>(bits.size());

  std::size_t phrases = 0;
  std::int64_t i = 0;
  while (i < n) {
    // Longest l such that bits[i, i+l) starts somewhere before i.
    std::int32_t state = 0;
    std::int64_t l = 0;
    while (i + l < n) {
      std::int32_t u = automaton.Next(state, bits[i + l]);
      if (u == -1 || automaton.FirstEnd(u) - l >= i) break;
      state = u;
      ++l;
    }
    ++phrases;
    i += l + 1;
  }
  return phrases;
}

double NormalizedLz76(std::size_t phrase_count, std::size_t length) {
  if (length < 2) throw InputError("normalization needs at least 2 bits");
  double n = static_cast<double>(length);
  return static_cast<double>(phrase_count) * std::log2(n) / n;
}

SeedReference SeedReferenceFromStream(std::string label,
                                      const BitStream& reference) {
  return {std::move(label),
          NormalizedLz76(Lz76Complexity(reference), reference.size())};
}

SeedReference Mt19937SeedReference(std::uint32_t seed_value,
                                   std::size_t length) {
  return SeedReferenceFromStream(
      "mt19937(" + std::to_string(seed_value) + ")",
      Mt19937Bits(seed_value, length));
}

SeedReference RecordedMtSeedReference() {
  return {"mt19937 (recorded)", kRecordedMtSeedComplexity};
}

Lz76Report KolmogorovReport(const BitStream& stream,
                            const std::optional<SeedReference>& seed) {
  if (stream.size() < 2) {
    throw InputError("Kolmogorov estimate needs at least 2 bits");
  }
  Lz76Report report;
  report.phrase_count = Lz76Complexity(stream);
  report.input_length = stream.size();
  report.normalized = NormalizedLz76(report.phrase_count, stream.size());
  if (seed) {
    report.seed_label = seed->label;
    report.seed_normalized = seed->normalized;
    report.relative_to_seed = report.normalized / seed->normalized;
  }
  return report;
}

}  // namespace randbench
