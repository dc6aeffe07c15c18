// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "randbench/bitstream.hpp"

namespace randbench {

// Lempel-Ziv (1976) complexity: the number of phrases in the exhaustive
// history of `stream`. Each phrase is the longest prefix of the remaining
// input that already occurs starting strictly before it (the occurrence may
// run into the phrase itself), plus one innovative symbol. A trailing partial
// phrase counts as one.
//
// Runs in linear time using a suffix automaton that tracks the earliest end
// position of every state. Throws InputError on an empty stream.
std::size_t Lz76Complexity(const BitStream& stream);

// C * log2(n) / n for a stream of length n with phrase count C.
double NormalizedLz76(std::size_t phrase_count, std::size_t length);

// Reference against which normalized complexities are expressed.
struct SeedReference {
  std::string label;
  double normalized = 0.0;
};

// Normalized complexity of an explicit reference stream.
SeedReference SeedReferenceFromStream(std::string label,
                                      const BitStream& reference);

// Normalized LZ-76 complexity of a std::mt19937 stream of `length` bits
// seeded with `seed_value` (the extractor's seed generator).
SeedReference Mt19937SeedReference(std::uint32_t seed_value,
                                   std::size_t length);

// Recorded complexity of the Mersenne Twister extractor seed, used when the
// seed stream is not regenerated.
inline constexpr double kRecordedMtSeedComplexity = 1.382;
SeedReference RecordedMtSeedReference();

struct Lz76Report {
  std::size_t phrase_count = 0;
  std::size_t input_length = 0;
  double normalized = 0.0;
  std::optional<double> relative_to_seed;
  std::optional<double> seed_normalized;
  std::string seed_label;
};

// Throws InputError for streams shorter than 2 bits.
Lz76Report KolmogorovReport(const BitStream& stream,
                            const std::optional<SeedReference>& seed = {});

}  // namespace randbench
