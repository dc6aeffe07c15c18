// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randbench/bitstream.hpp"

namespace randbench {

// Geometry and seed of a Toeplitz hash over GF(2).
//
// The m x n matrix is T[i][j] = seed[(n - 1) + i - j], so it is fully
// determined by n + m - 1 seed bits and is constant along every diagonal.
class ToeplitzSpec {
 public:
  // Throws ParameterError unless 0 < m < n and seed.size() == n + m - 1.
  ToeplitzSpec(std::size_t n, std::size_t m, BitStream seed,
               std::string seed_provenance);

  // Seed bits drawn from std::mt19937 seeded with `seed_value`; each 32-bit
  // output contributes its bits MSB-first.
  static ToeplitzSpec FromMt19937(std::size_t n, std::size_t m,
                                  std::uint32_t seed_value);

  std::size_t input_bits() const noexcept { return n_; }
  std::size_t output_bits() const noexcept { return m_; }
  const BitStream& seed() const noexcept { return seed_; }
  const std::string& seed_provenance() const noexcept { return provenance_; }
  // Set when the seed came from FromMt19937.
  std::optional<std::uint32_t> mt_seed_value() const noexcept {
    return mt_seed_value_;
  }

 private:
  std::size_t n_, m_;
  BitStream seed_;
  std::string provenance_;
  std::optional<std::uint32_t> mt_seed_value_;
};

// `count` bits of std::mt19937(seed_value) output, 32 bits per draw, MSB-first.
BitStream Mt19937Bits(std::uint32_t seed_value, std::size_t count);

struct ExtractionReport {
  std::size_t input_bits = 0;
  std::size_t output_bits = 0;  // blocks_processed * m
  std::size_t emitted_bits = 0;  // after optional truncation to a target
  std::size_t blocks_processed = 0;
  std::size_t discarded_tail_bits = 0;
  double compression_ratio = 0.0;  // output_bits / input_bits
  std::size_t block_input_bits = 0;
  std::size_t block_output_bits = 0;
  std::string seed_provenance;
  std::optional<std::uint32_t> seed_value;
};

struct ExtractionResult {
  BitStream output;
  ExtractionReport report;
};

// Throws ParameterError if i >= m or j >= n.
bool ToeplitzEntry(const ToeplitzSpec& spec, std::size_t i, std::size_t j);

// Word-packed Toeplitz multiplier. Rows are materialised once, so one hasher
// should be reused across all blocks of a stream.
class ToeplitzHasher {
 public:
  explicit ToeplitzHasher(const ToeplitzSpec& spec);

  const ToeplitzSpec& spec() const noexcept { return spec_; }

  // y = T x over GF(2). Throws ParameterError if block.size() != n.
  BitStream HashBlock(const BitStream& block) const;

  // Cuts `stream` into consecutive n-bit blocks, hashes each and
  // concatenates the outputs. A tail shorter than n bits is discarded and
  // reported. With `target_bits`, the output is truncated to that length.
  // `threads` > 1 hashes disjoint block ranges concurrently; the result is
  // identical to the sequential one.
  // Throws InputError if the stream is shorter than one block or if
  // target_bits exceeds the hashed length.
  ExtractionResult HashStream(const BitStream& stream,
                              std::optional<std::size_t> target_bits = {},
                              unsigned threads = 1) const;

 private:
  void HashWords(const std::uint64_t* x, BitWriter& out) const;

  ToeplitzSpec spec_;
  std::size_t row_words_;
  std::vector<std::uint64_t> rows_;  // m rows of row_words_ words each
};

BitStream ExtractBlock(const ToeplitzSpec& spec, const BitStream& block);

ExtractionResult ExtractStream(const ToeplitzSpec& spec,
                               const BitStream& stream,
                               std::optional<std::size_t> target_bits = {});

}  // namespace randbench
