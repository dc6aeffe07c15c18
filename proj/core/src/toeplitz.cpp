// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/toeplitz.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <random>
#include <string>

#include "randbench/error.hpp"

namespace randbench {

ToeplitzSpec::ToeplitzSpec(std::size_t n, std::size_t m, BitStream seed,
                           std::string seed_provenance)
    : n_(n), m_(m), seed_(std::move(seed)), provenance_(std::move(seed_provenance)) {
  if (m_ == 0 || m_ >= n_) {
    throw ParameterError("Toeplitz geometry requires 0 < m < n, got n=" +
                         std::to_string(n_) + " m=" + std::to_string(m_));
  }
  if (seed_.size() != n_ + m_ - 1) {
    throw ParameterError("Toeplitz seed must have n+m-1 = " +
                         std::to_string(n_ + m_ - 1) + " bits, got " +
                         std::to_string(seed_.size()));
  }
}

BitStream Mt19937Bits(std::uint32_t seed_value, std::size_t count) {
  std::mt19937 engine(seed_value);
  BitWriter out(count);
  while (out.size() < count) {
    std::uint32_t draw = static_cast<std::uint32_t>(engine());
    unsigned take =
        static_cast<unsigned>(std::min<std::size_t>(32, count - out.size()));
    out.PushBits(draw >> (32 - take), take);
  }
  return std::move(out).Finish();
}

ToeplitzSpec ToeplitzSpec::FromMt19937(std::size_t n, std::size_t m,
                                       std::uint32_t seed_value) {
  if (m == 0 || m >= n) {
    throw ParameterError("Toeplitz geometry requires 0 < m < n, got n=" +
                         std::to_string(n) + " m=" + std::to_string(m));
  }
  ToeplitzSpec spec(n, m, Mt19937Bits(seed_value, n + m - 1), "mt19937");
  spec.mt_seed_value_ = seed_value;
  return spec;
}

bool ToeplitzEntry(const ToeplitzSpec& spec, std::size_t i, std::size_t j) {
  if (i >= spec.output_bits() || j >= spec.input_bits()) {
    throw ParameterError("Toeplitz index (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") outside " +
                         std::to_string(spec.output_bits()) + "x" +
                         std::to_string(spec.input_bits()) + " matrix");
  }
  return spec.seed().at(spec.input_bits() - 1 + i - j);
}

ToeplitzHasher::ToeplitzHasher(const ToeplitzSpec& spec)
    : spec_(spec), row_words_((spec.input_bits() + 63) / 64) {
  const std::size_t n = spec.input_bits();
  const std::size_t m = spec.output_bits();
  // With R the reversed seed, row i is the window R[m-1-i, m-1-i+n).
  std::vector<std::uint8_t> seed = spec.seed().Unpack();
  std::reverse(seed.begin(), seed.end());
  BitStream reversed = BitStream::FromBits(seed);
  rows_.reserve(m * row_words_);
  for (std::size_t i = 0; i < m; ++i) {
    BitStream row = reversed.Slice(m - 1 - i, n);
    rows_.insert(rows_.end(), row.words().begin(), row.words().end());
  }
}

void ToeplitzHasher::HashWords(const std::uint64_t* x, BitWriter& out) const {
  const std::size_t m = spec_.output_bits();
  const std::uint64_t* row = rows_.data();
  std::uint64_t acc = 0;
  unsigned filled = 0;
  for (std::size_t i = 0; i < m; ++i, row += row_words_) {
    std::uint64_t folded = 0;
    for (std::size_t k = 0; k < row_words_; ++k) folded ^= row[k] & x[k];
    acc = (acc << 1) | static_cast<std::uint64_t>(std::popcount(folded) & 1);
    if (++filled == 64) {
      out.PushBits(acc, 64);
      acc = 0;
      filled = 0;
    }
  }
  if (filled != 0) out.PushBits(acc, filled);
}

BitStream ToeplitzHasher::HashBlock(const BitStream& block) const {
  if (block.size() != spec_.input_bits()) {
    throw ParameterError("Toeplitz block must have " +
                         std::to_string(spec_.input_bits()) + " bits, got " +
                         std::to_string(block.size()));
  }
  BitWriter out(spec_.output_bits());
  HashWords(block.words().data(), out);
  return std::move(out).Finish();
}

ExtractionResult ToeplitzHasher::HashStream(
    const BitStream& stream, std::optional<std::size_t> target_bits,
    unsigned threads) const {
  const std::size_t n = spec_.input_bits();
  const std::size_t m = spec_.output_bits();
  if (stream.size() < n) {
    throw InputError("stream of " + std::to_string(stream.size()) +
                     " bits is shorter than one Toeplitz block of " +
                     std::to_string(n));
  }
  const std::size_t blocks = stream.size() / n;
  if (target_bits && *target_bits > blocks * m) {
    throw InputError("target of " + std::to_string(*target_bits) +
                     " bits exceeds the " + std::to_string(blocks * m) +
                     " bits available from " + std::to_string(blocks) +
                     " blocks");
  }

  auto hash_range = [&](std::size_t first, std::size_t last) {
    BitWriter out((last - first) * m);
    for (std::size_t b = first; b < last; ++b) {
      BitStream block = stream.Slice(b * n, n);
      HashWords(block.words().data(), out);
    }
    return std::move(out).Finish();
  };

  BitStream hashed;
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(std::max<std::size_t>(blocks, 1)));
  if (threads == 1) {
    hashed = hash_range(0, blocks);
  } else {
    std::vector<std::future<BitStream>> parts;
    std::size_t per = (blocks + threads - 1) / threads;
    for (std::size_t first = 0; first < blocks; first += per) {
      parts.push_back(std::async(std::launch::async, hash_range, first,
                                 std::min(blocks, first + per)));
    }
    BitWriter joined(blocks * m);
    for (auto& part : parts) joined.Append(part.get());
    hashed = std::move(joined).Finish();
  }

  ExtractionResult result;
  ExtractionReport& r = result.report;
  r.input_bits = stream.size();
  r.blocks_processed = blocks;
  r.output_bits = blocks * m;
  r.discarded_tail_bits = stream.size() - blocks * n;
  r.compression_ratio =
      static_cast<double>(r.output_bits) / static_cast<double>(r.input_bits);
  r.block_input_bits = n;
  r.block_output_bits = m;
  r.seed_provenance = spec_.seed_provenance();
  r.seed_value = spec_.mt_seed_value();
  result.output = target_bits ? hashed.Prefix(*target_bits) : std::move(hashed);
  r.emitted_bits = result.output.size();
  return result;
}

BitStream ExtractBlock(const ToeplitzSpec& spec, const BitStream& block) {
  return ToeplitzHasher(spec).HashBlock(block);
}

ExtractionResult ExtractStream(const ToeplitzSpec& spec,
                               const BitStream& stream,
                               std::optional<std::size_t> target_bits) {
  return ToeplitzHasher(spec).HashStream(stream, target_bits);
}

}  // namespace randbench
