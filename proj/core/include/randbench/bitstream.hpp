// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace randbench {

// Immutable, exactly-sized sequence of bits.
//
// Bits are packed MSB-first into 64-bit words: bit i lives in word i / 64 at
// position 63 - i % 64. The same MSB-first convention is used for bytes and
// for multi-bit words everywhere in the library. Bits past size() in the last
// word are always zero, so word-level comparisons and hashes are canonical.
class BitStream {
 public:
  BitStream() = default;

  // Takes ownership of packed words. Throws ParameterError if `words` is too
  // short for `bit_length`; surplus trailing bits are cleared.
  static BitStream FromWords(std::vector<std::uint64_t> words,
                             std::size_t bit_length);
  // Packed MSB-first bytes. Throws InputError if the payload holds fewer than
  // `bit_length` bits.
  static BitStream FromBytes(std::span<const std::uint8_t> bytes,
                             std::size_t bit_length);
  static BitStream FromBytes(std::span<const std::uint8_t> bytes) {
    return FromBytes(bytes, bytes.size() * 8);
  }
  // One element per bit; any non-zero value is a one.
  static BitStream FromBits(std::span<const std::uint8_t> bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Throws ParameterError when i >= size().
  bool at(std::size_t i) const;

  // Up to 64 bits starting at `offset`, MSB-first, right-aligned in the
  // result. Throws ParameterError if the range leaves the stream.
  std::uint64_t Extract(std::size_t offset, unsigned count) const;

  // Sub-stream [offset, offset + count). Throws ParameterError on overrun.
  BitStream Slice(std::size_t offset, std::size_t count) const;
  BitStream Prefix(std::size_t count) const { return Slice(0, count); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  // One byte (0 or 1) per bit; the layout most statistical tests want.
  std::vector<std::uint8_t> Unpack() const;

  std::size_t CountOnes() const noexcept;

  friend bool operator==(const BitStream& a, const BitStream& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  BitStream(std::vector<std::uint64_t> words, std::size_t size)
      : words_(std::move(words)), size_(size) {}

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;

  friend class BitWriter;
};

// Append-only builder for BitStream.
class BitWriter {
 public:
  BitWriter() = default;
  explicit BitWriter(std::size_t reserve_bits) { Reserve(reserve_bits); }

  void Reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }
  void Push(bool bit);
  // Appends the low `count` bits of `value`, most significant first.
  // `count` must be at most 64.
  void PushBits(std::uint64_t value, unsigned count);
  void Append(const BitStream& other);

  std::size_t size() const noexcept { return size_; }
  BitStream Finish() &&;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Parses '0'/'1' characters, skipping ASCII whitespace. Any other character
// raises FormatError naming its zero-based position.
BitStream FromAscii(std::string_view text);
std::string ToAscii(const BitStream& stream);

struct ByteView {
  std::vector<std::uint8_t> bytes;
  // Bits after the last whole byte; never padded into `bytes`.
  unsigned remainder_bits = 0;
};

ByteView ToBytes(const BitStream& stream);

// Non-overlapping `word_size`-bit words read MSB-first. The trailing
// remainder of fewer than `word_size` bits is dropped.
struct WordView {
  unsigned word_size = 0;
  std::vector<std::uint32_t> words;
};

// Throws ParameterError unless 1 <= word_size <= 32.
WordView Words(const BitStream& stream, unsigned word_size);

}  // namespace randbench
