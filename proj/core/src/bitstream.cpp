// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bitstream.hpp"

#include <bit>
#include <string>

#include "randbench/error.hpp"

namespace randbench {
namespace {

constexpr std::size_t WordCount(std::size_t bits) { return (bits + 63) / 64; }

void ClearTail(std::vector<std::uint64_t>& words, std::size_t bits) {
  words.resize(WordCount(bits));
  if (unsigned used = bits % 64; used != 0) {
    words.back() &= ~std::uint64_t{0} << (64 - used);
  }
}

}  // namespace

BitStream BitStream::FromWords(std::vector<std::uint64_t> words,
                               std::size_t bit_length) {
  if (words.size() < WordCount(bit_length)) {
    throw ParameterError("BitStream::FromWords: " +
                         std::to_string(words.size()) +
                         " words cannot hold " + std::to_string(bit_length) +
                         " bits");
  }
  ClearTail(words, bit_length);
  return BitStream(std::move(words), bit_length);
}

BitStream BitStream::FromBytes(std::span<const std::uint8_t> bytes,
                               std::size_t bit_length) {
  if (bytes.size() * 8 < bit_length) {
    throw InputError("declared length of " + std::to_string(bit_length) +
                     " bits exceeds payload of " +
                     std::to_string(bytes.size()) + " bytes");
  }
  std::size_t nbytes = (bit_length + 7) / 8;
  std::vector<std::uint64_t> words(WordCount(bit_length), 0);
  for (std::size_t k = 0; k < nbytes; ++k) {
    words[k / 8] |= std::uint64_t{bytes[k]} << (56 - 8 * (k % 8));
  }
  ClearTail(words, bit_length);
  return BitStream(std::move(words), bit_length);
}

BitStream BitStream::FromBits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint64_t> words(WordCount(bits.size()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) words[i / 64] |= std::uint64_t{1} << (63 - i % 64);
  }
  return BitStream(std::move(words), bits.size());
}

bool BitStream::at(std::size_t i) const {
  if (i >= size_) {
    throw ParameterError("bit index " + std::to_string(i) +
                         " out of range for stream of length " +
                         std::to_string(size_));
  }
  return (words_[i / 64] >> (63 - i % 64)) & 1U;
}

std::uint64_t BitStream::Extract(std::size_t offset, unsigned count) const {
  if (count > 64 || offset > size_ || count > size_ - offset) {
    throw ParameterError("Extract(" + std::to_string(offset) + ", " +
                         std::to_string(count) + ") outside stream of length " +
                         std::to_string(size_));
  }
  if (count == 0) return 0;
  std::size_t w = offset / 64;
  unsigned shift = offset % 64;
  std::uint64_t hi = words_[w] << shift;
  if (shift != 0 && w + 1 < words_.size()) hi |= words_[w + 1] >> (64 - shift);
  return hi >> (64 - count);
}

BitStream BitStream::Slice(std::size_t offset, std::size_t count) const {
  if (offset > size_ || count > size_ - offset) {
    throw ParameterError("Slice(" + std::to_string(offset) + ", " +
                         std::to_string(count) + ") outside stream of length " +
                         std::to_string(size_));
  }
  std::vector<std::uint64_t> out(WordCount(count), 0);
  std::size_t w = offset / 64;
  unsigned shift = offset % 64;
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::uint64_t v = words_[w + k] << shift;
    if (shift != 0 && w + k + 1 < words_.size()) {
      v |= words_[w + k + 1] >> (64 - shift);
    }
    out[k] = v;
  }
  ClearTail(out, count);
  return BitStream(std::move(out), count);
}

std::vector<std::uint8_t> BitStream::Unpack() const {
  std::vector<std::uint8_t> bits(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    bits[i] = static_cast<std::uint8_t>((words_[i / 64] >> (63 - i % 64)) & 1U);
  }
  return bits;
}

std::size_t BitStream::CountOnes() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

void BitWriter::Push(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_.back() |= std::uint64_t{1} << (63 - size_ % 64);
  ++size_;
}

void BitWriter::PushBits(std::uint64_t value, unsigned count) {
  if (count == 0) return;
  if (count < 64) value &= (std::uint64_t{1} << count) - 1;
  unsigned used = size_ % 64;
  if (used == 0) {
    words_.push_back(value << (64 - count));
  } else {
    unsigned room = 64 - used;
    if (count <= room) {
      words_.back() |= value << (room - count);
    } else {
      words_.back() |= value >> (count - room);
      words_.push_back(value << (64 - (count - room)));
    }
  }
  size_ += count;
}

void BitWriter::Append(const BitStream& other) {
  std::size_t full = other.size() / 64;
  for (std::size_t k = 0; k < full; ++k) PushBits(other.words()[k], 64);
  if (unsigned rest = other.size() % 64; rest != 0) {
    PushBits(other.words()[full] >> (64 - rest), rest);
  }
}

BitStream BitWriter::Finish() && {
  ClearTail(words_, size_);
  return BitStream(std::move(words_), size_);
}

BitStream FromAscii(std::string_view text) {
  BitWriter writer(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    switch (char c = text[pos]) {
      case '0':
      case '1':
        writer.Push(c == '1');
        break;
      case ' ':
      case '\t':
      case '\n':
      case '\r':
      case '\v':
      case '\f':
        break;
      default:
        throw FormatError("invalid character at position " +
                          std::to_string(pos) + " in bit text");
    }
  }
  return std::move(writer).Finish();
}

std::string ToAscii(const BitStream& stream) {
  std::string out(stream.size(), '0');
  auto words = stream.words();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    if ((words[i / 64] >> (63 - i % 64)) & 1U) out[i] = '1';
  }
  return out;
}

ByteView ToBytes(const BitStream& stream) {
  ByteView view;
  std::size_t nbytes = stream.size() / 8;
  view.bytes.resize(nbytes);
  auto words = stream.words();
  for (std::size_t k = 0; k < nbytes; ++k) {
    view.bytes[k] =
        static_cast<std::uint8_t>(words[k / 8] >> (56 - 8 * (k % 8)));
  }
  view.remainder_bits = static_cast<unsigned>(stream.size() % 8);
  return view;
}

WordView Words(const BitStream& stream, unsigned word_size) {
  if (word_size < 1 || word_size > 32) {
    throw ParameterError("word size must be in [1, 32], got " +
                         std::to_string(word_size));
  }
  WordView view;
  view.word_size = word_size;
  std::size_t count = stream.size() / word_size;
  view.words.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    view.words[k] =
        static_cast<std::uint32_t>(stream.Extract(k * word_size, word_size));
  }
  return view;
}

}  // namespace randbench
