// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>

#include "randbench/bitstream.hpp"
#include "randbench/bitstream_io.hpp"

namespace randbench {

// Linear congruential generator X' = (a X + c) mod 2^k.
class LcgParams {
 public:
  static constexpr unsigned kSupportedExponents[] = {24, 26, 28, 30, 32};

  // Validates a, c, x0 < 2^k and k in kSupportedExponents; throws
  // ParameterError otherwise.
  LcgParams(std::uint64_t a, std::uint64_t c, unsigned k, std::uint64_t x0);

  // Unchecked construction for small moduli (1 <= k <= 32), used by the
  // period property tests. Still rejects out-of-range a, c, x0.
  static LcgParams AnyModulus(std::uint64_t a, std::uint64_t c, unsigned k,
                              std::uint64_t x0);

  constexpr std::uint64_t a() const noexcept { return a_; }
  constexpr std::uint64_t c() const noexcept { return c_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t x0() const noexcept { return x0_; }
  constexpr std::uint64_t mask() const noexcept { return (std::uint64_t{1} << k_) - 1; }

 private:
  LcgParams(std::uint64_t a, std::uint64_t c, unsigned k, std::uint64_t x0,
            bool check_supported);

  std::uint64_t a_, c_;
  unsigned k_;
  std::uint64_t x0_;
};

// Named (a, c) pairs. The multipliers are reduced mod 2^k so that the pair is
// valid for every supported exponent; the reduction leaves the recurrence
// unchanged.
enum class LcgParameterSet { kSet1, kSet2 };
LcgParams DefaultLcg(LcgParameterSet set, unsigned k, std::uint64_t x0 = 1);

constexpr std::uint64_t LcgNext(std::uint64_t state,
                                const LcgParams& p) noexcept {
  // a, state < 2^32, so the product fits in 64 bits.
  return (p.a() * state + p.c()) & p.mask();
}

// Successive states X1, X2, ... each emitted as k bits MSB-first, truncated
// to `nbits`.
BitStream LcgStream(const LcgParams& p, std::size_t nbits);

struct ChaChaParams {
  std::array<std::uint8_t, 32> key{};
  std::array<std::uint8_t, 12> nonce{};
  std::uint32_t initial_counter = 0;
  static constexpr int kRounds = 20;
};

using ChaChaBlock = std::array<std::uint8_t, 64>;

// Standard ARX quarter-round, exposed for vector tests.
void ChaChaQuarterRound(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c,
                        std::uint32_t& d) noexcept;

// IETF ChaCha20 block function: 64 keystream bytes for `counter`.
ChaChaBlock ChaCha20Block(const ChaChaParams& p, std::uint32_t counter) noexcept;

// Keystream blocks for counters initial_counter, initial_counter + 1, ...,
// bytes serialised MSB-first into bits and truncated to `nbits`. Throws
// CapacityError if the 32-bit block counter would wrap.
BitStream ChaCha20Stream(const ChaChaParams& p, std::size_t nbits);

// Externally produced dataset (e.g. a QRNG dump) read from disk.
struct ExternalSource {
  std::filesystem::path path;
  FileFormat format = FileFormat::kPacked;
};

struct LabeledStream {
  BitStream bits;
  std::string label;
};

// Reads an external dataset and tags it with `label`. Format errors from the
// reader propagate unchanged; a missing file raises IoError with the path.
LabeledStream IngestExternal(const std::filesystem::path& path,
                             FileFormat format, std::string label);

struct SourceSpec {
  enum class Kind { kLcg, kChaCha20, kExternal };

  std::string label;
  std::variant<LcgParams, ChaChaParams, ExternalSource> params;
  std::size_t requested_bits = 0;

  Kind kind() const noexcept { return static_cast<Kind>(params.index()); }
};

std::string_view SourceKindName(SourceSpec::Kind kind);

// Generates or ingests the stream described by `spec`. Generated streams have
// exactly `requested_bits` bits. External streams are truncated to
// `requested_bits` when that is non-zero and shorter than the file.
BitStream Generate(const SourceSpec& spec);

}  // namespace randbench
