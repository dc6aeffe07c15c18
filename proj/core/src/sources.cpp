// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/sources.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "randbench/error.hpp"

namespace randbench {

LcgParams::LcgParams(std::uint64_t a, std::uint64_t c, unsigned k,
                     std::uint64_t x0)
    : LcgParams(a, c, k, x0, true) {}

LcgParams LcgParams::AnyModulus(std::uint64_t a, std::uint64_t c, unsigned k,
                                std::uint64_t x0) {
  return LcgParams(a, c, k, x0, false);
}

LcgParams::LcgParams(std::uint64_t a, std::uint64_t c, unsigned k,
                     std::uint64_t x0, bool check_supported)
    : a_(a), c_(c), k_(k), x0_(x0) {
  if (check_supported) {
    if (std::find(std::begin(kSupportedExponents),
                  std::end(kSupportedExponents),
                  k) == std::end(kSupportedExponents)) {
      throw ParameterError("LCG modulus exponent k=" + std::to_string(k) +
                           " not in {24, 26, 28, 30, 32}");
    }
  } else if (k < 1 || k > 32) {
    throw ParameterError("LCG modulus exponent k=" + std::to_string(k) +
                         " not in [1, 32]");
  }
  std::uint64_t limit = std::uint64_t{1} << k;
  if (a >= limit || c >= limit || x0 >= limit) {
    throw ParameterError("LCG parameters a, c, x0 must be < 2^" +
                         std::to_string(k));
  }
}

LcgParams DefaultLcg(LcgParameterSet set, unsigned k, std::uint64_t x0) {
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  switch (set) {
    case LcgParameterSet::kSet1:
      return LcgParams(1664525 & mask, 1013904223 & mask, k, x0 & mask);
    case LcgParameterSet::kSet2:
      return LcgParams(22695477 & mask, 1, k, x0 & mask);
  }
  throw ParameterError("unknown LCG parameter set");
}

BitStream LcgStream(const LcgParams& p, std::size_t nbits) {
  BitWriter out(nbits);
  std::uint64_t state = p.x0();
  while (out.size() < nbits) {
    state = LcgNext(state, p);
    unsigned take = static_cast<unsigned>(
        std::min<std::size_t>(p.k(), nbits - out.size()));
    out.PushBits(state >> (p.k() - take), take);
  }
  return std::move(out).Finish();
}

void ChaChaQuarterRound(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c,
                        std::uint32_t& d) noexcept {
  a += b; d ^= a; d = std::rotl(d, 16);
  c += d; b ^= c; b = std::rotl(b, 12);
  a += b; d ^= a; d = std::rotl(d, 8);
  c += d; b ^= c; b = std::rotl(b, 7);
}

namespace {

std::uint32_t LoadLe32(const std::uint8_t* p) noexcept {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 |
         std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

}  // namespace

ChaChaBlock ChaCha20Block(const ChaChaParams& p,
                          std::uint32_t counter) noexcept {
  std::array<std::uint32_t, 16> init{};
  // "expand 32-byte k"
  init[0] = 0x61707865;
  init[1] = 0x3320646e;
  init[2] = 0x79622d32;
  init[3] = 0x6b206574;
  for (int i = 0; i < 8; ++i) init[4 + i] = LoadLe32(&p.key[4 * i]);
  init[12] = counter;
  for (int i = 0; i < 3; ++i) init[13 + i] = LoadLe32(&p.nonce[4 * i]);

  std::array<std::uint32_t, 16> x = init;
  for (int round = 0; round < ChaChaParams::kRounds; round += 2) {
    ChaChaQuarterRound(x[0], x[4], x[8], x[12]);
    ChaChaQuarterRound(x[1], x[5], x[9], x[13]);
    ChaChaQuarterRound(x[2], x[6], x[10], x[14]);
    ChaChaQuarterRound(x[3], x[7], x[11], x[15]);
    ChaChaQuarterRound(x[0], x[5], x[10], x[15]);
    ChaChaQuarterRound(x[1], x[6], x[11], x[12]);
    ChaChaQuarterRound(x[2], x[7], x[8], x[13]);
    ChaChaQuarterRound(x[3], x[4], x[9], x[14]);
  }

  ChaChaBlock out{};
  for (int i = 0; i < 16; ++i) {
    std::uint32_t v = x[i] + init[i];
    out[4 * i + 0] = static_cast<std::uint8_t>(v);
    out[4 * i + 1] = static_cast<std::uint8_t>(v >> 8);
    out[4 * i + 2] = static_cast<std::uint8_t>(v >> 16);
    out[4 * i + 3] = static_cast<std::uint8_t>(v >> 24);
  }
  return out;
}

BitStream ChaCha20Stream(const ChaChaParams& p, std::size_t nbits) {
  std::uint64_t blocks = (nbits + 511) / 512;
  if (std::uint64_t{p.initial_counter} + blocks > (std::uint64_t{1} << 32)) {
    throw CapacityError("ChaCha20 stream of " + std::to_string(nbits) +
                        " bits overflows the 32-bit block counter from " +
                        std::to_string(p.initial_counter));
  }
  std::vector<std::uint64_t> words;
  words.reserve(blocks * 8);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    ChaChaBlock block =
        ChaCha20Block(p, static_cast<std::uint32_t>(p.initial_counter + b));
    for (int w = 0; w < 8; ++w) {
      std::uint64_t v = 0;
      for (int k = 0; k < 8; ++k) v = (v << 8) | block[8 * w + k];
      words.push_back(v);
    }
  }
  return BitStream::FromWords(std::move(words), nbits);
}

LabeledStream IngestExternal(const std::filesystem::path& path,
                             FileFormat format, std::string label) {
  return LabeledStream{ReadStream(path, format), std::move(label)};
}

std::string_view SourceKindName(SourceSpec::Kind kind) {
  switch (kind) {
    case SourceSpec::Kind::kLcg:
      return "lcg";
    case SourceSpec::Kind::kChaCha20:
      return "chacha20";
    case SourceSpec::Kind::kExternal:
      return "external";
  }
  return "unknown";
}

BitStream Generate(const SourceSpec& spec) {
  switch (spec.kind()) {
    case SourceSpec::Kind::kLcg:
      return LcgStream(std::get<LcgParams>(spec.params), spec.requested_bits);
    case SourceSpec::Kind::kChaCha20:
      return ChaCha20Stream(std::get<ChaChaParams>(spec.params),
                            spec.requested_bits);
    case SourceSpec::Kind::kExternal: {
      const auto& ext = std::get<ExternalSource>(spec.params);
      BitStream bits = IngestExternal(ext.path, ext.format, spec.label).bits;
      if (spec.requested_bits != 0 && spec.requested_bits < bits.size()) {
        return bits.Prefix(spec.requested_bits);
      }
      return bits;
    }
  }
  throw ParameterError("unknown source kind");
}

}  // namespace randbench
