// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "randbench/error.hpp"
#include "randbench/toeplitz.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace randbench {
namespace {

using testing::RandomStream;

BitStream Xor(const BitStream& a, const BitStream& b) {
  auto x = a.Unpack(), y = b.Unpack();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] ^= y[i];
  return BitStream::FromBits(x);
}

TEST(ToeplitzSpecTest, Validation) {
  EXPECT_THROW(ToeplitzSpec(3, 3, FromAscii("10110"), "t"), ParameterError);
  EXPECT_THROW(ToeplitzSpec(3, 0, FromAscii("10"), "t"), ParameterError);
  EXPECT_THROW(ToeplitzSpec(3, 2, FromAscii("10110"), "t"), ParameterError);
  EXPECT_NO_THROW(ToeplitzSpec(3, 2, FromAscii("1011"), "t"));
}

TEST(ToeplitzEntryTest, SmallExample) {
  // m=2, n=3 uses seed bits 0..3 only.
  ToeplitzSpec spec(3, 2, FromAscii("1011"), "hand");
  std::string rows;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) rows += ToeplitzEntry(spec, i, j) ? '1' : '0';
    rows += ' ';
  }
  EXPECT_EQ(rows, "101 110 ");
  EXPECT_THROW(ToeplitzEntry(spec, 2, 0), ParameterError);
  EXPECT_THROW(ToeplitzEntry(spec, 0, 3), ParameterError);
  EXPECT_EQ(ToAscii(ExtractBlock(spec, FromAscii("110"))), "10");
}

TEST(ToeplitzEntryTest, ConstantAlongDiagonals) {
  ToeplitzSpec spec = ToeplitzSpec::FromMt19937(40, 17, 5);
  for (std::size_t i = 0; i + 1 < 17; ++i) {
    for (std::size_t j = 0; j + 1 < 40; ++j) {
      ASSERT_EQ(ToeplitzEntry(spec, i + 1, j + 1), ToeplitzEntry(spec, i, j));
    }
  }
  ToeplitzSpec zero(40, 17, BitStream::FromBits(std::vector<std::uint8_t>(56, 0)), "zero");
  EXPECT_EQ(ExtractBlock(zero, FromAscii(std::string(40, '1'))).CountOnes(), 0u);
}

TEST(ToeplitzHasherTest, WrongBlockLength) {
  ToeplitzHasher h(ToeplitzSpec::FromMt19937(64, 16, 1));
  EXPECT_THROW(h.HashBlock(FromAscii("0101")), ParameterError);
}

TEST(ToeplitzHasherTest, MatchesNaiveOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 200;
    const std::size_t m = 1 + rng() % (n - 1);
    BitStream seed = RandomStream(rng, n + m - 1);
    ToeplitzSpec spec(n, m, seed, "random");
    BitStream x = RandomStream(rng, n);
    ASSERT_EQ(ToeplitzHasher(spec).HashBlock(x), oracle::NaiveToeplitz(seed, n, m, x))
        << "n=" << n << " m=" << m;
  }
}

TEST(ToeplitzHasherTest, Linearity) {
  std::mt19937_64 rng(22);
  ToeplitzHasher h(ToeplitzSpec::FromMt19937(257, 63, 9));
  EXPECT_EQ(h.HashBlock(BitStream::FromBits(std::vector<std::uint8_t>(257, 0))).CountOnes(), 0u);
  for (int trial = 0; trial < 1000; ++trial) {
    BitStream x = RandomStream(rng, 257), y = RandomStream(rng, 257);
    ASSERT_EQ(h.HashBlock(Xor(x, y)), Xor(h.HashBlock(x), h.HashBlock(y)));
  }
}

TEST(ToeplitzHasherTest, DefaultGeometryReport) {
  std::mt19937_64 rng(23);
  BitStream raw = RandomStream(rng, 5'000'000);
  ToeplitzSpec spec = ToeplitzSpec::FromMt19937(4000, 960, 19937);
  ExtractionResult r = ToeplitzHasher(spec).HashStream(raw);
  EXPECT_EQ(r.report.blocks_processed, 1250u);
  EXPECT_EQ(r.report.output_bits, 1'200'000u);
  EXPECT_EQ(r.report.discarded_tail_bits, 0u);
  EXPECT_DOUBLE_EQ(r.report.compression_ratio, 0.24);
  EXPECT_EQ(r.report.seed_value, 19937u);
  EXPECT_EQ(r.output.size(), 1'200'000u);
  EXPECT_EQ(r.output, ExtractStream(spec, raw, 1'200'000).output);
}

TEST(ToeplitzHasherTest, TailTargetAndShortInput) {
  std::mt19937_64 rng(24);
  ToeplitzSpec spec = ToeplitzSpec::FromMt19937(100, 30, 3);
  ToeplitzHasher h(spec);
  BitStream one = RandomStream(rng, 100);
  EXPECT_EQ(h.HashStream(one).output, h.HashBlock(one));

  ExtractionResult r = h.HashStream(RandomStream(rng, 345));
  EXPECT_EQ(r.report.blocks_processed, 3u);
  EXPECT_EQ(r.report.discarded_tail_bits, 45u);
  EXPECT_EQ(r.report.output_bits, 90u);

  ExtractionResult zero = h.HashStream(RandomStream(rng, 345), 0);
  EXPECT_EQ(zero.output.size(), 0u);
  EXPECT_EQ(zero.report.blocks_processed, 3u);

  EXPECT_THROW(h.HashStream(RandomStream(rng, 99)), InputError);
  EXPECT_THROW(h.HashStream(RandomStream(rng, 200), 61), InputError);
}

TEST(ToeplitzHasherTest, BlockPermutationPermutesOutputs) {
  std::mt19937_64 rng(25);
  const std::size_t n = 96, m = 40, blocks = 12;
  ToeplitzHasher h(ToeplitzSpec::FromMt19937(n, m, 77));
  std::vector<BitStream> in;
  for (std::size_t b = 0; b < blocks; ++b) in.push_back(RandomStream(rng, n));
  std::vector<std::size_t> perm(blocks);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  BitWriter a, b;
  for (std::size_t i = 0; i < blocks; ++i) {
    a.Append(in[i]);
    b.Append(in[perm[i]]);
  }
  BitStream out_a = h.HashStream(std::move(a).Finish()).output;
  BitStream out_b = h.HashStream(std::move(b).Finish()).output;
  for (std::size_t i = 0; i < blocks; ++i) {
    ASSERT_EQ(out_b.Slice(i * m, m), out_a.Slice(perm[i] * m, m));
  }
}

TEST(ToeplitzHasherTest, ParallelEqualsSequential) {
  std::mt19937_64 rng(26);
  BitStream raw = RandomStream(rng, 400'123);
  ToeplitzHasher h(ToeplitzSpec::FromMt19937(4000, 960, 1));
  ExtractionResult seq = h.HashStream(raw, 90'000);
  for (unsigned threads : {2U, 3U, 8U}) {
    ExtractionResult par = h.HashStream(raw, 90'000, threads);
    EXPECT_EQ(par.output, seq.output) << threads;
    EXPECT_EQ(par.report.blocks_processed, seq.report.blocks_processed);
  }
}

TEST(Mt19937BitsTest, MsbFirstWords) {
  std::mt19937 mt(42);
  const std::uint32_t first = mt(), second = mt();
  BitStream bits = Mt19937Bits(42, 40);
  EXPECT_EQ(bits.Extract(0, 32), first);
  EXPECT_EQ(bits.Extract(32, 8), second >> 24);
}

}  // namespace
}  // namespace randbench
