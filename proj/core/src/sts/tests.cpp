// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/sts/tests.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "randbench/error.hpp"
#include "randbench/sts/special.hpp"

namespace randbench::sts {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

void RequireBits(std::span<const std::uint8_t> bits, std::size_t n,
                 std::string_view what) {
  if (bits.size() < n) {
    throw InputError(std::string(what) + " needs at least " +
                     std::to_string(n) + " bits, got " +
                     std::to_string(bits.size()));
  }
}

double ChiSquare(std::span<const std::uint64_t> observed,
                 std::span<const double> probabilities, double total) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double expected = total * probabilities[i];
    double diff = static_cast<double>(observed[i]) - expected;
    chi2 += diff * diff / expected;
  }
  return chi2;
}

// Overlapping m-bit pattern counts with wrap-around (the sequence is
// extended by its first m-1 bits).
std::vector<std::uint64_t> CyclicPatternCounts(
    std::span<const std::uint8_t> bits, unsigned m) {
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  const std::size_t n = bits.size();
  const std::uint32_t mask = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  std::uint32_t window = 0;
  for (unsigned k = 0; k + 1 < m; ++k) window = (window << 1) | bits[k % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

// Counts of (m-1)-bit patterns from m-bit cyclic counts.
std::vector<std::uint64_t> FoldCounts(const std::vector<std::uint64_t>& counts) {
  std::vector<std::uint64_t> folded(counts.size() / 2);
  for (std::size_t v = 0; v < folded.size(); ++v) {
    folded[v] = counts[2 * v] + counts[2 * v + 1];
  }
  return folded;
}

double Bonferroni(const std::vector<double>& family) {
  if (family.empty()) return 0.0;
  double lowest = *std::min_element(family.begin(), family.end());
  return std::min(1.0, lowest * static_cast<double>(family.size()));
}

std::mutex& FftwPlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

const std::array<TestId, kTestCount>& AllTests() {
  static const std::array<TestId, kTestCount> all = {
      TestId::kFrequency,
      TestId::kBlockFrequency,
      TestId::kRuns,
      TestId::kLongestRun,
      TestId::kMatrixRank,
      TestId::kSpectralDft,
      TestId::kNonOverlappingTemplate,
      TestId::kOverlappingTemplate,
      TestId::kUniversal,
      TestId::kLinearComplexity,
      TestId::kSerial,
      TestId::kApproximateEntropy,
      TestId::kCumulativeSums,
      TestId::kRandomExcursions,
      TestId::kRandomExcursionsVariant,
  };
  return all;
}

std::string_view TestName(TestId id) {
  switch (id) {
    case TestId::kFrequency: return "frequency";
    case TestId::kBlockFrequency: return "block_frequency";
    case TestId::kRuns: return "runs";
    case TestId::kLongestRun: return "longest_run";
    case TestId::kMatrixRank: return "matrix_rank";
    case TestId::kSpectralDft: return "spectral_dft";
    case TestId::kNonOverlappingTemplate: return "nonoverlapping_template";
    case TestId::kOverlappingTemplate: return "overlapping_template";
    case TestId::kUniversal: return "universal";
    case TestId::kLinearComplexity: return "linear_complexity";
    case TestId::kSerial: return "serial";
    case TestId::kApproximateEntropy: return "approximate_entropy";
    case TestId::kCumulativeSums: return "cumulative_sums";
    case TestId::kRandomExcursions: return "random_excursions";
    case TestId::kRandomExcursionsVariant: return "random_excursions_variant";
  }
  return "unknown";
}

TestId ParseTestId(std::string_view name) {
  for (TestId id : AllTests()) {
    if (TestName(id) == name) return id;
  }
  throw ParameterError("unknown test id '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Kernels

double FrequencyP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 1, "frequency");
  std::int64_t sum = 0;
  for (std::uint8_t b : bits) sum += b ? 1 : -1;
  double s_obs = std::abs(static_cast<double>(sum)) /
                 std::sqrt(static_cast<double>(bits.size()));
  return Erfc(s_obs / kSqrt2);
}

double BlockFrequencyP(std::span<const std::uint8_t> bits, std::size_t block) {
  if (block == 0 || block > bits.size()) {
    throw ParameterError("block_frequency block size " +
                         std::to_string(block) + " invalid for " +
                         std::to_string(bits.size()) + " bits");
  }
  const std::size_t blocks = bits.size() / block;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    auto first = bits.begin() + static_cast<std::ptrdiff_t>(i * block);
    std::size_t ones = static_cast<std::size_t>(
        std::count(first, first + static_cast<std::ptrdiff_t>(block), 1));
    double pi = static_cast<double>(ones) / static_cast<double>(block) - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * static_cast<double>(block);
  return Igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

double RunsP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 2, "runs");
  const double n = static_cast<double>(bits.size());
  double pi = static_cast<double>(std::count(bits.begin(), bits.end(), 1)) / n;
  // Frequency prerequisite: a heavily biased sequence is reported as p = 0.
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return 0.0;
  std::size_t runs = 1;
  for (std::size_t k = 1; k < bits.size(); ++k) runs += bits[k] != bits[k - 1];
  double num = std::abs(static_cast<double>(runs) - 2.0 * n * pi * (1.0 - pi));
  double den = 2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi);
  return Erfc(num / den);
}

double LongestRunP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 128, "longest_run");
  const std::size_t n = bits.size();
  std::size_t block;
  std::vector<double> pi;
  unsigned low;  // longest run mapped to class 0 when <= low
  if (n < 6272) {
    block = 8;
    low = 1;
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    block = 128;
    low = 4;
    pi = {0.1174035788, 0.242955959, 0.249363483,
          0.17517706,   0.102701071, 0.112398847};
  } else {
    block = 10000;
    low = 10;
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t classes = pi.size();
  const std::size_t blocks = n / block;
  std::vector<std::uint64_t> nu(classes, 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    unsigned run = 0, longest = 0;
    for (std::size_t j = 0; j < block; ++j) {
      run = bits[i * block + j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    std::size_t cls = longest <= low ? 0 : std::min<std::size_t>(longest - low, classes - 1);
    ++nu[cls];
  }
  double chi2 = ChiSquare(nu, pi, static_cast<double>(blocks));
  return Igamc(static_cast<double>(classes - 1) / 2.0, chi2 / 2.0);
}

unsigned Gf2Rank(std::array<std::uint32_t, 32> rows) {
  unsigned rank = 0;
  for (int col = 31; col >= 0 && rank < 32; --col) {
    std::uint32_t bit = std::uint32_t{1} << col;
    unsigned pivot = rank;
    while (pivot < 32 && !(rows[pivot] & bit)) ++pivot;
    if (pivot == 32) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned r = 0; r < 32; ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

double RankProbability(unsigned r) {
  constexpr int kDim = 32;
  if (r > 32) return 0.0;
  double exponent = static_cast<double>(r) * (2 * kDim - static_cast<double>(r)) -
                    static_cast<double>(kDim) * kDim;
  double product = 1.0;
  for (unsigned i = 0; i < r; ++i) {
    double a = 1.0 - std::pow(2.0, static_cast<double>(i) - kDim);
    double b = 1.0 - std::pow(2.0, static_cast<double>(i) - static_cast<double>(r));
    product *= a * a / b;
  }
  return std::pow(2.0, exponent) * product;
}

double MatrixRankP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 1024, "matrix_rank");
  const std::size_t matrices = bits.size() / 1024;
  std::array<std::uint64_t, 3> freq{};  // full, full-1, lower
  for (std::size_t k = 0; k < matrices; ++k) {
    std::array<std::uint32_t, 32> rows{};
    for (std::size_t i = 0; i < 32; ++i) {
      std::uint32_t row = 0;
      for (std::size_t j = 0; j < 32; ++j) {
        row = (row << 1) | bits[k * 1024 + i * 32 + j];
      }
      rows[i] = row;
    }
    unsigned rank = Gf2Rank(rows);
    ++freq[rank == 32 ? 0 : rank == 31 ? 1 : 2];
  }
  double p32 = RankProbability(32);
  double p31 = RankProbability(31);
  std::array<double, 3> pi = {p32, p31, 1.0 - p32 - p31};
  double chi2 = ChiSquare(freq, pi, static_cast<double>(matrices));
  return ClampProbability(std::exp(-chi2 / 2.0));
}

double SpectralP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 2, "spectral_dft");
  const std::size_t n = bits.size();
  struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
  };
  std::unique_ptr<double, FftwFree> in(
      static_cast<double*>(fftw_malloc(sizeof(double) * n)));
  std::unique_ptr<fftw_complex, FftwFree> out(static_cast<fftw_complex*>(
      fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1))));
  if (!in || !out) throw Error("FFT buffer allocation failed");
  fftw_plan plan;
  {
    std::lock_guard lock(FftwPlannerMutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < n; ++i) in.get()[i] = bits[i] ? 1.0 : -1.0;
  fftw_execute(plan);
  {
    std::lock_guard lock(FftwPlannerMutex());
    fftw_destroy_plan(plan);
  }
  const double dn = static_cast<double>(n);
  const double threshold = std::sqrt(std::log(1.0 / 0.05) * dn);
  std::size_t below = 0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    double re = out.get()[k][0], im = out.get()[k][1];
    if (std::sqrt(re * re + im * im) < threshold) ++below;
  }
  double expected = 0.95 * dn / 2.0;
  double d = (static_cast<double>(below) - expected) /
             std::sqrt(dn * 0.95 * 0.05 / 4.0);
  return Erfc(std::abs(d) / kSqrt2);
}

std::vector<std::uint32_t> AperiodicTemplates(unsigned m) {
  if (m < 2 || m > 21) {
    throw ParameterError("template length must be in [2, 21], got " +
                         std::to_string(m));
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < (std::uint32_t{1} << m); ++t) {
    bool periodic = false;
    for (unsigned shift = 1; shift < m && !periodic; ++shift) {
      // Prefix of length m-shift equals suffix of length m-shift.
      std::uint32_t suffix = t & ((std::uint32_t{1} << (m - shift)) - 1);
      std::uint32_t prefix = t >> shift;
      periodic = suffix == prefix;
    }
    if (!periodic) out.push_back(t);
  }
  return out;
}

std::vector<double> NonOverlappingTemplateP(std::span<const std::uint8_t> bits,
                                            unsigned template_length,
                                            std::size_t blocks) {
  const unsigned m = template_length;
  std::vector<std::uint32_t> templates = AperiodicTemplates(m);
  if (blocks == 0) throw ParameterError("template test needs at least one block");
  const std::size_t block = bits.size() / blocks;
  if (block < m) {
    throw InputError("nonoverlapping_template blocks shorter than template");
  }
  const std::size_t alphabet = std::size_t{1} << m;
  const std::size_t positions = block - m + 1;
  const double mu = static_cast<double>(positions) / static_cast<double>(alphabet);
  const double sigma2 =
      static_cast<double>(block) *
      (1.0 / static_cast<double>(alphabet) -
       (2.0 * m - 1.0) / static_cast<double>(alphabet * alphabet));

  std::vector<double> chi2(templates.size(), 0.0);
  std::vector<std::uint32_t> value(positions);
  std::vector<std::size_t> start(alphabet + 1);
  std::vector<std::uint32_t> order(positions);
  const std::uint32_t mask = static_cast<std::uint32_t>(alphabet - 1);
  for (std::size_t j = 0; j < blocks; ++j) {
    const std::uint8_t* b = bits.data() + j * block;
    std::uint32_t window = 0;
    for (unsigned k = 0; k + 1 < m; ++k) window = (window << 1) | b[k];
    std::fill(start.begin(), start.end(), 0);
    for (std::size_t i = 0; i < positions; ++i) {
      window = ((window << 1) | b[i + m - 1]) & mask;
      value[i] = window;
      ++start[window + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < positions; ++i) {
      order[fill[value[i]]++] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t t = 0; t < templates.size(); ++t) {
      std::uint32_t v = templates[t];
      std::size_t hits = 0, next_free = 0;
      for (std::size_t k = start[v]; k < start[v + 1]; ++k) {
        if (order[k] >= next_free) {
          ++hits;
          next_free = order[k] + m;
        }
      }
      double diff = static_cast<double>(hits) - mu;
      chi2[t] += diff * diff / sigma2;
    }
  }
  std::vector<double> p(templates.size());
  for (std::size_t t = 0; t < templates.size(); ++t) {
    p[t] = Igamc(static_cast<double>(blocks) / 2.0, chi2[t] / 2.0);
  }
  return p;
}

double OverlappingTemplateP(std::span<const std::uint8_t> bits,
                            unsigned template_length, std::size_t block) {
  const unsigned m = template_length;
  if (m < 2 || block < m) {
    throw ParameterError("overlapping_template needs 2 <= m <= block");
  }
  const std::size_t blocks = bits.size() / block;
  if (blocks == 0) throw InputError("overlapping_template: no complete block");
  constexpr std::size_t kClasses = 6;
  std::array<double, kClasses> pi{};
  if (m == 9 && block == 1032) {
    pi = {0.364091, 0.185659, 0.139381, 0.100571, 0.0704323, 0.139865};
  } else {
    double lambda = static_cast<double>(block - m + 1) / std::pow(2.0, m);
    double eta = lambda / 2.0;
    double sum = 0.0;
    for (unsigned u = 0; u + 1 < kClasses; ++u) {
      double p;
      if (u == 0) {
        p = std::exp(-eta);
      } else {
        p = 0.0;
        for (unsigned l = 1; l <= u; ++l) {
          p += std::exp(-eta - u * std::log(2.0) + l * std::log(eta) -
                        std::lgamma(l + 1.0) + std::lgamma(static_cast<double>(u)) -
                        std::lgamma(static_cast<double>(l)) -
                        std::lgamma(static_cast<double>(u - l + 1)));
        }
      }
      pi[u] = p;
      sum += p;
    }
    pi[kClasses - 1] = 1.0 - sum;
  }
  std::array<std::uint64_t, kClasses> nu{};
  for (std::size_t j = 0; j < blocks; ++j) {
    unsigned run = 0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < block; ++i) {
      run = bits[j * block + i] ? run + 1 : 0;
      if (run >= m) ++hits;
    }
    ++nu[std::min(hits, kClasses - 1)];
  }
  double chi2 = ChiSquare(nu, pi, static_cast<double>(blocks));
  return Igamc((kClasses - 1) / 2.0, chi2 / 2.0);
}

unsigned UniversalBlockLengthFor(std::size_t n) {
  static constexpr std::size_t kThresholds[] = {
      387840,    904960,    2068480,   4654080,    10342400,  22753280,
      49643520,  107560960, 231669760, 496435200, 1059061760};
  unsigned l = 0;
  for (unsigned i = 0; i < std::size(kThresholds); ++i) {
    if (n >= kThresholds[i]) l = 6 + i;
  }
  return l;
}

double UniversalP(std::span<const std::uint8_t> bits, unsigned block_length) {
  static constexpr double kExpected[17] = {
      0,         0.73264948, 1.5374383, 2.40160681, 3.31122472, 4.25342659,
      5.2177052, 6.1962507,  7.1836656, 8.1764248,  9.1723243,  10.170032,
      11.168765, 12.168070,  13.167693, 14.167488,  15.167379};
  static constexpr double kVariance[17] = {
      0,     0.690, 1.338, 1.901, 2.358, 2.705, 2.954, 3.125, 3.238,
      3.311, 3.356, 3.384, 3.401, 3.410, 3.416, 3.419, 3.421};
  const unsigned l = block_length;
  if (l < 1 || l > 16) {
    throw ParameterError("universal block length must be in [1, 16]");
  }
  const std::size_t q = 10 * (std::size_t{1} << l);
  const std::size_t total_blocks = bits.size() / l;
  if (total_blocks <= q) throw InputError("universal: no test blocks after initialisation");
  const std::size_t k = total_blocks - q;

  std::vector<std::size_t> last_seen(std::size_t{1} << l, 0);
  auto block_value = [&](std::size_t i) {  // i is 1-based
    std::uint32_t v = 0;
    const std::uint8_t* b = bits.data() + (i - 1) * l;
    for (unsigned j = 0; j < l; ++j) v = (v << 1) | b[j];
    return v;
  };
  for (std::size_t i = 1; i <= q; ++i) last_seen[block_value(i)] = i;
  double sum = 0.0;
  for (std::size_t i = q + 1; i <= q + k; ++i) {
    std::uint32_t v = block_value(i);
    sum += std::log2(static_cast<double>(i - last_seen[v]));
    last_seen[v] = i;
  }
  const double dk = static_cast<double>(k);
  const double fn = sum / dk;
  const double c = 0.7 - 0.8 / l + (4.0 + 32.0 / l) * std::pow(dk, -3.0 / l) / 15.0;
  const double sigma = c * std::sqrt(kVariance[l] / dk);
  return Erfc(std::abs(fn - kExpected[l]) / (kSqrt2 * sigma));
}

std::size_t BerlekampMassey(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  const std::size_t words = n / 64 + 2;
  // Bit i of each register is the coefficient of x^i. window bit i holds
  // s[pos - i].
  std::vector<std::uint64_t> c(words, 0), b(words, 0), t(words), window(words, 0);
  c[0] = b[0] = 1;
  std::size_t l = 0;
  std::ptrdiff_t last = -1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t w = words - 1; w > 0; --w) {
      window[w] = (window[w] << 1) | (window[w - 1] >> 63);
    }
    window[0] = (window[0] << 1) | bits[pos];
    std::uint64_t acc = 0;
    const std::size_t used = std::min(words, pos / 64 + 1);
    for (std::size_t w = 0; w < used; ++w) acc ^= c[w] & window[w];
    if ((std::popcount(acc) & 1) == 0) continue;

    t = c;
    const std::size_t shift = pos - static_cast<std::size_t>(last);
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    for (std::size_t w = words - 1; w + 1 > ws; --w) {
      std::uint64_t v = b[w - ws] << bs;
      if (bs != 0 && w > ws) v |= b[w - ws - 1] >> (64 - bs);
      c[w] ^= v;
      if (w == ws) break;
    }
    if (2 * l <= pos) {
      l = pos + 1 - l;
      last = static_cast<std::ptrdiff_t>(pos);
      b.swap(t);
    }
  }
  return l;
}

double LinearComplexityP(std::span<const std::uint8_t> bits, std::size_t block) {
  if (block < 2) throw ParameterError("linear_complexity block must be >= 2");
  const std::size_t blocks = bits.size() / block;
  if (blocks == 0) throw InputError("linear_complexity: no complete block");
  const double m = static_cast<double>(block);
  const double sign = block % 2 == 0 ? 1.0 : -1.0;  // (-1)^M
  const double mu = m / 2.0 + (9.0 - sign) / 36.0 -
                    (m / 3.0 + 2.0 / 9.0) / std::pow(2.0, m);
  static constexpr std::array<double, 7> kPi = {0.010417, 0.03125, 0.125, 0.5,
                                                0.25,     0.0625,  0.020833};
  std::array<std::uint64_t, 7> nu{};
  for (std::size_t j = 0; j < blocks; ++j) {
    double lc = static_cast<double>(
        BerlekampMassey(bits.subspan(j * block, block)));
    double t = sign * (lc - mu) + 2.0 / 9.0;
    std::size_t cls = t <= -2.5 ? 0
                      : t <= -1.5 ? 1
                      : t <= -0.5 ? 2
                      : t <= 0.5  ? 3
                      : t <= 1.5  ? 4
                      : t <= 2.5  ? 5
                                  : 6;
    ++nu[cls];
  }
  double chi2 = ChiSquare(nu, kPi, static_cast<double>(blocks));
  return Igamc(3.0, chi2 / 2.0);
}

namespace {

double Psi2(const std::vector<std::uint64_t>& counts, std::size_t n) {
  double sum = 0.0;
  for (std::uint64_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  double dn = static_cast<double>(n);
  return static_cast<double>(counts.size()) / dn * sum - dn;
}

double Phi(const std::vector<std::uint64_t>& counts, std::size_t n) {
  double sum = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / static_cast<double>(n);
    sum += p * std::log(p);
  }
  return sum;
}

}  // namespace

std::array<double, 2> SerialP(std::span<const std::uint8_t> bits, unsigned m) {
  if (m < 2 || m > 24) throw ParameterError("serial m must be in [2, 24]");
  RequireBits(bits, 1, "serial");
  const std::size_t n = bits.size();
  auto counts_m = CyclicPatternCounts(bits, m);
  auto counts_m1 = FoldCounts(counts_m);
  auto counts_m2 = FoldCounts(counts_m1);
  double psi_m = Psi2(counts_m, n);
  double psi_m1 = Psi2(counts_m1, n);
  double psi_m2 = m >= 2 ? Psi2(counts_m2, n) : 0.0;
  double del1 = psi_m - psi_m1;
  double del2 = psi_m - 2.0 * psi_m1 + psi_m2;
  return {Igamc(std::pow(2.0, m - 2.0), del1 / 2.0),
          Igamc(std::pow(2.0, m - 3.0), del2 / 2.0)};
}

double ApproximateEntropyP(std::span<const std::uint8_t> bits, unsigned m) {
  if (m < 1 || m > 24) throw ParameterError("approximate_entropy m must be in [1, 24]");
  RequireBits(bits, 1, "approximate_entropy");
  const std::size_t n = bits.size();
  auto counts_next = CyclicPatternCounts(bits, m + 1);
  auto counts_m = FoldCounts(counts_next);
  double apen = Phi(counts_m, n) - Phi(counts_next, n);
  double chi2 = 2.0 * static_cast<double>(n) * (std::log(2.0) - apen);
  return Igamc(std::pow(2.0, m - 1.0), chi2 / 2.0);
}

namespace {

double CusumP(std::int64_t z, std::size_t length) {
  const double n = static_cast<double>(length);
  const double dz = static_cast<double>(z);
  const double root = std::sqrt(n);
  // Summation bounds truncate toward zero, as in the reference code.
  double sum1 = 0.0;
  for (auto k = static_cast<std::int64_t>((-n / dz + 1.0) / 4.0);
       k <= static_cast<std::int64_t>((n / dz - 1.0) / 4.0); ++k) {
    sum1 += NormalCdf((4.0 * k + 1.0) * dz / root) -
            NormalCdf((4.0 * k - 1.0) * dz / root);
  }
  double sum2 = 0.0;
  for (auto k = static_cast<std::int64_t>((-n / dz - 3.0) / 4.0);
       k <= static_cast<std::int64_t>((n / dz - 1.0) / 4.0); ++k) {
    sum2 += NormalCdf((4.0 * k + 3.0) * dz / root) -
            NormalCdf((4.0 * k + 1.0) * dz / root);
  }
  return ClampProbability(1.0 - sum1 + sum2);
}

}  // namespace

std::array<double, 2> CumulativeSumsP(std::span<const std::uint8_t> bits) {
  RequireBits(bits, 1, "cumulative_sums");
  std::int64_t s = 0, forward = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    forward = std::max<std::int64_t>(forward, std::abs(s));
  }
  std::int64_t r = 0, backward = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    r += *it ? 1 : -1;
    backward = std::max<std::int64_t>(backward, std::abs(r));
  }
  return {CusumP(forward, bits.size()), CusumP(backward, bits.size())};
}

ExcursionOutcome RandomExcursions(std::span<const std::uint8_t> bits) {
  constexpr int kStates[8] = {-4, -3, -2, -1, 1, 2, 3, 4};
  ExcursionOutcome out;
  std::array<std::array<std::uint64_t, 6>, 8> nu{};
  std::array<std::uint64_t, 9> visits{};  // index state + 4
  auto close_cycle = [&] {
    for (int i = 0; i < 8; ++i) {
      std::uint64_t v = visits[static_cast<std::size_t>(kStates[i] + 4)];
      ++nu[static_cast<std::size_t>(i)][std::min<std::uint64_t>(v, 5)];
    }
    visits.fill(0);
    ++out.cycles;
  };
  std::int64_t s = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    if (s == 0) {
      close_cycle();
    } else if (s >= -4 && s <= 4) {
      ++visits[static_cast<std::size_t>(s + 4)];
    }
  }
  if (s != 0) close_cycle();
  if (out.cycles == 0) return out;

  const double j = static_cast<double>(out.cycles);
  for (int i = 0; i < 8; ++i) {
    double x = std::abs(kStates[i]);
    std::array<double, 6> pi{};
    double stay = 1.0 - 1.0 / (2.0 * x);
    pi[0] = stay;
    for (int k = 1; k <= 4; ++k) pi[k] = 1.0 / (4.0 * x * x) * std::pow(stay, k - 1);
    pi[5] = 1.0 / (2.0 * x) * std::pow(stay, 4);
    double chi2 = ChiSquare(nu[static_cast<std::size_t>(i)], pi, j);
    out.p_values.push_back(Igamc(2.5, chi2 / 2.0));
  }
  return out;
}

ExcursionOutcome RandomExcursionsVariant(std::span<const std::uint8_t> bits) {
  ExcursionOutcome out;
  std::array<std::uint64_t, 19> visits{};  // index state + 9
  std::int64_t s = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    if (s == 0) ++out.cycles;
    if (s >= -9 && s <= 9) ++visits[static_cast<std::size_t>(s + 9)];
  }
  if (s != 0) ++out.cycles;
  if (out.cycles == 0) return out;
  const double j = static_cast<double>(out.cycles);
  for (int x = -9; x <= 9; ++x) {
    if (x == 0) continue;
    double xi = static_cast<double>(visits[static_cast<std::size_t>(x + 9)]);
    out.p_values.push_back(
        Erfc(std::abs(xi - j) / std::sqrt(2.0 * j * (4.0 * std::abs(x) - 2.0))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Registry

std::size_t MinimumLength(TestId id, const StsProfile& profile) {
  switch (id) {
    case TestId::kFrequency: return 1;
    case TestId::kBlockFrequency: return 1;
    case TestId::kRuns: return 2;
    case TestId::kLongestRun: return 128;
    case TestId::kMatrixRank: return 38 * 1024;
    case TestId::kSpectralDft: return 1000;
    case TestId::kNonOverlappingTemplate: {
      std::size_t m = profile.nonoverlapping_template_length;
      return 8 * (5 * (std::size_t{1} << std::min<std::size_t>(m, 30)) + m - 1);
    }
    case TestId::kOverlappingTemplate: return 1000000;
    case TestId::kUniversal: {
      std::size_t l = profile.universal_block_length;
      if (l == 0) return 387840;
      return l * 1010 * (std::size_t{1} << std::min<std::size_t>(l, 30));
    }
    case TestId::kLinearComplexity:
      return std::max<std::size_t>(1000000, 200 * std::size_t{profile.linear_complexity_block});
    case TestId::kSerial:
      return std::size_t{1} << std::min(profile.serial_length + 3, 62U);
    case TestId::kApproximateEntropy:
      return std::size_t{1} << std::min(profile.approximate_entropy_length + 6, 62U);
    case TestId::kCumulativeSums: return 1;
    case TestId::kRandomExcursions:
    case TestId::kRandomExcursionsVariant: return 1000000;
  }
  return 0;
}

std::size_t RecommendedLength(TestId id) {
  switch (id) {
    case TestId::kFrequency:
    case TestId::kBlockFrequency:
    case TestId::kRuns:
    case TestId::kCumulativeSums: return 100;
    case TestId::kLongestRun: return 128;
    case TestId::kMatrixRank: return 38912;
    case TestId::kSpectralDft: return 1000;
    case TestId::kUniversal: return 387840;
    default: return 1000000;
  }
}

namespace {

void ValidateProfile(TestId id, const StsProfile& p) {
  auto fail = [&](const std::string& what) {
    throw ParameterError(std::string(TestName(id)) + ": " + what);
  };
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) fail("alpha must be in (0, 1)");
  switch (id) {
    case TestId::kBlockFrequency:
      if (p.block_frequency_block == 0) fail("block size must be positive");
      break;
    case TestId::kNonOverlappingTemplate:
      if (p.nonoverlapping_template_length < 2 || p.nonoverlapping_template_length > 21)
        fail("template length must be in [2, 21]");
      break;
    case TestId::kOverlappingTemplate:
      if (p.overlapping_template_length < 2 ||
          p.overlapping_template_length > p.overlapping_block)
        fail("template length must be in [2, block]");
      break;
    case TestId::kUniversal:
      if (p.universal_block_length > 16) fail("L must be in [1, 16] (0 = auto)");
      break;
    case TestId::kLinearComplexity:
      if (p.linear_complexity_block < 2) fail("block must be >= 2");
      break;
    case TestId::kSerial:
      if (p.serial_length < 2 || p.serial_length > 24) fail("m must be in [2, 24]");
      break;
    case TestId::kApproximateEntropy:
      if (p.approximate_entropy_length < 1 || p.approximate_entropy_length > 24)
        fail("m must be in [1, 24]");
      break;
    default:
      break;
  }
}

}  // namespace

TestResult RunTest(TestId id, const BitStream& stream, const StsProfile& profile) {
  std::vector<std::uint8_t> bits = stream.Unpack();
  return RunTest(id, std::span<const std::uint8_t>(bits), profile);
}

TestResult RunTest(TestId id, std::span<const std::uint8_t> bits,
                   const StsProfile& profile) {
  ValidateProfile(id, profile);
  TestResult r;
  r.test = id;
  r.alpha = profile.alpha;
  const std::size_t n = bits.size();
  r.params_used["n"] = static_cast<std::int64_t>(n);

  switch (id) {
    case TestId::kBlockFrequency:
      r.params_used["M"] = profile.block_frequency_block;
      if (profile.block_frequency_block > n) {
        throw ParameterError("block_frequency: block size " +
                             std::to_string(profile.block_frequency_block) +
                             " exceeds stream of " + std::to_string(n) + " bits");
      }
      break;
    case TestId::kLongestRun:
      r.params_used["M"] = n < 6272 ? 8 : n < 750000 ? 128 : 10000;
      break;
    case TestId::kNonOverlappingTemplate:
      r.params_used["m"] = profile.nonoverlapping_template_length;
      r.params_used["N"] = 8;
      break;
    case TestId::kOverlappingTemplate:
      r.params_used["m"] = profile.overlapping_template_length;
      r.params_used["M"] = profile.overlapping_block;
      break;
    case TestId::kUniversal: {
      unsigned l = profile.universal_block_length != 0
                       ? profile.universal_block_length
                       : UniversalBlockLengthFor(n);
      r.params_used["L"] = l;
      r.params_used["Q"] = l == 0 ? 0 : 10 * (std::int64_t{1} << l);
      break;
    }
    case TestId::kLinearComplexity:
      r.params_used["M"] = profile.linear_complexity_block;
      break;
    case TestId::kSerial:
      r.params_used["m"] = profile.serial_length;
      break;
    case TestId::kApproximateEntropy:
      r.params_used["m"] = profile.approximate_entropy_length;
      break;
    default:
      break;
  }

  const std::size_t minimum = MinimumLength(id, profile);
  if (n < minimum) {
    r.applicable = false;
    r.note = "needs at least " + std::to_string(minimum) + " bits";
    return r;
  }

  r.applicable = true;
  switch (id) {
    case TestId::kFrequency:
      r.p_values = {FrequencyP(bits)};
      break;
    case TestId::kBlockFrequency:
      r.p_values = {BlockFrequencyP(bits, profile.block_frequency_block)};
      break;
    case TestId::kRuns:
      r.p_values = {RunsP(bits)};
      break;
    case TestId::kLongestRun:
      r.p_values = {LongestRunP(bits)};
      break;
    case TestId::kMatrixRank:
      r.p_values = {MatrixRankP(bits)};
      break;
    case TestId::kSpectralDft:
      r.p_values = {SpectralP(bits)};
      break;
    case TestId::kNonOverlappingTemplate:
      r.family_p_values =
          NonOverlappingTemplateP(bits, profile.nonoverlapping_template_length);
      r.p_values = {Bonferroni(r.family_p_values)};
      break;
    case TestId::kOverlappingTemplate:
      r.p_values = {OverlappingTemplateP(bits, profile.overlapping_template_length,
                                         profile.overlapping_block)};
      break;
    case TestId::kUniversal:
      r.p_values = {UniversalP(bits, static_cast<unsigned>(r.params_used["L"]))};
      break;
    case TestId::kLinearComplexity:
      r.p_values = {LinearComplexityP(bits, profile.linear_complexity_block)};
      break;
    case TestId::kSerial: {
      auto p = SerialP(bits, profile.serial_length);
      r.p_values = {p[0], p[1]};
      break;
    }
    case TestId::kApproximateEntropy:
      r.p_values = {ApproximateEntropyP(bits, profile.approximate_entropy_length)};
      break;
    case TestId::kCumulativeSums: {
      auto p = CumulativeSumsP(bits);
      r.p_values = {p[0], p[1]};
      break;
    }
    case TestId::kRandomExcursions:
    case TestId::kRandomExcursionsVariant: {
      ExcursionOutcome e = id == TestId::kRandomExcursions
                               ? RandomExcursions(bits)
                               : RandomExcursionsVariant(bits);
      r.params_used["J"] = static_cast<std::int64_t>(e.cycles);
      double needed = std::max(500.0, 0.005 * std::sqrt(static_cast<double>(n)));
      if (static_cast<double>(e.cycles) < needed) {
        r.applicable = false;
        r.note = "only " + std::to_string(e.cycles) + " cycles (needs " +
                 std::to_string(static_cast<std::size_t>(needed)) + ")";
        return r;
      }
      r.family_p_values = std::move(e.p_values);
      r.p_values = {Bonferroni(r.family_p_values)};
      break;
    }
  }
  r.pass = std::all_of(r.p_values.begin(), r.p_values.end(),
                       [&](double p) { return p >= profile.alpha; });
  return r;
}

}  // namespace randbench::sts
