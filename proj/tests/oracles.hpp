// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

// Slow reference implementations used as test oracles. None of them share
// code with the library beyond BitStream.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "randbench/bitstream.hpp"

namespace randbench::oracle {

// Double-loop GF(2) product with T[i][j] = seed[(n-1) + i - j].
inline BitStream NaiveToeplitz(const BitStream& seed, std::size_t n, std::size_t m,
                               const BitStream& x) {
  BitWriter w;
  for (std::size_t i = 0; i < m; ++i) {
    bool y = false;
    for (std::size_t j = 0; j < n; ++j) y ^= seed.at(n - 1 + i - j) && x.at(j);
    w.Push(y);
  }
  return std::move(w).Finish();
}

// Direct LZ-76 parse: extend the phrase while it occurs in the text before
// its last symbol.
inline std::size_t BruteForceLz76(std::string_view s) {
  std::size_t c = 0, l = 0;
  while (l < s.size()) {
    std::size_t len = 0;
    while (l + len < s.size() && s.substr(0, l + len).find(s.substr(l, len + 1)) != std::string_view::npos) {
      ++len;
    }
    ++c;
    l += len + 1;
  }
  return c;
}

// Upper regularized incomplete gamma by series / continued fraction.
inline double Igamc(double a, double x) {
  if (x <= 0) return 1.0;
  const double gln = std::lgamma(a);
  if (x < a + 1) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int n = 0; n < 10000; ++n) {
      term *= x / ++ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  double b = x + 1 - a, c = 1e300, d = 1 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

inline double Frequency(const std::vector<std::uint8_t>& e) {
  double s = 0;
  for (auto b : e) s += b ? 1 : -1;
  return std::erfc(std::abs(s) / std::sqrt(static_cast<double>(e.size())) / std::sqrt(2.0));
}

inline double BlockFrequency(const std::vector<std::uint8_t>& e, std::size_t m) {
  const std::size_t blocks = e.size() / m;
  double chi = 0;
  for (std::size_t i = 0; i < blocks; ++i) {
    double pi = 0;
    for (std::size_t j = 0; j < m; ++j) pi += e[i * m + j];
    pi /= static_cast<double>(m);
    chi += (pi - 0.5) * (pi - 0.5);
  }
  chi *= 4.0 * static_cast<double>(m);
  return Igamc(static_cast<double>(blocks) / 2, chi / 2);
}

inline double Runs(const std::vector<std::uint8_t>& e) {
  const double n = static_cast<double>(e.size());
  const double pi = std::accumulate(e.begin(), e.end(), 0.0) / n;
  double v = 1;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) v += e[k] != e[k + 1];
  return std::erfc(std::abs(v - 2 * n * pi * (1 - pi)) / (2 * std::sqrt(2 * n) * pi * (1 - pi)));
}

}  // namespace randbench::oracle
