// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/sts/suite.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "randbench/error.hpp"
#include "randbench/sts/special.hpp"

namespace randbench::sts {
namespace {

TestResult GuardedRun(TestId id, std::span<const std::uint8_t> bits,
                      const StsProfile& profile) {
  try {
    return RunTest(id, bits, profile);
  } catch (const std::exception& e) {
    TestResult r;
    r.test = id;
    r.alpha = profile.alpha;
    r.error = true;
    r.note = e.what();
    return r;
  }
}

}  // namespace

SuiteReport RunSuite(const BitStream& stream, const StsProfile& profile,
                     StreamInfo info, unsigned threads) {
  std::vector<std::uint8_t> bits = stream.Unpack();
  std::span<const std::uint8_t> view(bits);
  SuiteReport report;
  info.length = stream.size();
  report.stream = std::move(info);

  if (threads <= 1) {
    for (TestId id : AllTests()) report.results.push_back(GuardedRun(id, view, profile));
  } else {
    std::vector<std::future<TestResult>> pending;
    for (TestId id : AllTests()) {
      pending.push_back(std::async(std::launch::async, GuardedRun, id, view,
                                   std::cref(profile)));
    }
    for (auto& f : pending) report.results.push_back(f.get());
  }
  report.all_pass = std::all_of(
      report.results.begin(), report.results.end(), [](const TestResult& r) {
        return !r.error && (!r.applicable || r.pass);
      });
  return report;
}

Cell CellOf(const TestResult& result) {
  if (result.error) return Cell::kError;
  if (!result.applicable) return Cell::kInapplicable;
  return result.pass ? Cell::kPass : Cell::kFail;
}

PassMatrix BuildMatrix(const std::vector<SuiteReport>& reports) {
  if (reports.empty()) throw ParameterError("pass matrix needs at least one report");
  PassMatrix matrix;
  for (TestId id : AllTests()) matrix.columns.emplace_back(TestName(id));
  for (const SuiteReport& report : reports) {
    matrix.rows.push_back(report.stream.label);
    std::vector<Cell> row;
    std::vector<std::vector<double>> ps;
    for (const TestResult& r : report.results) {
      row.push_back(CellOf(r));
      ps.push_back(r.p_values);
    }
    matrix.cells.push_back(std::move(row));
    matrix.p_values.push_back(std::move(ps));
  }
  return matrix;
}

std::string RenderMatrix(const PassMatrix& matrix) {
  std::size_t label_width = 6;
  for (const auto& r : matrix.rows) label_width = std::max(label_width, r.size());
  std::ostringstream out;
  // Column headers are numbered; a legend follows the grid.
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < matrix.columns.size(); ++c) {
    out << ' ' << (c + 1 < 10 ? " " : "") << c + 1;
  }
  out << '\n';
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out << matrix.rows[r] << std::string(label_width - matrix.rows[r].size(), ' ');
    for (Cell cell : matrix.cells[r]) {
      char ch = cell == Cell::kPass           ? 'P'
                : cell == Cell::kFail         ? 'F'
                : cell == Cell::kInapplicable ? '-'
                                              : 'E';
      out << "  " << ch;
    }
    out << '\n';
  }
  out << '\n';
  for (std::size_t c = 0; c < matrix.columns.size(); ++c) {
    out << (c + 1 < 10 ? " " : "") << c + 1 << " " << matrix.columns[c] << '\n';
  }
  out << "P pass  F fail  - not applicable  E error\n";
  return out.str();
}

std::vector<ProportionRow> RunProportion(const std::vector<BitStream>& streams,
                                         const StsProfile& profile) {
  std::vector<ProportionRow> rows;
  std::vector<std::vector<double>> all_p(kTestCount);
  for (TestId id : AllTests()) {
    ProportionRow row;
    row.test = id;
    rows.push_back(row);
  }
  for (const BitStream& s : streams) {
    SuiteReport report = RunSuite(s, profile);
    for (std::size_t t = 0; t < kTestCount; ++t) {
      const TestResult& r = report.results[t];
      if (!r.applicable) continue;
      ++rows[t].sequences;
      rows[t].passed += r.pass ? 1 : 0;
      all_p[t].insert(all_p[t].end(), r.p_values.begin(), r.p_values.end());
    }
  }
  for (std::size_t t = 0; t < kTestCount; ++t) {
    ProportionRow& row = rows[t];
    if (row.sequences == 0) continue;
    double s = static_cast<double>(row.sequences);
    row.proportion = static_cast<double>(row.passed) / s;
    double p_hat = 1.0 - profile.alpha;
    row.lower_bound = p_hat - 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / s);
    std::array<double, 10> bins{};
    for (double p : all_p[t]) bins[std::min<std::size_t>(static_cast<std::size_t>(p * 10.0), 9)] += 1.0;
    double expected = static_cast<double>(all_p[t].size()) / 10.0;
    double chi2 = 0.0;
    for (double b : bins) chi2 += (b - expected) * (b - expected) / expected;
    row.uniformity_p = Igamc(4.5, chi2 / 2.0);
  }
  return rows;
}

}  // namespace randbench::sts
