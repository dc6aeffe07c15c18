// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "randbench/borel.hpp"
#include "randbench/lz76.hpp"
#include "randbench/sts/suite.hpp"
#include "randbench/toeplitz.hpp"

namespace randbench::bench {

nlohmann::json ToJson(const sts::TestResult& result);
nlohmann::json ToJson(const sts::SuiteReport& report);
nlohmann::json ToJson(const Lz76Report& report);
// Per-word counts are included up to m = 8.
nlohmann::json ToJson(const BorelReport& report);
nlohmann::json ToJson(const ExtractionReport& report);

// Inverse of ToJson(TestResult); throws FormatError on a malformed object.
sts::TestResult TestResultFromJson(const nlohmann::json& j);

}  // namespace randbench::bench
