// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace randbench::sts {

// Regularized upper incomplete gamma Q(a, x) (SP 800-22's igamc).
double Igamc(double a, double x);

// Complementary error function.
double Erfc(double x);

// Standard normal CDF.
double NormalCdf(double x);

// Clamp a p-value into [0, 1] (guards against rounding just outside).
double ClampProbability(double p);

}  // namespace randbench::sts
