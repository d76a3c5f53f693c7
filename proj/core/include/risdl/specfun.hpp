// SPDX-License-Identifier: Apache-2.0
//
// risdl: capacity analysis of RIS-assisted opportunistic downlinks
// Copyright (C) 2026 The risdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Gamma-function family: log-gamma, the half-integer gamma ratio and the
// regularized lower incomplete gamma function with its inverse.
//
// All functions are pure and throw risdl::DomainError outside their domain.

#include <cstdint>

namespace risdl::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(q + 1/2) / Gamma(q) for integer q >= 1, evaluated in the log domain.
double gamma_ratio_half(std::int64_t q);

/// Stirling form of gamma_ratio_half: sqrt(q).
double gamma_ratio_half_stirling(std::int64_t q);

/// Gamma(q + n/2) / Gamma(q) for integer q >= 1 and n >= 0.
double gamma_ratio(std::int64_t q, int half_steps);

/// Regularized lower incomplete gamma P(x, a) = gamma(a, x) / Gamma(a).
///
/// Series expansion for x < a + 1, Lentz continued fraction for the upper
/// function otherwise.
double reg_lower_inc_gamma(double x, double a);

/// Regularized upper incomplete gamma Q(x, a) = 1 - P(x, a), computed
/// without cancellation in the upper tail.
double reg_upper_inc_gamma(double x, double a);

/// Density of the standard gamma law with shape a at x, i.e. dP(x, a)/dx.
double gamma_density(double x, double a);

/// Inverse of P(., a): returns x with P(x, a) = y.
///
/// Starts from the Wilson-Hilferty normal approximation and refines with
/// safeguarded Newton steps (bisection fallback) until |P(x, a) - y| <= 1e-12
/// or 100 iterations. y must lie in [0, 1); y == 1 throws because the
/// quantile is unbounded.
double inv_reg_lower_inc_gamma(double y, double a);

}  // namespace risdl::specfun
