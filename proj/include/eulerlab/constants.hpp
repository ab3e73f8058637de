// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace eulerlab::constants {

enum class Method { kSeries, kEulerFormula, kLimitRatio, kClosedForm, kZetaRoute };

std::string_view method_name(Method method);

struct ConstantEstimate {
  double value = 0.0;
  Method method = Method::kClosedForm;
  std::int64_t terms_or_n = 1;
  std::optional<double> error_bound;
};

// Euler's constant.

/// sum_{n=1..N} (1/n - ln((n+1)/n)), error bound 1/(2N).
ConstantEstimate euler_gamma_series(std::int64_t n_terms);

/// ln(4/pi) + 2 sum_{n=2..N} (-1)^n zeta(n) / (2^n n). Geometric convergence;
/// this is the reference value for gamma throughout the library.
ConstantEstimate euler_formula_gamma(std::int64_t n_terms = 50);

/// H_N - ln N.
ConstantEstimate euler_gamma_limit(std::int64_t n);

/// zeta(s) - 1/(s-1) at s = 1.
ConstantEstimate euler_gamma_zeta_route();

// ln(4/pi).

/// Alternating partial sum of (1/n - ln((n+1)/n)); the bound is the first
/// omitted term.
ConstantEstimate ln_4_over_pi(std::int64_t n_terms);
ConstantEstimate ln_4_over_pi_closed_form();

/// prod_{n=1..N} ((n+1)/n)^((-1)^(n-1)), tending to pi/2.
double wallis_partial(std::int64_t n_factors);

// Glaisher-Kinkelin constant A.

/// 1^1 2^2 ... n^n / (n^(n^2/2 + n/2 + 1/12) e^(-n^2/4)), in log space.
ConstantEstimate glaisher_limit(std::int64_t n);

/// exp(1/12 - zeta'(-1)); the reference route for A.
ConstantEstimate glaisher_zeta();

// Stirling.

/// n! / (n^(n+1/2) e^-n), decreasing towards sqrt(2 pi).
double stirling_ratio(std::int64_t n);

// ln 2.

/// Partial sum of the alternating harmonic series.
ConstantEstimate ln2_series(std::int64_t n_terms);
/// eta(1).
ConstantEstimate ln2_zeta_route();

// Lookup by name, as used by the command line.

std::optional<Method> parse_method(std::string_view name);

/// name in {gamma, ln4pi, glaisher, sqrt2pi, ln2}. An empty method picks the
/// constant's reference route, an empty n the route's default term count.
/// Throws Error{kInvalidArgument} for unknown names or unsupported methods.
ConstantEstimate estimate(std::string_view name, std::optional<Method> method,
                          std::optional<std::int64_t> n);

}  // namespace eulerlab::constants
