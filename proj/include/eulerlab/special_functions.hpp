// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "eulerlab/numerics.hpp"

namespace eulerlab::special {

/// Truncation controls for the Euler-transformed eta series.
struct EvalOptions {
  double tol = 1e-13;
  int max_terms = 128;
};

/// Largest supported `max_terms`; the binomial table is built to this size.
inline constexpr int kMaxEulerTerms = 128;

/// Gamma function. Lanczos (g = 7, 9 terms) for Re(s) >= 1/2, reflection
/// otherwise. Throws Error{kPole} at 0, -1, -2, ...
Complex gamma(Complex s);

/// Alternating zeta function (Dirichlet eta), entire. Evaluated by the
/// Euler transformation
///   sum_{n>=0} 2^-(n+1) sum_{k=0..n} (-1)^k C(n,k) (k+1)^-s,
/// stopping once three consecutive outer terms fall below `opts.tol`.
Complex eta(Complex s, const EvalOptions& opts = {});

/// Termwise derivative of the same series.
Complex eta_prime(Complex s, const EvalOptions& opts = {});

/// Riemann zeta as eta(s) / (1 - 2^(1-s)).
/// Throws Error{kPole} at s = 1 and Error{kIllConditioned} within 1e-6 of
/// the other zeros 1 + 2 pi i k / ln 2 of the denominator.
Complex zeta(Complex s, const EvalOptions& opts = {});

/// Derivative of zeta from the same eta / eta' pair. Errors as zeta.
Complex zeta_prime(Complex s, const EvalOptions& opts = {});

/// zeta(s) - 1/(s-1), analytic at s = 1 where it equals Euler's constant.
/// Inside |s-1| < 0.05 the value is interpolated along the line through 1
/// and s from samples at distances 0.05 and 0.1 on both sides of 1.
Complex zeta_minus_pole(Complex s, const EvalOptions& opts = {});

/// Riemann zeta by Euler-Maclaurin summation of the Dirichlet series.
/// Shares no code with the eta route and serves as its independent check.
/// Throws Error{kPole} at s = 1.
Complex zeta_euler_maclaurin(Complex s);

}  // namespace eulerlab::special
