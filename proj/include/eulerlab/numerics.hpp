// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace eulerlab {

using Complex = std::complex<double>;

namespace numerics {

/// Outcome of any integration routine. `converged` implies
/// `abs_error_estimate <= tol` for the tolerance the routine was given.
struct QuadratureResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Partial sum of a series. `remainder_bound` is empty when no bound is known.
struct SeriesResult {
  Complex value{};
  std::int64_t terms_used = 0;
  std::optional<double> remainder_bound;
  bool converged = false;
};

using Integrand1D = std::function<Complex(double)>;
using Integrand2D = std::function<Complex(double, double)>;
using SeriesTerm = std::function<Complex(std::int64_t)>;

/// Finest tanh-sinh level; the step at level L is 2^-L.
inline constexpr int kMaxTanhSinhLevel = 12;

/// Smallest truncation point for semi-infinite integrals.
inline constexpr double kMinTruncation = 50.0;

/// Tanh-sinh quadrature on (a, b). Endpoint singularities of integrable
/// (algebraic or logarithmic) type are fine; f is never evaluated at a or b.
/// Throws Error{kIntegrandInvalid} if f returns NaN, Error{kInvalidArgument}
/// unless a < b and tol > 0. Non-convergence is reported, not thrown.
QuadratureResult integrate_finite(const Integrand1D& f, double a, double b,
                                  double tol);

/// Per-level estimates of the tanh-sinh sequence for (a, b): element L holds
/// the level-L value and |I_L - I_{L-1}| (infinity at level 0).
struct TanhSinhLevel {
  int level = 0;
  Complex value{};
  double error_estimate = 0.0;
};
std::vector<TanhSinhLevel> tanh_sinh_levels(const Integrand1D& f, double a,
                                            double b, int max_level);

/// Truncation point T >= kMinTruncation at which
/// e^-T T^(p+1) (1 + (p+1)/T) < tol / 10.
double semi_infinite_truncation(double tol, double decay_exponent_hint);

/// Integral over (0, inf) of an integrand decaying like e^-t t^p. The tail
/// beyond the truncation point is bounded analytically and folded into the
/// error estimate.
QuadratureResult integrate_semi_infinite(const Integrand1D& f, double tol,
                                         double decay_exponent_hint);

/// Marks an integrand of the form f(x, y) = g(xy); integrate_unit_square
/// collapses it to the exact 1D form  int_0^1 g(u) (-ln u) du.
struct XYProduct {
  Integrand1D g;
};

/// Iterated tanh-sinh over the open unit square (inner x, outer y).
/// Achievable tolerance is around 1e-6 for corner-singular integrands.
QuadratureResult integrate_unit_square(const Integrand2D& f, double tol);
QuadratureResult integrate_unit_square(const XYProduct& f, double tol);

/// Sums term(1) + term(2) + ... and stops after the first term with
/// |term(n)| < tol. For alternating series the remainder bound is the
/// magnitude of the first omitted term.
SeriesResult sum_series(const SeriesTerm& term, double tol,
                        std::int64_t max_terms, bool alternating = false);

}  // namespace numerics
}  // namespace eulerlab
