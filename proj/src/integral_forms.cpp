// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/integral_forms.hpp"

#include <cmath>

#include "eulerlab/error.hpp"
#include "eulerlab/special_functions.hpp"

namespace eulerlab::integrals {
namespace {

// Below this t the numerator t - 1 + e^-t is summed from its Taylor series.
constexpr double kSeriesCutoff = 1.0;

// (t - 1 + e^-t) / t^2 = sum_{n>=2} (-t)^(n-2) / n!, which tends to 1/2.
double scaled_numerator(double t) {
  if (t < kSeriesCutoff) {
    double term = 0.5;
    double sum = term;
    for (int n = 3; n < 40; ++n) {
      term *= -t / n;
      sum += term;
      if (std::abs(term) < 1e-17 * sum) break;
    }
    return sum;
  }
  return (t + std::expm1(-t)) / (t * t);
}

// 1/(e^t + 1) and t/(e^t - 1), safe for large t.
double inverse_exp_plus_one(double t) {
  const double e = std::exp(-t);
  return e / (1.0 + e);
}

double t_over_expm1(double t) {
  if (t > 1.0) {
    const double e = std::exp(-t);
    return t * e / -std::expm1(-t);
  }
  return t / std::expm1(t);
}

Complex power(double t, Complex exponent) {
  return std::exp(exponent * std::log(t));
}

void require_positive(double t) {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::kDomain, "reduced integrand requires t > 0");
  }
}

void require_half_plane(Complex s, double bound, double margin,
                        const char* message) {
  if (!(s.real() > bound + margin)) {
    throw Error(ErrorCode::kDomain, message);
  }
}

bool near(Complex s, double point, double radius) {
  return std::abs(s - point) < radius;
}

Complex eq15_generic(Complex s) {
  const Complex bracket =
      special::eta(s + 2.0) + (1.0 - 2.0 * special::eta(s + 1.0)) / (s + 1.0);
  return special::gamma(s + 2.0) * bracket;
}

// Central difference of the generic branch around a removable point,
// Richardson-combined over two step sizes.
Complex eq15_slope(double point) {
  auto central = [point](double h) {
    return (eq15_generic(point + h) - eq15_generic(point - h)) / (2.0 * h);
  };
  constexpr double kStep = 1e-2;
  return (4.0 * central(0.5 * kStep) - central(kStep)) / 3.0;
}

Complex eq15_limit_at_minus_one() {
  return special::eta(1.0) - 2.0 * special::eta_prime(0.0);
}

Complex eq15_limit_at_minus_two() {
  return special::eta_prime(0.0) - 0.5 + 2.0 * special::eta_prime(-1.0);
}

}  // namespace

std::string_view kernel_name(SignedKernel kernel) {
  return kernel == SignedKernel::kPlus ? "plus" : "minus";
}

Complex integrand_2d(SignedKernel kernel, Complex s, double x, double y) {
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0)) {
    throw Error(ErrorCode::kDomain, "integrand_2d requires 0 < x, y < 1");
  }
  const double one_minus_x = 1.0 - x;
  // 1 - xy written so that both differences are exact near the corner.
  const double denominator = kernel == SignedKernel::kMinus
                                 ? one_minus_x + x * (1.0 - y)
                                 : 1.0 + x * y;
  const double minus_log_xy = -(std::log(x) + std::log(y));
  return one_minus_x / denominator * power(minus_log_xy, s);
}

Complex reduced_integrand_plus(Complex s, double t) {
  require_positive(t);
  return power(t, s + 2.0) * (scaled_numerator(t) * inverse_exp_plus_one(t));
}

Complex reduced_integrand_minus(Complex s, double t) {
  require_positive(t);
  return power(t, s + 1.0) * (scaled_numerator(t) * t_over_expm1(t));
}

numerics::QuadratureResult I_plus(Complex s, double tol) {
  require_half_plane(s, -3.0, 0.01, "outside Re(s) > -3");
  return numerics::integrate_semi_infinite(
      [s](double t) { return reduced_integrand_plus(s, t); }, tol, s.real());
}

numerics::QuadratureResult I_minus(Complex s, double tol) {
  require_half_plane(s, -2.0, 0.01, "outside Re(s) > -2");
  return numerics::integrate_semi_infinite(
      [s](double t) { return reduced_integrand_minus(s, t); }, tol,
      s.real() + 1.0);
}

numerics::QuadratureResult fermi_dirac(Complex s, double tol) {
  require_half_plane(s, 0.0, 0.01, "outside Re(s) > 0");
  return numerics::integrate_semi_infinite(
      [s](double t) { return power(t, s - 1.0) * inverse_exp_plus_one(t); },
      tol, s.real() - 1.0);
}

Complex rhs_eq15(Complex s) {
  require_half_plane(s, -3.0, 0.0, "outside Re(s) > -3");
  constexpr double kRemovableRadius = 1e-4;
  if (s == Complex(-1.0)) return eq15_limit_at_minus_one();
  if (s == Complex(-2.0)) return eq15_limit_at_minus_two();
  if (near(s, -1.0, kRemovableRadius)) {
    return eq15_limit_at_minus_one() + eq15_slope(-1.0) * (s + 1.0);
  }
  if (near(s, -2.0, kRemovableRadius)) {
    return eq15_limit_at_minus_two() + eq15_slope(-2.0) * (s + 2.0);
  }
  return eq15_generic(s);
}

Complex rhs_eq12(Complex s) {
  require_half_plane(s, -2.0, 0.0, "outside Re(s) > -2");
  // zeta(s+2) - 1/(s+1) is exactly zeta_minus_pole at s+2, which carries
  // the s = -1 limit.
  return special::gamma(s + 2.0) * special::zeta_minus_pole(s + 2.0);
}

numerics::QuadratureResult beukers_reduced(int order, double tol) {
  if (order == 2) {
    return numerics::integrate_finite(
        [](double u) { return Complex(-std::log(u) / (1.0 - u)); }, 0.0, 1.0,
        tol);
  }
  if (order == 3) {
    // The 1/2 is folded into the integrand so the error estimate scales too.
    return numerics::integrate_finite(
        [](double u) {
          const double l = std::log(u);
          return Complex(0.5 * l * l / (1.0 - u));
        },
        0.0, 1.0, tol);
  }
  throw Error(ErrorCode::kInvalidArgument, "beukers_reduced order must be 2 or 3");
}

numerics::SeriesResult termwise_series_oracle(SignedKernel kernel,
                                              std::int64_t n_terms) {
  if (n_terms < 1) {
    throw Error(ErrorCode::kInvalidArgument, "termwise_series_oracle requires n >= 1");
  }
  auto term = [](std::int64_t n) {
    const double x = 1.0 / static_cast<double>(n);
    return x - std::log1p(x);
  };
  const bool alternating = kernel == SignedKernel::kPlus;
  double sum = 0.0;
  for (std::int64_t n = n_terms; n >= 1; --n) {
    sum += (alternating && n % 2 == 0) ? -term(n) : term(n);
  }
  numerics::SeriesResult result;
  result.value = sum;
  result.terms_used = n_terms;
  result.converged = true;
  // Each term is below 1/(2n^2), so the positive tail is below 1/(2N).
  result.remainder_bound = alternating
                               ? term(n_terms + 1)
                               : 0.5 / static_cast<double>(n_terms);
  return result;
}

}  // namespace eulerlab::integrals
