// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "eulerlab/error.hpp"
#include "eulerlab/numerics.hpp"

namespace eulerlab::numerics {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Abscissae beyond this transformed coordinate sit closer than ~1e-300 to an
// endpoint and carry weights below the smallest normal double.
constexpr double kTanhSinhRange = 6.1;

// Levels below this are never accepted as converged; coarse grids can agree
// by accident on smooth integrands.
constexpr int kMinAcceptedLevel = 3;

// Running state of one tanh-sinh sweep. Nodes are added level by level so
// each refinement reuses every previous evaluation.
class TanhSinh {
 public:
  // `side`, when given, is sampled after every evaluation of f and
  // integrated with the same weights (used for inner error estimates).
  TanhSinh(const Integrand1D& f, double a, double b,
           const std::function<double()>* side = nullptr)
      : f_(f), side_(side), a_(a), b_(b), half_width_(0.5 * (b - a)) {}

  // Adds the nodes of `level` and returns the level-`level` estimate.
  Complex refine(int level) {
    const double h = std::ldexp(1.0, -level);
    if (level == 0) {
      add_center();
      for (double t = 1.0; t <= kTanhSinhRange; t += 1.0) add_pair(t);
    } else {
      const auto count = static_cast<long>(kTanhSinhRange / h);
      for (long k = 1; k <= count; k += 2) add_pair(static_cast<double>(k) * h);
    }
    return sum_ * h;
  }

  double rounding_floor(int level) const {
    return 8.0 * kEps * abs_sum_ * std::ldexp(1.0, -level);
  }

  std::int64_t evaluations() const { return evaluations_; }

  double side_integral(int level) const {
    return side_sum_ * std::ldexp(1.0, -level);
  }

 private:
  void add_center() {
    const double w = 0.5 * std::numbers::pi * half_width_;
    accumulate(w, 0.5 * (a_ + b_));
  }

  // Symmetric pair at +-t. Distances to the endpoints are formed directly
  // from exp(-2u) so nodes near a and b keep full relative precision.
  void add_pair(double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(-2.0 * u);
    const double dist = half_width_ * 2.0 * e / (1.0 + e);
    const double weight = half_width_ * 0.5 * std::numbers::pi * std::cosh(t) *
                          4.0 * e / ((1.0 + e) * (1.0 + e));
    if (weight == 0.0) return;
    const double left = a_ + dist;
    const double right = b_ - dist;
    if (left > a_ && left < b_) accumulate(weight, left);
    if (right < b_ && right > a_) accumulate(weight, right);
  }

  void accumulate(double weight, double x) {
    const Complex fx = f_(x);
    ++evaluations_;
    if (std::isnan(fx.real()) || std::isnan(fx.imag())) {
      throw Error(ErrorCode::kIntegrandInvalid, "integrand invalid");
    }
    sum_ += weight * fx;
    abs_sum_ += weight * std::abs(fx);
    if (side_ != nullptr) side_sum_ += weight * (*side_)();
  }

  const Integrand1D& f_;
  const std::function<double()>* side_;
  double a_;
  double b_;
  double half_width_;
  Complex sum_{};
  double abs_sum_ = 0.0;
  double side_sum_ = 0.0;
  std::int64_t evaluations_ = 0;
};

void check_interval(double a, double b, double tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::kInvalidArgument, "integration interval requires a < b");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
}

}  // namespace

namespace detail {

QuadratureResult integrate_finite(const Integrand1D& f, double a, double b,
                                  double tol, int max_level) {
  check_interval(a, b, tol);
  TanhSinh rule(f, a, b);
  QuadratureResult result;
  Complex previous = rule.refine(0);
  result.value = previous;
  result.abs_error_estimate = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    const Complex current = rule.refine(level);
    const double estimate =
        std::max(std::abs(current - previous), rule.rounding_floor(level));
    result.value = current;
    result.abs_error_estimate = estimate;
    if (level >= kMinAcceptedLevel && estimate <= tol) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  result.evaluations = rule.evaluations();
  return result;
}

}  // namespace detail

QuadratureResult integrate_finite(const Integrand1D& f, double a, double b,
                                  double tol) {
  return detail::integrate_finite(f, a, b, tol, kMaxTanhSinhLevel);
}

std::vector<TanhSinhLevel> tanh_sinh_levels(const Integrand1D& f, double a,
                                            double b, int max_level) {
  check_interval(a, b, 1.0);
  TanhSinh rule(f, a, b);
  std::vector<TanhSinhLevel> levels;
  Complex previous = rule.refine(0);
  levels.push_back({0, previous, std::numeric_limits<double>::infinity()});
  for (int level = 1; level <= max_level; ++level) {
    const Complex current = rule.refine(level);
    levels.push_back({level, current, std::abs(current - previous)});
    previous = current;
  }
  return levels;
}

double semi_infinite_truncation(double tol, double decay_exponent_hint) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const double q = decay_exponent_hint + 1.0;
  const double target = std::log(tol / 10.0);
  auto log_bound = [q](double t) {
    return -t + q * std::log(t) + std::log1p(std::max(q, 0.0) / t);
  };
  double t = kMinTruncation;
  while (log_bound(t) >= target) t += 1.0;
  return t;
}

QuadratureResult integrate_semi_infinite(const Integrand1D& f, double tol,
                                         double decay_exponent_hint) {
  const double cut = semi_infinite_truncation(tol, decay_exponent_hint);
  const double q = decay_exponent_hint + 1.0;
  const double tail =
      std::exp(-cut + q * std::log(cut)) * (1.0 + std::max(q, 0.0) / cut);
  QuadratureResult result = integrate_finite(f, 0.0, cut, tol - tail);
  result.abs_error_estimate += tail;
  result.converged = result.converged && result.abs_error_estimate <= tol;
  return result;
}

QuadratureResult integrate_unit_square(const Integrand2D& f, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  // Inner sweeps get a tenth of the budget; the outer sweep the rest. Rows
  // near y = 1 may stop short of their tolerance, so inner errors are
  // integrated with the outer weights rather than maximized.
  constexpr int kInnerMaxLevel = 9;
  constexpr int kOuterMaxLevel = 9;
  const double inner_tol = 0.1 * tol;
  double row_error = 0.0;
  std::int64_t evaluations = 0;
  const Integrand1D inner = [&](double y) -> Complex {
    const auto row = detail::integrate_finite(
        [&](double x) { return f(x, y); }, 0.0, 1.0, inner_tol, kInnerMaxLevel);
    row_error = row.abs_error_estimate;
    evaluations += row.evaluations;
    return row.value;
  };
  const std::function<double()> side = [&] { return row_error; };

  TanhSinh rule(inner, 0.0, 1.0, &side);
  QuadratureResult result;
  Complex previous = rule.refine(0);
  for (int level = 1; level <= kOuterMaxLevel; ++level) {
    const Complex current = rule.refine(level);
    const double outer =
        std::max(std::abs(current - previous), rule.rounding_floor(level));
    result.value = current;
    result.abs_error_estimate = outer + rule.side_integral(level);
    if (level >= kMinAcceptedLevel && result.abs_error_estimate <= tol) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  result.evaluations = evaluations;
  return result;
}

QuadratureResult integrate_unit_square(const XYProduct& f, double tol) {
  // int int g(xy) dx dy = int_0^1 g(u) (-ln u) du
  return integrate_finite(
      [&](double u) { return f.g(u) * -std::log(u); }, 0.0, 1.0, tol);
}

SeriesResult sum_series(const SeriesTerm& term, double tol,
                        std::int64_t max_terms, bool alternating) {
  if (!(tol > 0.0) || max_terms < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sum_series requires tol > 0 and max_terms >= 1");
  }
  SeriesResult result;
  for (std::int64_t n = 1; n <= max_terms; ++n) {
    const Complex t = term(n);
    result.value += t;
    result.terms_used = n;
    if (std::abs(t) < tol) {
      result.converged = true;
      break;
    }
  }
  if (alternating) {
    result.remainder_bound = std::abs(term(result.terms_used + 1));
  }
  return result;
}

}  // namespace eulerlab::numerics
