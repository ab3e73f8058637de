// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/constants.hpp"

#include <cmath>
#include <numbers>

#include "eulerlab/error.hpp"
#include "eulerlab/special_functions.hpp"

namespace eulerlab::constants {
namespace {

void require_at_least(std::int64_t n, std::int64_t lo, const char* what) {
  if (n < lo) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " requires n >= " + std::to_string(lo));
  }
}

// 1/n - ln((n+1)/n), evaluated without cancellation for large n.
double euler_term(std::int64_t n) {
  const double x = 1.0 / static_cast<double>(n);
  return x - std::log1p(x);
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kSeries:
      return "series";
    case Method::kEulerFormula:
      return "euler_formula";
    case Method::kLimitRatio:
      return "limit_ratio";
    case Method::kClosedForm:
      return "closed_form";
    case Method::kZetaRoute:
      return "zeta_route";
  }
  return "unknown";
}

ConstantEstimate euler_gamma_series(std::int64_t n_terms) {
  require_at_least(n_terms, 1, "euler_gamma_series");
  double sum = 0.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) sum += euler_term(n);
  return {sum, Method::kSeries, n_terms,
          0.5 / static_cast<double>(n_terms)};
}

ConstantEstimate euler_formula_gamma(std::int64_t n_terms) {
  require_at_least(n_terms, 2, "euler_formula_gamma");
  // Integer zeta values come from Euler-Maclaurin so this reference shares
  // nothing with the eta-based routes it is compared against.
  auto term = [](std::int64_t n) {
    const double z = special::zeta_euler_maclaurin(static_cast<double>(n)).real();
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * z / (std::ldexp(1.0, static_cast<int>(n)) * static_cast<double>(n));
  };
  // Sum smallest terms first.
  double tail = 0.0;
  for (std::int64_t n = n_terms; n >= 2; --n) tail += term(n);
  const double value = 2.0 * std::log(2.0) - std::log(std::numbers::pi) + 2.0 * tail;
  return {value, Method::kEulerFormula, n_terms,
          2.0 * std::abs(term(n_terms + 1))};
}

ConstantEstimate euler_gamma_limit(std::int64_t n) {
  require_at_least(n, 1, "euler_gamma_limit");
  double harmonic = 0.0;
  for (std::int64_t k = n; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);
  const double value = harmonic - std::log(static_cast<double>(n));
  return {value, Method::kLimitRatio, n, 10.0 / static_cast<double>(n)};
}

ConstantEstimate euler_gamma_zeta_route() {
  return {special::zeta_minus_pole(1.0).real(), Method::kZetaRoute, 1,
          std::nullopt};
}

ConstantEstimate ln_4_over_pi(std::int64_t n_terms) {
  require_at_least(n_terms, 1, "ln_4_over_pi");
  double sum = 0.0;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const double t = euler_term(n);
    sum += (n % 2 == 1) ? t : -t;
  }
  return {sum, Method::kSeries, n_terms, euler_term(n_terms + 1)};
}

ConstantEstimate ln_4_over_pi_closed_form() {
  return {2.0 * std::log(2.0) - std::log(std::numbers::pi), Method::kClosedForm,
          1, 0.0};
}

double wallis_partial(std::int64_t n_factors) {
  require_at_least(n_factors, 1, "wallis_partial");
  double log_product = 0.0;
  for (std::int64_t n = 1; n <= n_factors; ++n) {
    const double factor = std::log1p(1.0 / static_cast<double>(n));
    log_product += (n % 2 == 1) ? factor : -factor;
  }
  return std::exp(log_product);
}

ConstantEstimate glaisher_limit(std::int64_t n) {
  require_at_least(n, 1, "glaisher_limit");
  if (n > 1'000'000) {
    throw Error(ErrorCode::kInvalidArgument, "glaisher_limit requires n <= 10^6");
  }
  // ln(1^1 2^2 ... n^n) = sum k ln(k/n) + n(n+1)/2 ln n. Subtracting the
  // scale analytically leaves sum k ln(k/n) + n^2/4 - ln(n)/12, whose
  // pieces are O(n^2) instead of O(n^2 ln n).
  const double nd = static_cast<double>(n);
  double sum = 0.25 * nd * nd;
  double compensation = 0.0;
  for (std::int64_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double term = kd * std::log(kd / nd);
    const double next = sum + term;
    compensation += std::abs(sum) >= std::abs(term) ? (sum - next) + term
                                                    : (term - next) + sum;
    sum = next;
  }
  const double log_ratio = sum + compensation - std::log(nd) / 12.0;
  return {std::exp(log_ratio), Method::kLimitRatio, n, 10.0 / nd};
}

ConstantEstimate glaisher_zeta() {
  const double log_a = 1.0 / 12.0 - special::zeta_prime(-1.0).real();
  return {std::exp(log_a), Method::kZetaRoute, 1, std::nullopt};
}

double stirling_ratio(std::int64_t n) {
  require_at_least(n, 1, "stirling_ratio");
  const double nd = static_cast<double>(n);
  const double log_factorial = std::lgamma(nd + 1.0);
  return std::exp(log_factorial - (nd + 0.5) * std::log(nd) + nd);
}

ConstantEstimate ln2_series(std::int64_t n_terms) {
  require_at_least(n_terms, 1, "ln2_series");
  double sum = 0.0;
  for (std::int64_t n = n_terms; n >= 1; --n) {
    const double t = 1.0 / static_cast<double>(n);
    sum += (n % 2 == 1) ? t : -t;
  }
  return {sum, Method::kSeries, n_terms, 1.0 / static_cast<double>(n_terms + 1)};
}

ConstantEstimate ln2_zeta_route() {
  return {special::eta(1.0).real(), Method::kZetaRoute, 1, std::nullopt};
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kSeries, Method::kEulerFormula, Method::kLimitRatio,
                   Method::kClosedForm, Method::kZetaRoute}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

ConstantEstimate estimate(std::string_view name, std::optional<Method> method,
                          std::optional<std::int64_t> n) {
  auto unsupported = [&](Method m) {
    return Error(ErrorCode::kInvalidArgument,
                 "method " + std::string(method_name(m)) +
                     " is not available for " + std::string(name));
  };
  if (name == "gamma") {
    switch (method.value_or(Method::kEulerFormula)) {
      case Method::kEulerFormula:
        return euler_formula_gamma(n.value_or(50));
      case Method::kSeries:
        return euler_gamma_series(n.value_or(1'000'000));
      case Method::kLimitRatio:
        return euler_gamma_limit(n.value_or(1'000'000));
      case Method::kZetaRoute:
        return euler_gamma_zeta_route();
      case Method::kClosedForm:
        throw unsupported(Method::kClosedForm);
    }
  }
  if (name == "ln4pi") {
    switch (method.value_or(Method::kClosedForm)) {
      case Method::kClosedForm:
        return ln_4_over_pi_closed_form();
      case Method::kSeries:
        return ln_4_over_pi(n.value_or(100'000));
      default:
        throw unsupported(*method);
    }
  }
  if (name == "glaisher") {
    switch (method.value_or(Method::kZetaRoute)) {
      case Method::kZetaRoute:
        return glaisher_zeta();
      case Method::kLimitRatio:
        return glaisher_limit(n.value_or(100'000));
      default:
        throw unsupported(*method);
    }
  }
  if (name == "sqrt2pi") {
    switch (method.value_or(Method::kClosedForm)) {
      case Method::kClosedForm:
        return {std::sqrt(2.0 * std::numbers::pi), Method::kClosedForm, 1, 0.0};
      case Method::kLimitRatio: {
        const std::int64_t terms = n.value_or(100'000);
        return {stirling_ratio(terms), Method::kLimitRatio, terms,
                10.0 / static_cast<double>(terms)};
      }
      default:
        throw unsupported(*method);
    }
  }
  if (name == "ln2") {
    switch (method.value_or(Method::kClosedForm)) {
      case Method::kClosedForm:
        return {std::log(2.0), Method::kClosedForm, 1, 0.0};
      case Method::kSeries:
        return ln2_series(n.value_or(1'000'000));
      case Method::kZetaRoute:
        return ln2_zeta_route();
      default:
        throw unsupported(*method);
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown constant '" + std::string(name) +
                  "'; known: gamma ln4pi glaisher sqrt2pi ln2");
}

}  // namespace eulerlab::constants
