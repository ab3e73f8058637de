// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "eulerlab/error.hpp"

namespace eulerlab::special {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_gamma_pole(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 &&
         s.real() == std::nearbyint(s.real());
}

// sin(pi z) with the real part reduced first, so zeros near the integers
// keep full relative accuracy.
Complex sin_pi(Complex z) {
  const double k = std::nearbyint(z.real());
  const Complex r(z.real() - k, z.imag());
  const Complex v = std::sin(kPi * r);
  return std::fmod(k, 2.0) == 0.0 ? v : -v;
}

Complex lanczos_gamma(Complex s) {
  const Complex z = s - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

// expm1 for complex arguments.
Complex expm1(Complex w) {
  const double half_sin = std::sin(0.5 * w.imag());
  const double re = std::expm1(w.real()) * std::cos(w.imag()) -
                    2.0 * half_sin * half_sin;
  const double im = std::exp(w.real()) * std::sin(w.imag());
  return {re, im};
}

// Row n holds C(n,k) / 2^(n+1) for k = 0..n. Halving is exact, so the
// entries carry the same rounding as the integer binomials themselves.
const std::vector<std::vector<double>>& scaled_binomials() {
  static const std::vector<std::vector<double>> table = [] {
    std::vector<std::vector<double>> rows(kMaxEulerTerms);
    rows[0] = {0.5};
    for (int n = 1; n < kMaxEulerTerms; ++n) {
      rows[n].assign(static_cast<std::size_t>(n) + 1, 0.0);
      for (int k = 0; k <= n; ++k) {
        const double left = k > 0 ? rows[n - 1][k - 1] : 0.0;
        const double right = k < n ? rows[n - 1][k] : 0.0;
        rows[n][k] = 0.5 * (left + right);
      }
    }
    return rows;
  }();
  return table;
}

void check_options(const EvalOptions& opts) {
  if (!(opts.tol > 0.0) || opts.max_terms < 16 ||
      opts.max_terms > kMaxEulerTerms) {
    throw Error(ErrorCode::kInvalidArgument,
                "EvalOptions requires tol > 0 and 16 <= max_terms <= 128");
  }
}

// Euler-transformed eta series with the (k+1)^-s factors multiplied by
// (-ln(k+1))^order, i.e. the order-th termwise derivative for order 0 or 1.
// The row terms only decide where to truncate; the truncated sum is then
// regrouped as sum_k (-1)^k w_k (k+1)^-s with w_k = sum_n C(n,k)/2^(n+1),
// which cancels once instead of once per row.
Complex euler_transform(Complex s, const EvalOptions& opts, int order) {
  check_options(opts);
  const auto& binom = scaled_binomials();
  std::vector<Complex> powers;
  powers.reserve(static_cast<std::size_t>(opts.max_terms));
  int quiet = 0;
  for (int n = 0; n < opts.max_terms; ++n) {
    const double log_k = std::log(static_cast<double>(n) + 1.0);
    Complex p = std::exp(-s * log_k);
    if (order == 1) p *= -log_k;
    powers.push_back(p);

    Complex term = 0.0;
    double magnitude = 0.0;
    const auto& row = binom[n];
    for (int k = 0; k <= n; ++k) {
      const Complex piece = row[k] * powers[k];
      term += (k % 2 == 0) ? piece : -piece;
      magnitude += std::abs(piece);
    }
    // Once a term sits at its own rounding noise, later terms add only noise.
    const double floor = 4.0 * kEps * magnitude;
    if (std::abs(term) < std::max(opts.tol, floor)) {
      if (++quiet == 3) break;
    } else {
      quiet = 0;
    }
  }
  const int rows = static_cast<int>(powers.size());
  Complex total = 0.0;
  for (int k = rows - 1; k >= 0; --k) {
    double weight = 0.0;
    for (int n = rows - 1; n >= k; --n) weight += binom[n][k];
    const Complex piece = weight * powers[k];
    total += (k % 2 == 0) ? piece : -piece;
  }
  return total;
}

void check_zeta_point(Complex s) {
  if (s == Complex(1.0, 0.0)) {
    throw Error(ErrorCode::kPole, "pole of zeta");
  }
  const double period = 2.0 * kPi / kLn2;
  const double k = std::nearbyint(s.imag() / period);
  if (k != 0.0 && std::abs(s - Complex(1.0, k * period)) < 1e-6) {
    throw Error(ErrorCode::kIllConditioned, "ill-conditioned point");
  }
}

// 1 - 2^(1-s), accurate near s = 1.
Complex eta_zeta_factor(Complex s) { return -expm1((1.0 - s) * kLn2); }

}  // namespace

Complex gamma(Complex s) {
  if (is_gamma_pole(s)) {
    throw Error(ErrorCode::kPole, "pole of Gamma");
  }
  if (s.real() < 0.5) {
    return kPi / (sin_pi(s) * lanczos_gamma(1.0 - s));
  }
  return lanczos_gamma(s);
}

Complex eta(Complex s, const EvalOptions& opts) {
  return euler_transform(s, opts, 0);
}

Complex eta_prime(Complex s, const EvalOptions& opts) {
  return euler_transform(s, opts, 1);
}

Complex zeta(Complex s, const EvalOptions& opts) {
  check_zeta_point(s);
  return eta(s, opts) / eta_zeta_factor(s);
}

Complex zeta_prime(Complex s, const EvalOptions& opts) {
  check_zeta_point(s);
  // eta = D zeta with D = 1 - 2^(1-s), D' = 2^(1-s) ln 2
  const Complex factor = eta_zeta_factor(s);
  const Complex zeta_value = eta(s, opts) / factor;
  const Complex factor_prime = (1.0 - factor) * kLn2;
  return (eta_prime(s, opts) - factor_prime * zeta_value) / factor;
}

Complex zeta_minus_pole(Complex s, const EvalOptions& opts) {
  constexpr double kRing = 0.05;
  const Complex offset = s - 1.0;
  const double radius = std::abs(offset);
  if (radius >= kRing) {
    return zeta(s, opts) - 1.0 / offset;
  }
  const Complex direction = radius > 0.0 ? offset / radius : Complex(1.0);
  constexpr std::array<double, 8> nodes = {-4.0 * kRing, -3.0 * kRing, -2.0 * kRing,
                                           -kRing,       kRing,        2.0 * kRing,
                                           3.0 * kRing,  4.0 * kRing};
  std::array<Complex, 8> values;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Complex point = 1.0 + nodes[j] * direction;
    values[j] = zeta(point, opts) - 1.0 / (point - 1.0);
  }
  // Degree-7 Lagrange interpolation in the signed distance along the line.
  Complex result = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double basis = 1.0;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (m != j) basis *= (radius - nodes[m]) / (nodes[j] - nodes[m]);
    }
    result += basis * values[j];
  }
  return result;
}

Complex zeta_euler_maclaurin(Complex s) {
  if (s == Complex(1.0, 0.0)) {
    throw Error(ErrorCode::kPole, "pole of zeta");
  }
  // B_{2k} / (2k)! for k = 1..13
  static constexpr std::array<double, 13> kBernoulliOverFactorial = {
      1.0 / 6.0 / 2.0,
      -1.0 / 30.0 / 24.0,
      1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,
      5.0 / 66.0 / 3628800.0,
      -691.0 / 2730.0 / 479001600.0,
      7.0 / 6.0 / 87178291200.0,
      -3617.0 / 510.0 / 20922789888000.0,
      43867.0 / 798.0 / 6402373705728000.0,
      -174611.0 / 330.0 / 2432902008176640000.0,
      854513.0 / 138.0 / 1.1240007277776077e21,
      -236364091.0 / 2730.0 / 6.204484017332394e23,
      8553103.0 / 6.0 / 4.0329146112660565e26};
  constexpr int kCut = 12;
  Complex total = 0.0;
  for (int n = 1; n < kCut; ++n) {
    total += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double cut = kCut;
  const double log_cut = std::log(cut);
  const Complex cut_power = std::exp(-s * log_cut);  // N^-s
  total += cut * cut_power / (s - 1.0) + 0.5 * cut_power;
  // Rising factorial s (s+1) ... (s+2k-2) times N^(-s-2k+1).
  Complex rising = s;
  Complex power = cut_power / cut;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    total += kBernoulliOverFactorial[k] * rising * power;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    power /= cut * cut;
  }
  return total;
}

}  // namespace eulerlab::special
