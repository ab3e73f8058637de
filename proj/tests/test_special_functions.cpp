// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "eulerlab/error.hpp"
#include "eulerlab/numerics.hpp"
#include "eulerlab/special_functions.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using eulerlab::Complex;
using eulerlab::ErrorCode;
namespace sf = eulerlab::special;
using testing::error_code_of;
using testing::error_message_of;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

bool near_nonpositive_integer(Complex s) {
  return std::abs(s.imag()) < 1e-3 && s.real() < 0.5 &&
         std::abs(s.real() - std::nearbyint(s.real())) < 1e-3;
}

}  // namespace

TEST_CASE("gamma at small integers and half integers") {
  CHECK(std::abs(sf::gamma(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(sf::gamma(5.0) - 24.0) < 24 * 1e-13);
  CHECK(std::abs(sf::gamma(0.5) - std::sqrt(oracle::kPi)) < 1e-13);
  CHECK(rel(sf::gamma(-0.5), -2 * std::sqrt(oracle::kPi)) < 1e-13);
  // Euler integral as an independent quadrature route.
  const auto q = eulerlab::numerics::integrate_semi_infinite(
      [](double t) { return Complex(std::exp(-t) / std::sqrt(t)); }, 1e-13, -0.5);
  CHECK(std::abs(sf::gamma(0.5) - q.value) < 1e-12);
  CHECK(std::abs(sf::gamma(3.5) / 2.5 - sf::gamma(2.5)) < 1e-13);
}

TEST_CASE("gamma poles") {
  for (double s : {0.0, -1.0, -2.0, -7.0}) {
    CHECK(error_code_of([&] { sf::gamma(s); }) == ErrorCode::kPole);
  }
  CHECK(error_message_of([] { sf::gamma(0.0); }) == "pole of Gamma");
  CHECK_FALSE(error_code_of([] { sf::gamma(Complex(-1.0, 1e-9)); }).has_value());
  CHECK_FALSE(error_code_of([] { sf::gamma(-1.0 + 1e-9); }).has_value());
}

TEST_CASE("gamma relative accuracy against the Stirling-series oracle") {
  oracle::Uniform u(11);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const Complex s(u.next(-4.5, 12.0), u.next(-6.0, 6.0));
    if (near_nonpositive_integer(s)) continue;
    worst = std::max(worst, rel(sf::gamma(s), oracle::gamma(s)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("gamma functional equation at 200 seeded points") {
  oracle::Uniform u(0x5EED);
  int used = 0;
  while (used < 200) {
    const Complex s(u.next(-3.0, 5.0), u.next(-2.0, 2.0));
    if (near_nonpositive_integer(s)) continue;
    ++used;
    const Complex lhs = sf::gamma(s + 1.0);
    CHECK(std::abs(lhs - s * sf::gamma(s)) / std::abs(lhs) <= 1e-12);
  }
}

TEST_CASE("gamma reflection") {
  for (double re = -2.75; re <= 3.0; re += 0.5) {
    for (double im : {0.0, 0.3, -1.2}) {
      const Complex s(re, im);
      const Complex expected = oracle::kPi / std::sin(oracle::kPi * s);
      CHECK(rel(sf::gamma(s) * sf::gamma(1.0 - s), expected) < 1e-11);
    }
  }
}

TEST_CASE("eta special values") {
  CHECK(std::abs(sf::eta(1.0) - oracle::kLn2) < 1e-12);
  CHECK(std::abs(sf::eta(0.0) - 0.5) < 1e-12);
  CHECK(std::abs(sf::eta(-1.0) - 0.25) < 1e-12);
  CHECK(std::abs(sf::eta(2.0) - oracle::kZeta2 / 2) < 1e-12);
  CHECK(std::abs(sf::eta_prime(0.0) - 0.5 * std::log(oracle::kPi / 2)) < 1e-12);
  // 3 ln A - 1/4 - ln 2 / 3.
  const double expected =
      3 * std::log(oracle::kGlaisherA) - 0.25 - oracle::kLn2 / 3;
  CHECK(std::abs(sf::eta_prime(-1.0) - expected) < 1e-11);
}

TEST_CASE("eta agrees with Borwein's algorithm") {
  oracle::Uniform u(3);
  for (int i = 0; i < 60; ++i) {
    const Complex s(u.next(-1.0, 6.0), u.next(-8.0, 8.0));
    CHECK(std::abs(sf::eta(s) - oracle::borwein_eta(s)) < 1e-11);
    CHECK(std::abs(sf::eta_prime(s) - oracle::borwein_eta(s, 1)) < 1e-10);
  }
}

TEST_CASE("eta continuation agrees with the direct alternating series") {
  oracle::Uniform u(5);
  for (int i = 0; i < 20; ++i) {
    const Complex s(u.next(1.5, 4.0), u.next(-3.0, 3.0));
    CHECK(std::abs(sf::eta(s) - oracle::direct_eta(s)) < 1e-12);
  }
}

TEST_CASE("eta_prime matches central differences at 50 points") {
  oracle::Uniform u(7);
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    const Complex s(u.next(-2.0, 4.0), u.next(-3.0, 3.0));
    const Complex fd = (sf::eta(s + h) - sf::eta(s - h)) / (2 * h);
    CHECK(std::abs(sf::eta_prime(s) - fd) < 1e-8);
  }
  const Complex fd2 = oracle::derivative([](Complex z) { return sf::eta(z); }, 2.0);
  CHECK(std::abs(sf::eta_prime(2.0) - fd2) < 1e-9);
}

TEST_CASE("zeta values") {
  CHECK(std::abs(sf::zeta(2.0) - oracle::kZeta2) < 1e-12);
  CHECK(std::abs(sf::zeta(0.0) + 0.5) < 1e-12);
  CHECK(std::abs(sf::zeta(-1.0) + 1.0 / 12) < 1e-12);
  CHECK(std::abs(sf::zeta(3.0) - oracle::kZeta3) < 1e-12);
  CHECK(std::abs(sf::zeta(3.0) - oracle::direct_zeta_real(3.0)) < 1e-12);
  CHECK(std::abs(sf::zeta(Complex(0.5, 3.0)) - oracle::zeta(Complex(0.5, 3.0))) < 1e-11);
}

TEST_CASE("zeta errors") {
  CHECK(error_code_of([] { sf::zeta(1.0); }) == ErrorCode::kPole);
  CHECK(error_message_of([] { sf::zeta(1.0); }) == "pole of zeta");
  CHECK(error_code_of([] { sf::zeta_prime(1.0); }) == ErrorCode::kPole);
  const double period = 2 * oracle::kPi / oracle::kLn2;
  CHECK(error_code_of([&] { sf::zeta(Complex(1.0, period)); }) ==
        ErrorCode::kIllConditioned);
  CHECK(error_code_of([&] { sf::zeta(Complex(1.0 + 5e-7, -2 * period)); }) ==
        ErrorCode::kIllConditioned);
  CHECK(error_message_of([&] { sf::zeta(Complex(1.0, period)); }) ==
        "ill-conditioned point");
  CHECK_FALSE(error_code_of([&] { sf::zeta(Complex(1.0 + 1e-3, period)); }).has_value());
}

TEST_CASE("zeta_prime") {
  CHECK(std::abs(sf::zeta_prime(-1.0) - oracle::kZetaPrimeMinus1) < 1e-10);
  CHECK(std::abs(sf::zeta_prime(-1.0) - (1.0 / 12 - std::log(oracle::kGlaisherA))) < 1e-10);
  CHECK(std::abs(sf::zeta_prime(0.0) + 0.5 * std::log(2 * oracle::kPi)) < 1e-10);
  for (Complex s : {Complex(2.0), Complex(-1.0), Complex(0.3, 2.0), Complex(3.0, -1.0)}) {
    const Complex fd = oracle::derivative([](Complex z) { return oracle::zeta(z); }, s);
    CHECK(std::abs(sf::zeta_prime(s) - fd) < 1e-9);
  }
}

TEST_CASE("product relation between eta and zeta") {
  oracle::Uniform u(0x5EED);
  for (int i = 0; i < 40; ++i) {
    const Complex s(u.next(-2.0, 4.0), u.next(-4.0, 4.0));
    if (std::abs(s - 1.0) < 1e-3) continue;
    const Complex factor = 1.0 - std::pow(Complex(2.0), 1.0 - s);
    CHECK(std::abs(sf::eta(s) - factor * sf::zeta(s)) <= 1e-11 * std::max(1.0, std::abs(sf::eta(s))));
  }
}

TEST_CASE("zeta_minus_pole") {
  CHECK(std::abs(sf::zeta_minus_pole(2.0) - (oracle::kZeta2 - 1)) < 1e-12);
  CHECK(std::abs(sf::zeta_minus_pole(0.0) - 0.5) < 1e-12);
  CHECK(std::abs(sf::zeta_minus_pole(1.0) - oracle::kEulerGamma) < 1e-8);
  // Continuous across the interpolation ring.
  for (double r : {0.049, 0.0499999, 0.05, 0.0500001, 0.051}) {
    for (Complex dir : {Complex(1.0), Complex(-1.0), Complex(0.6, 0.8)}) {
      const Complex s = 1.0 + r * dir;
      const Complex expected =
          oracle::zeta(s + 1e-12) - 1.0 / (s + 1e-12 - 1.0);  // oracle off the ring
      CHECK(std::abs(sf::zeta_minus_pole(s) - expected) < 1e-8);
    }
  }
}

TEST_CASE("Euler-Maclaurin zeta route") {
  CHECK(std::abs(sf::zeta_euler_maclaurin(2.0) - oracle::kZeta2) < 1e-14);
  CHECK(std::abs(sf::zeta_euler_maclaurin(3.0) - oracle::kZeta3) < 1e-14);
  CHECK(std::abs(sf::zeta_euler_maclaurin(-1.0) + 1.0 / 12) < 1e-13);
  CHECK(error_code_of([] { sf::zeta_euler_maclaurin(1.0); }) == ErrorCode::kPole);
  oracle::Uniform u(9);
  for (int i = 0; i < 25; ++i) {
    const Complex s(u.next(-2.0, 4.0), u.next(-4.0, 4.0));
    if (std::abs(s - 1.0) < 0.05) continue;
    CHECK(std::abs(sf::zeta_euler_maclaurin(s) - oracle::zeta(s)) <
          1e-11 * std::max(1.0, std::abs(oracle::zeta(s))));
  }
}

TEST_CASE("EvalOptions validation and effect") {
  CHECK(error_code_of([] { sf::eta(2.0, {.tol = 0.0}); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { sf::eta(2.0, {.tol = 1e-10, .max_terms = 8}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { sf::eta(2.0, {.tol = 1e-10, .max_terms = 129}); }) ==
        ErrorCode::kInvalidArgument);
  // A coarse tolerance is honoured, not ignored.
  const Complex coarse = sf::eta(1.0, {.tol = 1e-4});
  CHECK(std::abs(coarse - oracle::kLn2) < 1e-3);
  CHECK(std::abs(coarse - oracle::kLn2) > 1e-12);
  CHECK(std::abs(sf::eta(1.0, {.tol = 1e-16}) - oracle::kLn2) < 2e-16);
}

TEST_CASE("concurrent evaluation is consistent") {
  std::vector<Complex> points;
  for (int i = 0; i < 64; ++i) points.emplace_back(-1.0 + 0.1 * i, 0.05 * i);
  std::vector<Complex> serial;
  for (auto s : points) serial.push_back(sf::zeta(s) + sf::gamma(s + 3.0));
  std::vector<Complex> parallel(points.size());
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < points.size(); i += 4) {
        parallel[i] = sf::zeta(points[i]) + sf::gamma(points[i] + 3.0);
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(serial == parallel);
}
