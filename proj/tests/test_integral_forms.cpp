// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "eulerlab/error.hpp"
#include "eulerlab/integral_forms.hpp"
#include "eulerlab/numerics.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using eulerlab::Complex;
using eulerlab::ErrorCode;
namespace in = eulerlab::integrals;
namespace nm = eulerlab::numerics;
using in::SignedKernel;
using testing::error_code_of;
using testing::error_message_of;

namespace {

// The reduced integrands written out literally, fine away from t = 0.
Complex naive_plus(Complex s, double t) {
  const Complex ts = std::exp(s * std::log(t));
  return (ts * t - 2.0 * ts) / (std::exp(t) + 1.0) + std::exp(-t) * ts;
}

Complex naive_minus(Complex s, double t) {
  const Complex ts = std::exp(s * std::log(t));
  return ts * t / std::expm1(t) - std::exp(-t) * ts;
}

// Closed forms through the oracle gamma and Borwein eta.
Complex oracle_rhs_plus(Complex s) {
  return oracle::gamma(s + 2.0) *
         (oracle::borwein_eta(s + 2.0) + (1.0 - 2.0 * oracle::borwein_eta(s + 1.0)) / (s + 1.0));
}

Complex oracle_rhs_minus(Complex s) {
  return oracle::gamma(s + 2.0) * (oracle::zeta(s + 2.0) - 1.0 / (s + 1.0));
}

const std::vector<double> kPlusRe = {-2.5, -2.25, -1.5, -0.5, 0, 0.5, 1, 2, 3};
const std::vector<double> kMinusRe = {-1.5, -0.5, 0, 0.5, 1, 2, 3};

}  // namespace

TEST_CASE("two-dimensional integrand") {
  CHECK(in::integrand_2d(SignedKernel::kMinus, 0.0, 0.5, 0.5).real() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(in::integrand_2d(SignedKernel::kPlus, 0.0, 0.5, 0.5).real() ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(in::integrand_2d(SignedKernel::kMinus, 1.0, 0.5, 0.5).real() ==
        doctest::Approx(2.0 / 3.0 * std::log(4.0)).epsilon(1e-15));
  CHECK(in::integrand_2d(SignedKernel::kMinus, 1.0, 0.5, 0.5).real() ==
        doctest::Approx(0.9241962407).epsilon(1e-10));
  for (auto [x, y] : {std::pair{0.0, 0.5}, {1.0, 0.5}, {0.5, 0.0}, {0.5, 1.0}, {-0.1, 0.5}}) {
    CHECK(error_code_of([&] { in::integrand_2d(SignedKernel::kPlus, 0.0, x, y); }) ==
          ErrorCode::kDomain);
  }
  CHECK(in::kernel_name(SignedKernel::kPlus) == "plus");
  CHECK(in::kernel_name(SignedKernel::kMinus) == "minus");
}

TEST_CASE("minus-kernel integrand is nonnegative for real s") {
  for (double s : {-1.9, -1.0, 0.0, 0.7, 3.0}) {
    for (double x = 0.05; x < 1.0; x += 0.1) {
      for (double y = 0.05; y < 1.0; y += 0.1) {
        const Complex v = in::integrand_2d(SignedKernel::kMinus, s, x, y);
        CHECK(v.real() >= 0.0);
        CHECK(v.imag() == 0.0);
      }
    }
  }
}

TEST_CASE("reduced integrands at sample points") {
  const double ln2 = oracle::kLn2;
  CHECK(in::reduced_integrand_plus(0.0, ln2).real() ==
        doctest::Approx((ln2 - 2.0) / 3.0 + 0.5).epsilon(1e-14));
  CHECK(in::reduced_integrand_minus(0.0, 1.0).real() ==
        doctest::Approx(1.0 / (std::exp(1.0) - 1.0) - std::exp(-1.0)).epsilon(1e-14));
  CHECK(in::reduced_integrand_minus(0.0, 1.0).real() ==
        doctest::Approx(0.2140972657).epsilon(1e-9));
  CHECK(in::reduced_integrand_plus(0.0, 1e-4).real() == doctest::Approx(2.5e-9).epsilon(0.01));
  CHECK(in::reduced_integrand_minus(0.0, 1e-4).real() == doctest::Approx(5e-5).epsilon(0.01));
  const Complex deep = in::reduced_integrand_plus(-2.5, 1e-6);
  CHECK(std::isfinite(deep.real()));
  CHECK(deep.real() == doctest::Approx(0.25 / std::sqrt(1e-6)).epsilon(0.01));
  CHECK(error_code_of([] { in::reduced_integrand_plus(0.0, 0.0); }) == ErrorCode::kDomain);
  CHECK(error_code_of([] { in::reduced_integrand_minus(0.0, -1.0); }) == ErrorCode::kDomain);
}

TEST_CASE("reduced integrands match the literal formulas away from zero") {
  for (Complex s : {Complex(0.0), Complex(-2.5, 1.0), Complex(1.5, -2.0)}) {
    for (double t : {0.5, 1.0, 2.0, 7.5, 30.0}) {
      const Complex p = naive_plus(s, t), m = naive_minus(s, t);
      CHECK(std::abs(in::reduced_integrand_plus(s, t) - p) <= 1e-13 * std::abs(p) + 1e-300);
      CHECK(std::abs(in::reduced_integrand_minus(s, t) - m) <= 1e-13 * std::abs(m) + 1e-300);
    }
  }
}

TEST_CASE("small-t expansions") {
  for (Complex s : {Complex(0.0), Complex(-1.5, 0.5), Complex(2.0, -1.0)}) {
    auto ratio_plus = [&](double t) {
      return in::reduced_integrand_plus(s, t) / std::exp((s + 2.0) * std::log(t));
    };
    auto ratio_minus = [&](double t) {
      return in::reduced_integrand_minus(s, t) / std::exp((s + 1.0) * std::log(t));
    };
    for (double t : {1e-3, 1e-4, 1e-5}) {
      CHECK(std::abs(ratio_plus(t) - 0.25) < 2 * t);
      CHECK(std::abs(ratio_minus(t) - 0.5) < 2 * t);
      // Richardson on the linear term.
      CHECK(std::abs(2.0 * ratio_plus(t / 2) - ratio_plus(t) - 0.25) < 10 * t * t + 1e-12);
      CHECK(std::abs(2.0 * ratio_minus(t / 2) - ratio_minus(t) - 0.5) < 10 * t * t + 1e-12);
    }
  }
}

TEST_CASE("plus-kernel integral at named points") {
  const auto m1 = in::I_plus(-1.0, 1e-11);
  CHECK(m1.converged);
  CHECK(std::abs(m1.value - oracle::kLn4OverPi) < 1e-10);
  CHECK(std::abs(in::I_plus(-2.0, 1e-11).value - oracle::kPlusAtMinus2) < 1e-10);
  const double at0 = oracle::kPi * oracle::kPi / 12 + 1 - 2 * oracle::kLn2;
  CHECK(std::abs(in::I_plus(0.0, 1e-11).value - at0) < 1e-10);
  CHECK(at0 == doctest::Approx(0.4361726723).epsilon(1e-9));
}

TEST_CASE("minus-kernel integral at named points") {
  const auto m1 = in::I_minus(-1.0, 1e-11);
  CHECK(m1.converged);
  CHECK(std::abs(m1.value - oracle::kEulerGamma) < 1e-10);
  CHECK(std::abs(in::I_minus(0.0, 1e-11).value - (oracle::kZeta2 - 1)) < 1e-10);
  CHECK(std::abs(in::I_minus(1.0, 1e-11).value - (2 * oracle::kZeta3 - 1)) < 1e-10);
  // Independent quadrature of the same integrand.
  const Complex gl = oracle::integrate_semi_infinite(
      [](double t) { return in::reduced_integrand_minus(0.0, t); });
  CHECK(std::abs(gl - (oracle::kZeta2 - 1)) < 1e-12);
}

TEST_CASE("integrals agree with Gauss-Legendre on the literal integrand") {
  for (Complex s : {Complex(0.5, 1.0), Complex(2.0), Complex(1.0, -2.0)}) {
    const Complex p = oracle::integrate_semi_infinite([&](double t) { return naive_plus(s, t); });
    const Complex m = oracle::integrate_semi_infinite([&](double t) { return naive_minus(s, t); });
    CHECK(std::abs(in::I_plus(s, 1e-11).value - p) < 1e-10);
    CHECK(std::abs(in::I_minus(s, 1e-11).value - m) < 1e-10);
  }
}

TEST_CASE("conjugate symmetry") {
  const Complex s(0.3, 1.7);
  CHECK(std::abs(in::I_plus(std::conj(s), 1e-11).value - std::conj(in::I_plus(s, 1e-11).value)) < 1e-13);
  CHECK(std::abs(in::rhs_eq15(std::conj(s)) - std::conj(in::rhs_eq15(s))) < 1e-13);
}

TEST_CASE("domain guards") {
  CHECK(error_message_of([] { in::I_plus(-3.5, 1e-8); }) == "outside Re(s) > -3");
  CHECK(error_code_of([] { in::I_plus(Complex(-2.995, 1.0), 1e-8); }) == ErrorCode::kDomain);
  CHECK_FALSE(error_code_of([] { in::I_plus(-2.98, 1e-6); }).has_value());
  CHECK(error_message_of([] { in::I_minus(-2.0, 1e-8); }) == "outside Re(s) > -2");
  CHECK(error_code_of([] { in::I_minus(-1.995, 1e-8); }) == ErrorCode::kDomain);
  CHECK(error_message_of([] { in::fermi_dirac(0.0, 1e-8); }) == "outside Re(s) > 0");
  CHECK(error_code_of([] { in::fermi_dirac(0.005, 1e-8); }) == ErrorCode::kDomain);
  CHECK(error_code_of([] { in::rhs_eq15(-3.0); }) == ErrorCode::kDomain);
  CHECK(error_code_of([] { in::rhs_eq12(-2.0); }) == ErrorCode::kDomain);
}

TEST_CASE("Fermi-Dirac integral") {
  CHECK(std::abs(in::fermi_dirac(1.0, 1e-11).value - oracle::kLn2) < 1e-10);
  CHECK(std::abs(in::fermi_dirac(2.0, 1e-11).value - oracle::kPi * oracle::kPi / 12) < 1e-10);
  for (Complex s : {Complex(1.0), Complex(2.0), Complex(3.5), Complex(2.0, 1.0), Complex(0.5, -3.0)}) {
    const Complex expected = oracle::gamma(s) * oracle::borwein_eta(s);
    CHECK(std::abs(in::fermi_dirac(s, 1e-11).value - expected) < 1e-9);
  }
}

TEST_CASE("plus-kernel right side") {
  CHECK(std::abs(in::rhs_eq15(-1.0) - oracle::kLn4OverPi) < 1e-12);
  CHECK(std::abs(in::rhs_eq15(-2.0) - oracle::kPlusAtMinus2) < 1e-12);
  const double at0 = oracle::kPi * oracle::kPi / 12 + 1 - 2 * oracle::kLn2;
  CHECK(std::abs(in::rhs_eq15(0.0) - at0) < 1e-12);
  for (double re : kPlusRe) {
    for (double im : {0.0, 1.0, 2.0}) {
      const Complex s(re, im);
      CHECK(std::abs(in::rhs_eq15(s) - oracle_rhs_plus(s)) < 1e-9);
    }
  }
}

TEST_CASE("plus-kernel right side is continuous through the removable points") {
  for (double centre : {-1.0, -2.0}) {
    for (double r : {1e-9, 1e-7, 5e-5, 9.9e-5, 1.01e-4, 3e-4, 2e-3}) {
      for (Complex dir : {Complex(1.0), Complex(-1.0), Complex(0.0, 1.0), Complex(0.6, -0.8)}) {
        const Complex s = centre + r * dir;
        CAPTURE(s);
        CHECK(std::abs(in::rhs_eq15(s) - in::I_plus(s, 1e-11).value) < 1e-8);
      }
    }
  }
}

TEST_CASE("minus-kernel right side") {
  CHECK(std::abs(in::rhs_eq12(0.0) - (oracle::kZeta2 - 1)) < 1e-12);
  CHECK(std::abs(in::rhs_eq12(1.0) - 2 * (oracle::kZeta3 - 0.5)) < 1e-12);
  CHECK(std::abs(in::rhs_eq12(-1.0) - oracle::kEulerGamma) < 1e-8);
  for (double re : kMinusRe) {
    for (double im : {0.0, 1.0}) {
      const Complex s(re, im);
      CHECK(std::abs(in::rhs_eq12(s) - oracle_rhs_minus(s)) < 1e-9);
    }
  }
}

TEST_CASE("identity certificates on the acceptance grids") {
  for (double re : kPlusRe) {
    for (double im : {0.0, 1.0, 2.0}) {
      const Complex s(re, im);
      CAPTURE(s);
      CHECK(std::abs(in::I_plus(s, 1e-10).value - in::rhs_eq15(s)) <= 1e-8);
    }
  }
  for (double re : kMinusRe) {
    for (double im : {0.0, 1.0}) {
      const Complex s(re, im);
      CAPTURE(s);
      CHECK(std::abs(in::I_minus(s, 1e-10).value - in::rhs_eq12(s)) <= 1e-8);
    }
  }
}

TEST_CASE("Beukers-type single integrals") {
  const auto two = in::beukers_reduced(2, 1e-12);
  CHECK(two.converged);
  CHECK(std::abs(two.value - oracle::kZeta2) <= 1e-10);
  CHECK(std::abs(in::beukers_reduced(3, 1e-12).value - oracle::kZeta3) <= 1e-10);
  CHECK(error_code_of([] { in::beukers_reduced(4, 1e-8); }) == ErrorCode::kInvalidArgument);
  const auto square = nm::integrate_unit_square(
      [](double x, double y) { return Complex(1.0 / (1.0 - x * y)); }, 1e-8);
  CHECK(std::abs(square.value - two.value) < 1e-5);
}

TEST_CASE("termwise geometric-expansion series") {
  const auto one = in::termwise_series_oracle(SignedKernel::kPlus, 1);
  CHECK(one.value.real() == doctest::Approx(1 - oracle::kLn2).epsilon(1e-15));
  const auto minus = in::termwise_series_oracle(SignedKernel::kMinus, 1'000'000);
  CHECK(std::abs(minus.value - oracle::kEulerGamma) < 1e-6);
  REQUIRE(minus.remainder_bound.has_value());
  CHECK(std::abs(minus.value - oracle::kEulerGamma) <= *minus.remainder_bound);
  const auto plus = in::termwise_series_oracle(SignedKernel::kPlus, 10'000);
  REQUIRE(plus.remainder_bound.has_value());
  CHECK(std::abs(plus.value - oracle::kLn4OverPi) <= *plus.remainder_bound);
  CHECK(error_code_of([] { in::termwise_series_oracle(SignedKernel::kPlus, 0); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("two-dimensional and reduced routes agree") {
  for (SignedKernel k : {SignedKernel::kPlus, SignedKernel::kMinus}) {
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      CAPTURE(s);
      const auto square = nm::integrate_unit_square(
          [&](double x, double y) { return in::integrand_2d(k, s, x, y); }, 1e-8);
      const auto reduced = k == SignedKernel::kPlus ? in::I_plus(s, 1e-10) : in::I_minus(s, 1e-10);
      CHECK(std::abs(square.value - reduced.value) < 1e-5);
    }
  }
}
