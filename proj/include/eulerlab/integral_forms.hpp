// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "eulerlab/numerics.hpp"

namespace eulerlab::integrals {

/// Sign of the xy term in the 1 +- xy denominator.
enum class SignedKernel { kPlus, kMinus };

std::string_view kernel_name(SignedKernel kernel);

/// (1-x)/(1 +- xy) (-ln xy)^s on the open unit square.
Complex integrand_2d(SignedKernel kernel, Complex s, double x, double y);

/// Exact 1D form of the plus-kernel double integral after u = xy,
/// t = -ln u:  (t^(s+1) - 2 t^s)/(e^t + 1) + e^-t t^s  ~ t^(s+2)/4 at 0.
Complex reduced_integrand_plus(Complex s, double t);

/// Same reduction for the minus kernel:
/// t^(s+1)/(e^t - 1) - e^-t t^s  ~ t^(s+1)/2 at 0.
Complex reduced_integrand_minus(Complex s, double t);

/// Plus-kernel double integral through its 1D form. Re(s) > -2.99.
numerics::QuadratureResult I_plus(Complex s, double tol);

/// Minus-kernel double integral through its 1D form. Re(s) > -1.99.
numerics::QuadratureResult I_minus(Complex s, double tol);

/// int_0^inf t^(s-1)/(e^t + 1) dt. Re(s) > 0.01.
numerics::QuadratureResult fermi_dirac(Complex s, double tol);

/// Gamma(s+2) [eta(s+2) + (1 - 2 eta(s+1))/(s+1)], with the removable
/// singularities at s = -1 and s = -2 replaced by their limits.
Complex rhs_eq15(Complex s);

/// Gamma(s+2) [zeta(s+2) - 1/(s+1)]; at s = -1 this is Euler's constant.
Complex rhs_eq12(Complex s);

/// zeta(2) = int_0^1 (-ln u)/(1-u) du and
/// zeta(3) = 1/2 int_0^1 (-ln u)^2/(1-u) du.
numerics::QuadratureResult beukers_reduced(int order, double tol);

/// Partial sum of (+-1)^(n-1) (1/n - ln((n+1)/n)): the termwise integration
/// of the geometric expansion of 1/(1 +- xy).
numerics::SeriesResult termwise_series_oracle(SignedKernel kernel,
                                              std::int64_t n_terms);

}  // namespace eulerlab::integrals
