// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerlab/numerics.hpp"

namespace eulerlab::identities {

struct ExcludedPoint {
  Complex point;
  double radius = 0.0;
};

/// One registered identity. `lhs_ops` / `rhs_ops` name every library
/// operation each side depends on ("module.operation"); core numerics
/// primitives are listed with the "core." prefix.
struct Identity {
  std::string id;
  std::string description;
  bool parameterized = false;
  std::optional<double> re_lower_bound;  // s_domain: Re(s) > bound
  std::vector<ExcludedPoint> excluded_points;
  double default_tol = 0.0;
  bool tol_scales_with_rhs = false;  // tol * max(1, |rhs|) per report
  std::string lhs_route;
  std::string rhs_route;
  std::vector<std::string> lhs_ops;
  std::vector<std::string> rhs_ops;
};

struct VerificationReport {
  std::string id;
  std::optional<Complex> s;
  Complex lhs{};
  Complex rhs{};
  double abs_err = 0.0;
  std::optional<double> rel_err;  // empty when |rhs| < 1e-300
  double tol = 0.0;
  bool pass = false;  // abs_err <= tol
  std::string lhs_route;
  std::string rhs_route;
  std::int64_t evaluations = 0;
  std::chrono::duration<double> elapsed{};
};

/// A grid point either carries a report or the reason it was skipped.
struct GridPoint {
  std::string id;
  Complex s;
  std::optional<VerificationReport> report;
  std::string skip_reason;
};

struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};

/// All registry entries in stable order.
const std::vector<Identity>& list_identities();

/// Throws Error{kUnknownIdentity}.
const Identity& find_identity(std::string_view id);

/// Space-separated list of every registered token.
std::string identity_tokens();

/// Evaluates both sides of one identity. Numeric disagreement yields
/// pass = false; invalid requests throw (unknown id, s missing or
/// unexpected, s outside the domain or inside an exclusion radius).
VerificationReport verify(std::string_view id,
                          std::optional<Complex> s = std::nullopt,
                          std::optional<double> tol = std::nullopt);

/// Values lo, lo + step, ... <= hi. Throws Error{kInvalidArgument} for an
/// empty or malformed range.
std::vector<double> expand_range(const GridRange& range);

/// Verifies a parameterized identity at each point, in order. Points outside
/// the domain, inside an exclusion radius, or at a pole are skipped.
/// Evaluation is spread over up to `max_threads` threads (0: hardware).
std::vector<GridPoint> verify_points(std::string_view id,
                                     std::span<const Complex> points,
                                     std::optional<double> tol = std::nullopt,
                                     unsigned max_threads = 0);

/// Row-major sweep (real part fastest) over re x im.
std::vector<GridPoint> grid(std::string_view id, const GridRange& re,
                            const GridRange& im,
                            std::optional<double> tol = std::nullopt,
                            unsigned max_threads = 0);

/// Reproducible pseudo-random points in [re_lo, re_hi) x [im_lo, im_hi).
std::vector<Complex> seeded_points(std::size_t count, double re_lo,
                                   double re_hi, double im_lo, double im_hi,
                                   std::uint64_t seed);

inline constexpr std::uint64_t kPanelSeed = 0x5EED;

/// Points each parameterized identity is checked at by verify_all.
std::vector<Complex> default_points(std::string_view id);

/// Every non-parameterized identity plus the default points of the
/// parameterized ones.
std::vector<VerificationReport> verify_all(
    const std::map<std::string, double>& tol_overrides = {},
    unsigned max_threads = 0);

bool all_pass(std::span<const VerificationReport> reports);

}  // namespace eulerlab::identities
