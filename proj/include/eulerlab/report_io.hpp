// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "eulerlab/identity_engine.hpp"

namespace eulerlab::identities {

/// Accepts RE, RE+IMi and RE-IMi (no spaces); "i" alone means unit
/// imaginary part, e.g. "2+i".
std::optional<Complex> parse_complex(std::string_view text);

/// Fixed notation with 15 digits after the point.
std::string format_value(double value);

/// RE when the imaginary part is zero, otherwise RE+IMi / RE-IMi.
std::string format_complex(Complex value);

/// Scientific notation for error magnitudes.
std::string format_error(double value);

enum class OutputFormat { kText, kJson, kCsv };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RenderOptions {
  OutputFormat format = OutputFormat::kText;
  // Wall-clock time is the only nondeterministic report field; without it
  // json and csv output is byte-stable. In json, "elapsed" is then null.
  bool include_timing = false;
  // Text only: per-identity table ahead of the reports.
  bool summary = false;
  // Json only: emit a single object instead of an array (one report).
  bool single_object = false;
};

inline constexpr std::string_view kCsvHeader =
    "id,s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass";

std::string render(std::span<const GridPoint> points, const RenderOptions& opts);

}  // namespace eulerlab::identities
