// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,
  kPole,
  kIllConditioned,
  kIntegrandInvalid,
  kUnknownIdentity,
  kMissingParameter,
  kNotParameterized,
};

// Every failure raised by the library carries one of the codes above so the
// C boundary can translate it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eulerlab
