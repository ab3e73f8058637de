// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/eulerlab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "eulerlab/constants.hpp"
#include "eulerlab/error.hpp"
#include "eulerlab/identity_engine.hpp"
#include "eulerlab/report_io.hpp"
#include "eulerlab/special_functions.hpp"

struct eulerlab_reports {
  std::vector<eulerlab::identities::GridPoint> points;
  bool single = false;
};

namespace {

using eulerlab::Complex;
using eulerlab::Error;
using eulerlab::ErrorCode;
namespace ids = eulerlab::identities;

thread_local std::string last_error;

eulerlab_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return EULERLAB_ERROR_INVALID_ARGUMENT;
    case ErrorCode::kDomain:
      return EULERLAB_ERROR_DOMAIN;
    case ErrorCode::kPole:
      return EULERLAB_ERROR_POLE;
    case ErrorCode::kIllConditioned:
      return EULERLAB_ERROR_ILL_CONDITIONED;
    case ErrorCode::kIntegrandInvalid:
      return EULERLAB_ERROR_INTEGRAND_INVALID;
    case ErrorCode::kUnknownIdentity:
      return EULERLAB_ERROR_UNKNOWN_IDENTITY;
    case ErrorCode::kMissingParameter:
      return EULERLAB_ERROR_MISSING_PARAMETER;
    case ErrorCode::kNotParameterized:
      return EULERLAB_ERROR_NOT_PARAMETERIZED;
  }
  return EULERLAB_ERROR_INTERNAL;
}

eulerlab_status fail(eulerlab_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating every exception into a status code.
template <typename Body>
eulerlab_status guarded(Body&& body) {
  try {
    body();
    return EULERLAB_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EULERLAB_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EULERLAB_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(EULERLAB_ERROR_INTERNAL, "unknown failure");
  }
}

eulerlab_complex to_c(Complex z) { return {z.real(), z.imag()}; }
Complex from_c(eulerlab_complex z) { return {z.re, z.im}; }

eulerlab_status null_argument(const char* name) {
  return fail(EULERLAB_ERROR_INVALID_ARGUMENT,
              std::string(name) + " must not be null");
}

}  // namespace

extern "C" {

const char* eulerlab_version(void) { return "1.0.0"; }

const char* eulerlab_last_error(void) { return last_error.c_str(); }

const char* eulerlab_status_name(eulerlab_status status) {
  switch (status) {
    case EULERLAB_OK:
      return "ok";
    case EULERLAB_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case EULERLAB_ERROR_DOMAIN:
      return "domain error";
    case EULERLAB_ERROR_POLE:
      return "pole";
    case EULERLAB_ERROR_ILL_CONDITIONED:
      return "ill-conditioned point";
    case EULERLAB_ERROR_INTEGRAND_INVALID:
      return "integrand invalid";
    case EULERLAB_ERROR_UNKNOWN_IDENTITY:
      return "unknown identity";
    case EULERLAB_ERROR_MISSING_PARAMETER:
      return "missing parameter";
    case EULERLAB_ERROR_NOT_PARAMETERIZED:
      return "identity not parameterized";
    case EULERLAB_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

size_t eulerlab_identity_count(void) { return ids::list_identities().size(); }

eulerlab_status eulerlab_identity_at(size_t index, eulerlab_identity_info* out) {
  if (out == nullptr) return null_argument("out");
  const auto& all = ids::list_identities();
  if (index >= all.size()) {
    return fail(EULERLAB_ERROR_INVALID_ARGUMENT, "identity index out of range");
  }
  const auto& meta = all[index];
  out->id = meta.id.c_str();
  out->description = meta.description.c_str();
  out->parameterized = meta.parameterized ? 1 : 0;
  out->has_re_lower_bound = meta.re_lower_bound ? 1 : 0;
  out->re_lower_bound = meta.re_lower_bound.value_or(0.0);
  out->default_tol = meta.default_tol;
  out->lhs_route = meta.lhs_route.c_str();
  out->rhs_route = meta.rhs_route.c_str();
  return EULERLAB_OK;
}

const char* eulerlab_identity_tokens(void) {
  static const std::string tokens = ids::identity_tokens();
  return tokens.c_str();
}

eulerlab_status eulerlab_verify(const char* id, const eulerlab_complex* s,
                                const double* tol, eulerlab_reports** out) {
  if (id == nullptr) return null_argument("id");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::optional<Complex> param;
    if (s != nullptr) param = from_c(*s);
    std::optional<double> tolerance;
    if (tol != nullptr) tolerance = *tol;
    auto report = ids::verify(id, param, tolerance);
    auto set = std::make_unique<eulerlab_reports>();
    set->single = true;
    set->points.push_back(
        {report.id, param.value_or(Complex{}), std::move(report), {}});
    *out = set.release();
  });
}

eulerlab_status eulerlab_grid(const char* id, double re_lo, double re_hi,
                              double re_step, double im_lo, double im_hi,
                              double im_step, const double* tol,
                              unsigned max_threads, eulerlab_reports** out) {
  if (id == nullptr) return null_argument("id");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::optional<double> tolerance;
    if (tol != nullptr) tolerance = *tol;
    auto set = std::make_unique<eulerlab_reports>();
    set->points = ids::grid(id, {re_lo, re_hi, re_step},
                            {im_lo, im_hi, im_step}, tolerance, max_threads);
    *out = set.release();
  });
}

eulerlab_status eulerlab_verify_all(const char* const* override_ids,
                                    const double* override_tols,
                                    size_t override_count, unsigned max_threads,
                                    eulerlab_reports** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (override_count > 0 && (override_ids == nullptr || override_tols == nullptr)) {
    return null_argument("override arrays");
  }
  return guarded([&] {
    std::map<std::string, double> overrides;
    for (size_t i = 0; i < override_count; ++i) {
      if (override_ids[i] == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "override id must not be null");
      }
      overrides[override_ids[i]] = override_tols[i];
    }
    auto reports = ids::verify_all(overrides, max_threads);
    auto set = std::make_unique<eulerlab_reports>();
    set->points.reserve(reports.size());
    for (auto& r : reports) {
      const std::string id = r.id;
      const Complex s = r.s.value_or(Complex{});
      set->points.push_back({id, s, std::move(r), {}});
    }
    *out = set.release();
  });
}

void eulerlab_reports_free(eulerlab_reports* reports) { delete reports; }

size_t eulerlab_reports_size(const eulerlab_reports* reports) {
  return reports == nullptr ? 0 : reports->points.size();
}

int eulerlab_reports_all_pass(const eulerlab_reports* reports) {
  if (reports == nullptr) return 0;
  for (const auto& gp : reports->points) {
    if (gp.report && !gp.report->pass) return 0;
  }
  return 1;
}

eulerlab_status eulerlab_reports_get(const eulerlab_reports* reports,
                                     size_t index, eulerlab_report_view* out) {
  if (reports == nullptr) return null_argument("reports");
  if (out == nullptr) return null_argument("out");
  if (index >= reports->points.size()) {
    return fail(EULERLAB_ERROR_INVALID_ARGUMENT, "report index out of range");
  }
  const auto& gp = reports->points[index];
  *out = eulerlab_report_view{};
  out->id = gp.id.c_str();
  out->skipped = gp.report ? 0 : 1;
  out->skip_reason = gp.skip_reason.c_str();
  out->has_s = 1;
  out->s = to_c(gp.s);
  if (!gp.report) return EULERLAB_OK;
  const auto& r = *gp.report;
  out->has_s = r.s ? 1 : 0;
  out->s = to_c(r.s.value_or(Complex{}));
  out->lhs = to_c(r.lhs);
  out->rhs = to_c(r.rhs);
  out->abs_err = r.abs_err;
  out->has_rel_err = r.rel_err ? 1 : 0;
  out->rel_err = r.rel_err.value_or(0.0);
  out->tol = r.tol;
  out->pass = r.pass ? 1 : 0;
  out->lhs_route = r.lhs_route.c_str();
  out->rhs_route = r.rhs_route.c_str();
  out->evaluations = static_cast<long long>(r.evaluations);
  out->elapsed_seconds = r.elapsed.count();
  return EULERLAB_OK;
}

eulerlab_status eulerlab_reports_render(const eulerlab_reports* reports,
                                        eulerlab_format format,
                                        int include_timing, int summary,
                                        char** out) {
  if (reports == nullptr) return null_argument("reports");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    ids::RenderOptions opts;
    switch (format) {
      case EULERLAB_FORMAT_TEXT:
        opts.format = ids::OutputFormat::kText;
        break;
      case EULERLAB_FORMAT_JSON:
        opts.format = ids::OutputFormat::kJson;
        break;
      case EULERLAB_FORMAT_CSV:
        opts.format = ids::OutputFormat::kCsv;
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown output format");
    }
    opts.include_timing = include_timing != 0;
    opts.summary = summary != 0;
    opts.single_object = reports->single;
    const std::string text = ids::render(reports->points, opts);
    char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
    if (buffer == nullptr) throw std::bad_alloc();
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void eulerlab_string_free(char* text) { std::free(text); }

eulerlab_status eulerlab_eval(const char* function, eulerlab_complex s,
                              eulerlab_complex* out) {
  if (function == nullptr) return null_argument("function");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    namespace sf = eulerlab::special;
    const std::string name = function;
    const Complex z = from_c(s);
    // Truncate below the 15 printed decimals.
    const sf::EvalOptions opts{.tol = 1e-16};
    Complex value;
    if (name == "gamma") {
      value = sf::gamma(z);
    } else if (name == "eta") {
      value = sf::eta(z, opts);
    } else if (name == "eta_prime") {
      value = sf::eta_prime(z, opts);
    } else if (name == "zeta") {
      value = sf::zeta(z, opts);
    } else if (name == "zeta_prime") {
      value = sf::zeta_prime(z, opts);
    } else if (name == "zeta_minus_pole") {
      value = sf::zeta_minus_pole(z, opts);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown function '" + name +
                      "'; known: gamma eta eta_prime zeta zeta_prime "
                      "zeta_minus_pole");
    }
    *out = to_c(value);
  });
}

eulerlab_status eulerlab_constant(const char* name, const char* method,
                                  long long n, eulerlab_constant_estimate* out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    namespace c = eulerlab::constants;
    std::optional<c::Method> m;
    if (method != nullptr) {
      m = c::parse_method(method);
      if (!m) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("unknown method '") + method + "'");
      }
    }
    std::optional<std::int64_t> terms;
    if (n > 0) terms = n;
    const auto est = c::estimate(name, m, terms);
    out->value = est.value;
    out->method = c::method_name(est.method).data();
    out->terms_or_n = static_cast<long long>(est.terms_or_n);
    out->has_error_bound = est.error_bound ? 1 : 0;
    out->error_bound = est.error_bound.value_or(0.0);
  });
}

eulerlab_status eulerlab_parse_complex(const char* text, eulerlab_complex* out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  const auto z = ids::parse_complex(text);
  if (!z) {
    return fail(EULERLAB_ERROR_INVALID_ARGUMENT,
                std::string("malformed complex literal '") + text + "'");
  }
  *out = to_c(*z);
  return EULERLAB_OK;
}

size_t eulerlab_format_complex(eulerlab_complex value, char* buf, size_t size) {
  const std::string text = ids::format_complex(from_c(value));
  if (buf != nullptr && size > 0) {
    const size_t n = std::min(size - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return text.size();
}

}  // extern "C"
