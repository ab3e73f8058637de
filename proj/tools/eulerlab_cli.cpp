// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C interface.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulerlab/eulerlab.h"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct ReportsDeleter {
  void operator()(eulerlab_reports* r) const { eulerlab_reports_free(r); }
};
using Reports = std::unique_ptr<eulerlab_reports, ReportsDeleter>;

std::optional<double> parse_real(const std::string& text) {
  std::string_view view = text;
  if (!view.empty() && view.front() == '+') view.remove_prefix(1);
  double value = 0.0;
  const char* end = view.data() + view.size();
  auto [ptr, ec] = std::from_chars(view.data(), end, value);
  if (view.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

eulerlab_complex parse_complex_arg(const std::string& text, const char* what) {
  eulerlab_complex z{};
  if (eulerlab_parse_complex(text.c_str(), &z) != EULERLAB_OK) {
    throw UsageError{std::string("malformed ") + what + " '" + text +
                     "' (expected RE, RE+IMi or RE-IMi)"};
  }
  return z;
}

double parse_tol(const std::string& text) {
  auto v = parse_real(text);
  if (!v || *v <= 0.0) {
    throw UsageError{"tolerance must be a positive real, got '" + text + "'"};
  }
  return *v;
}

eulerlab_format parse_format(const std::string& name) {
  if (name == "text") return EULERLAB_FORMAT_TEXT;
  if (name == "json") return EULERLAB_FORMAT_JSON;
  if (name == "csv") return EULERLAB_FORMAT_CSV;
  throw UsageError{"unknown format '" + name + "' (text, json, csv)"};
}

struct Range {
  double lo, hi, step;
};

Range parse_range(const std::string& text, const char* what) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) {
    throw UsageError{std::string("malformed ") + what + " range '" + text +
                     "' (expected LO:HI:STEP)"};
  }
  auto lo = parse_real(parts[0]);
  auto hi = parse_real(parts[1]);
  auto step = parse_real(parts[2]);
  if (!lo || !hi || !step) {
    throw UsageError{std::string("malformed ") + what + " range '" + text + "'"};
  }
  return {*lo, *hi, *step};
}

unsigned max_threads_from_env() {
  const char* raw = std::getenv("EULERLAB_MAX_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string text = raw;
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw UsageError{"EULERLAB_MAX_THREADS must be a positive integer, got '" +
                     text + "'"};
  }
  return value;
}

// Library failures: an exit code plus the message on stderr.
int library_failure(eulerlab_status status) {
  std::cerr << "error: " << eulerlab_last_error() << '\n';
  if (status == EULERLAB_ERROR_UNKNOWN_IDENTITY) {
    std::cerr << "known identities: " << eulerlab_identity_tokens() << '\n';
  }
  return status == EULERLAB_ERROR_INTERNAL ? kExitFail : kExitUsage;
}

class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {}

  // Writes to stdout and, with --out, the identical bytes to the file.
  void emit(const std::string& text) const {
    std::cout << text;
    std::cout.flush();
    if (path_.empty()) return;
    std::ofstream file(path_, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) throw UsageError{"cannot write '" + path_ + "'"};
  }

 private:
  std::string path_;
};

std::string render(const eulerlab_reports* reports, eulerlab_format format,
                   bool timing, bool summary) {
  char* raw = nullptr;
  const auto status =
      eulerlab_reports_render(reports, format, timing ? 1 : 0, summary ? 1 : 0, &raw);
  if (status != EULERLAB_OK) throw UsageError{eulerlab_last_error()};
  std::string text(raw);
  eulerlab_string_free(raw);
  return text;
}

std::string format_complex(eulerlab_complex z) {
  const size_t n = eulerlab_format_complex(z, nullptr, 0);
  std::string text(n + 1, '\0');
  eulerlab_format_complex(z, text.data(), text.size());
  text.resize(n);
  return text;
}

std::string format_fixed(double v) {
  return format_complex(eulerlab_complex{v, 0.0});
}

std::string format_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

nlohmann::ordered_json complex_json(eulerlab_complex z) {
  return {{"re", z.re}, {"im", z.im}};
}

// Options shared by every subcommand.
struct Common {
  std::string format = "text";
  std::string out;
  bool timing = false;

  void attach(CLI::App* cmd, bool with_timing) {
    cmd->add_option("--format", format, "text, json or csv");
    cmd->add_option("--out", out, "Also write the output to PATH");
    if (with_timing) {
      cmd->add_flag("--timing", timing, "Include wall-clock time per report");
    }
  }
};

int run_verify(const std::string& id, const std::optional<std::string>& s_text,
               const std::optional<std::string>& tol_text, const Common& common) {
  const auto format = parse_format(common.format);
  std::optional<eulerlab_complex> s;
  if (s_text) s = parse_complex_arg(*s_text, "s");
  std::optional<double> tol;
  if (tol_text) tol = parse_tol(*tol_text);
  eulerlab_reports* raw = nullptr;
  const auto status = eulerlab_verify(id.c_str(), s ? &*s : nullptr,
                                      tol ? &*tol : nullptr, &raw);
  if (status != EULERLAB_OK) return library_failure(status);
  Reports reports(raw);
  Output(common.out).emit(render(reports.get(), format, common.timing, false));
  return eulerlab_reports_all_pass(reports.get()) ? kExitPass : kExitFail;
}

int run_grid(const std::string& id, const std::string& re_text,
             const std::string& im_text, const std::optional<std::string>& tol_text,
             const Common& common) {
  const auto format = parse_format(common.format);
  const Range re = parse_range(re_text, "--re");
  const Range im = parse_range(im_text, "--im");
  std::optional<double> tol;
  if (tol_text) tol = parse_tol(*tol_text);
  const unsigned threads = max_threads_from_env();
  eulerlab_reports* raw = nullptr;
  const auto status = eulerlab_grid(id.c_str(), re.lo, re.hi, re.step, im.lo,
                                    im.hi, im.step, tol ? &*tol : nullptr,
                                    threads, &raw);
  if (status != EULERLAB_OK) return library_failure(status);
  Reports reports(raw);
  Output(common.out).emit(render(reports.get(), format, common.timing, false));
  return eulerlab_reports_all_pass(reports.get()) ? kExitPass : kExitFail;
}

int run_eval(const std::string& function, const std::string& s_text,
             const Common& common) {
  const auto format = parse_format(common.format);
  const eulerlab_complex s = parse_complex_arg(s_text, "s");
  eulerlab_complex value{};
  const auto status = eulerlab_eval(function.c_str(), s, &value);
  if (status == EULERLAB_ERROR_POLE) {
    std::cerr << "error: " << eulerlab_last_error() << '\n';
    return kExitFail;
  }
  if (status != EULERLAB_OK) return library_failure(status);
  std::string text;
  switch (format) {
    case EULERLAB_FORMAT_TEXT:
      text = format_complex(value) + "\n";
      break;
    case EULERLAB_FORMAT_JSON: {
      nlohmann::ordered_json j{{"function", function},
                               {"s", complex_json(s)},
                               {"value", complex_json(value)}};
      text = j.dump(2) + "\n";
      break;
    }
    case EULERLAB_FORMAT_CSV:
      text = "function,s_re,s_im,value_re,value_im\n" + function + "," +
             format_fixed(s.re) + "," + format_fixed(s.im) + "," +
             format_fixed(value.re) + "," + format_fixed(value.im) + "\n";
      break;
  }
  Output(common.out).emit(text);
  return kExitPass;
}

int run_const(const std::string& name, const std::optional<std::string>& method,
              const std::optional<long long>& n, const Common& common) {
  const auto format = parse_format(common.format);
  if (n && *n <= 0) throw UsageError{"--n must be a positive integer"};
  eulerlab_constant_estimate est{};
  const auto status = eulerlab_constant(
      name.c_str(), method ? method->c_str() : nullptr, n.value_or(0), &est);
  if (status != EULERLAB_OK) return library_failure(status);
  const std::string bound =
      est.has_error_bound ? format_sci(est.error_bound) : std::string("none");
  std::string text;
  switch (format) {
    case EULERLAB_FORMAT_TEXT:
      text = "constant: " + name + "\nvalue:    " + format_fixed(est.value) +
             "\nmethod:   " + est.method +
             "\nterms:    " + std::to_string(est.terms_or_n) +
             "\nbound:    " + bound + "\n";
      break;
    case EULERLAB_FORMAT_JSON: {
      nlohmann::ordered_json j{{"name", name},
                               {"value", est.value},
                               {"method", est.method},
                               {"terms_or_n", est.terms_or_n}};
      j["error_bound"] = est.has_error_bound
                             ? nlohmann::ordered_json(est.error_bound)
                             : nlohmann::ordered_json(nullptr);
      text = j.dump(2) + "\n";
      break;
    }
    case EULERLAB_FORMAT_CSV:
      text = "name,value,method,terms_or_n,error_bound\n" + name + "," +
             format_fixed(est.value) + "," + est.method + "," +
             std::to_string(est.terms_or_n) + "," +
             (est.has_error_bound ? format_sci(est.error_bound) : "") + "\n";
      break;
  }
  Output(common.out).emit(text);
  return kExitPass;
}

int run_all(const std::vector<std::string>& overrides, const Common& common) {
  const auto format = parse_format(common.format);
  std::vector<std::string> ids;
  std::vector<double> tols;
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError{"malformed --tol-override '" + item + "' (expected id=REAL)"};
    }
    ids.push_back(item.substr(0, eq));
    tols.push_back(parse_tol(item.substr(eq + 1)));
  }
  std::vector<const char*> id_ptrs;
  for (const auto& id : ids) id_ptrs.push_back(id.c_str());
  const unsigned threads = max_threads_from_env();
  eulerlab_reports* raw = nullptr;
  const auto status = eulerlab_verify_all(id_ptrs.data(), tols.data(),
                                          ids.size(), threads, &raw);
  if (status != EULERLAB_OK) return library_failure(status);
  Reports reports(raw);
  Output(common.out).emit(render(reports.get(), format, common.timing, true));
  return eulerlab_reports_all_pass(reports.get()) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-route numerical verification of zeta and gamma identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eulerlab_version()));

  Common common;

  std::string id;
  std::optional<std::string> s_opt, tol_opt;
  auto* verify = app.add_subcommand("verify", "Verify one identity");
  verify->add_option("identity", id, "Identity token")->required();
  verify->add_option("--s", s_opt, "Parameter RE, RE+IMi or RE-IMi");
  verify->add_option("--tol", tol_opt, "Absolute tolerance");
  common.attach(verify, true);

  std::string re_range, im_range = "0:0:1";
  auto* grid = app.add_subcommand("grid", "Sweep a parameterized identity");
  grid->add_option("identity", id, "Identity token")->required();
  grid->add_option("--re", re_range, "LO:HI:STEP")->required();
  grid->add_option("--im", im_range, "LO:HI:STEP (default 0:0:1)");
  grid->add_option("--tol", tol_opt, "Absolute tolerance");
  common.attach(grid, true);

  std::string function, s_pos;
  auto* eval = app.add_subcommand("eval", "Evaluate a special function");
  eval->add_option("function", function,
                   "gamma, eta, eta_prime, zeta, zeta_prime, zeta_minus_pole")
      ->required();
  eval->add_option("s", s_pos, "Argument RE, RE+IMi or RE-IMi")->required();
  common.attach(eval, false);

  std::string name;
  std::optional<std::string> method;
  std::optional<long long> n_terms;
  auto* constant = app.add_subcommand("const", "Estimate a constant");
  constant->add_option("name", name, "gamma, ln4pi, glaisher, sqrt2pi, ln2")
      ->required();
  constant->add_option("--method", method,
                       "series, euler_formula, limit_ratio, closed_form, zeta_route");
  constant->add_option("--n", n_terms, "Terms or limit index");
  common.attach(constant, false);

  std::vector<std::string> overrides;
  auto* all = app.add_subcommand("all", "Verify every identity");
  all->add_option("--tol-override", overrides, "id=REAL, repeatable")
      ->allow_extra_args(false);
  common.attach(all, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(id, s_opt, tol_opt, common);
    if (*grid) return run_grid(id, re_range, im_range, tol_opt, common);
    if (*eval) return run_eval(function, s_pos, common);
    if (*constant) return run_const(name, method, n_terms, common);
    if (*all) return run_all(overrides, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
