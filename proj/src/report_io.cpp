// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace eulerlab::identities {
namespace {

using nlohmann::ordered_json;

std::optional<double> parse_real(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

ordered_json complex_json(Complex z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json point_json(const GridPoint& gp, bool timing) {
  if (!gp.report) {
    return ordered_json{{"id", gp.id},
                        {"s", complex_json(gp.s)},
                        {"skipped", true},
                        {"skip_reason", gp.skip_reason}};
  }
  const VerificationReport& r = *gp.report;
  ordered_json j;
  j["id"] = r.id;
  j["s"] = r.s ? complex_json(*r.s) : ordered_json(nullptr);
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err ? ordered_json(*r.rel_err) : ordered_json(nullptr);
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  j["lhs_route"] = r.lhs_route;
  j["rhs_route"] = r.rhs_route;
  j["evaluations"] = r.evaluations;
  j["elapsed"] = timing ? ordered_json(r.elapsed.count()) : ordered_json(nullptr);
  return j;
}

std::string csv_row(const GridPoint& gp) {
  std::ostringstream out;
  if (!gp.report) {
    out << gp.id << ',' << format_value(gp.s.real()) << ','
        << format_value(gp.s.imag()) << ",,,,,,,,skipped";
    return out.str();
  }
  const VerificationReport& r = *gp.report;
  const Complex s = r.s.value_or(Complex{});
  out << r.id << ',';
  if (r.s) {
    out << format_value(s.real()) << ',' << format_value(s.imag());
  } else {
    out << ',';
  }
  out << ',' << format_value(r.lhs.real()) << ',' << format_value(r.lhs.imag())
      << ',' << format_value(r.rhs.real()) << ',' << format_value(r.rhs.imag())
      << ',' << format_error(r.abs_err) << ','
      << (r.rel_err ? format_error(*r.rel_err) : std::string("undefined")) << ','
      << format_error(r.tol) << ',' << (r.pass ? "true" : "false");
  return out.str();
}

void text_report(std::ostringstream& out, const GridPoint& gp, bool timing) {
  if (!gp.report) {
    out << gp.id << "  s=" << format_complex(gp.s) << "  SKIPPED (" << gp.skip_reason
        << ")\n";
    return;
  }
  const VerificationReport& r = *gp.report;
  out << r.id;
  if (r.s) out << "  s=" << format_complex(*r.s);
  out << "  " << (r.pass ? "PASS" : "FAIL") << '\n'
      << "  lhs = " << format_complex(r.lhs) << "  [" << r.lhs_route << "]\n"
      << "  rhs = " << format_complex(r.rhs) << "  [" << r.rhs_route << "]\n"
      << "  abs_err = " << format_error(r.abs_err) << "  rel_err = "
      << (r.rel_err ? format_error(*r.rel_err) : std::string("undefined"))
      << "  tol = " << format_error(r.tol) << '\n'
      << "  evaluations = " << r.evaluations;
  if (timing) out << "  elapsed = " << r.elapsed.count() << " s";
  out << '\n';
}

void text_summary(std::ostringstream& out, std::span<const GridPoint> points) {
  struct Row {
    int total = 0;
    int passed = 0;
    double worst = 0.0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  for (const auto& gp : points) {
    if (!gp.report) continue;
    const auto& r = *gp.report;
    if (!rows.contains(r.id)) order.push_back(r.id);
    Row& row = rows[r.id];
    ++row.total;
    row.passed += r.pass ? 1 : 0;
    row.worst = std::max(row.worst, r.abs_err);
  }
  char line[128];
  std::snprintf(line, sizeof line, "%-12s %7s %7s %14s  %s\n", "identity",
                "checks", "passed", "max_abs_err", "status");
  out << line;
  int total = 0;
  int passed = 0;
  for (const auto& id : order) {
    const Row& row = rows[id];
    total += row.total;
    passed += row.passed;
    std::snprintf(line, sizeof line, "%-12s %7d %7d %14.3e  %s\n", id.c_str(),
                  row.total, row.passed, row.worst,
                  row.passed == row.total ? "PASS" : "FAIL");
    out << line;
  }
  std::snprintf(line, sizeof line, "%d/%d checks passed\n\n", passed, total);
  out << line;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  text.remove_suffix(1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' &&
        text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0;
  std::string_view imag_text = text;
  if (split != std::string_view::npos) {
    const auto parsed = parse_real(text.substr(0, split));
    if (!parsed) return std::nullopt;
    re = *parsed;
    imag_text = text.substr(split);
  }
  double im = 0.0;
  if (imag_text.empty() || imag_text == "+") {
    im = 1.0;
  } else if (imag_text == "-") {
    im = -1.0;
  } else {
    const auto parsed = parse_real(imag_text);
    if (!parsed) return std::nullopt;
    im = *parsed;
  }
  return Complex(re, im);
}

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", value == 0.0 ? 0.0 : value);
  return buf;
}

std::string format_complex(Complex value) {
  if (value.imag() == 0.0) return format_value(value.real());
  std::string out = format_value(value.real());
  if (!std::signbit(value.imag())) out += '+';
  return out + format_value(value.imag()) + "i";
}

std::string format_error(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::string render(std::span<const GridPoint> points, const RenderOptions& opts) {
  std::ostringstream out;
  switch (opts.format) {
    case OutputFormat::kJson: {
      if (opts.single_object && points.size() == 1) {
        out << point_json(points.front(), opts.include_timing).dump(2) << '\n';
        break;
      }
      ordered_json array = ordered_json::array();
      for (const auto& gp : points) {
        array.push_back(point_json(gp, opts.include_timing));
      }
      out << array.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv: {
      out << kCsvHeader << '\n';
      for (const auto& gp : points) out << csv_row(gp) << '\n';
      break;
    }
    case OutputFormat::kText: {
      if (opts.summary) text_summary(out, points);
      for (const auto& gp : points) text_report(out, gp, opts.include_timing);
      break;
    }
  }
  return out.str();
}

}  // namespace eulerlab::identities
