// Copyright 2026 The EulerLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "eulerlab/identity_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "eulerlab/constants.hpp"
#include "eulerlab/error.hpp"
#include "eulerlab/integral_forms.hpp"
#include "eulerlab/special_functions.hpp"

namespace eulerlab::identities {
namespace {

using integrals::SignedKernel;

constexpr double kPi = std::numbers::pi;

struct Sides {
  Complex lhs;
  Complex rhs;
  std::int64_t evaluations = 0;
};

using Evaluator = std::function<Sides(Complex s, double tol)>;

struct Entry {
  Identity meta;
  Evaluator evaluate;
};

// Quadrature routes run two orders of magnitude below the identity tolerance.
double quadrature_tol(double tol) { return std::max(0.01 * tol, 1e-14); }

double gamma_reference() { return constants::euler_formula_gamma(50).value; }

double ln_glaisher_rhs_eq9() {
  const double log_a = std::log(constants::glaisher_zeta().value);
  return 0.5 * std::log(kPi) + 6.0 * log_a - 7.0 / 6.0 * std::log(2.0) - 1.0;
}

// Richardson extrapolation to s = 1 of the symmetric averages of
// zeta(s) - 1/(s-1) at distances h, h/2, h/4.
double zeta_pole_limit() {
  auto average = [](double h) {
    return 0.5 * (special::zeta_minus_pole(1.0 + h) +
                  special::zeta_minus_pole(1.0 - h)).real();
  };
  const double a1 = average(0.1);
  const double a2 = average(0.05);
  const double a3 = average(0.025);
  const double r1 = (4.0 * a2 - a1) / 3.0;
  const double r2 = (4.0 * a3 - a2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

const std::vector<std::string> kCoreSemiInfinite = {
    "core.integrate_semi_infinite", "core.integrate_finite"};

std::vector<std::string> with(std::vector<std::string> ops,
                              const std::vector<std::string>& more) {
  ops.insert(ops.end(), more.begin(), more.end());
  return ops;
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  auto add = [&r](Identity meta, Evaluator eval) {
    r.push_back({std::move(meta), std::move(eval)});
  };

  add({.id = "eq2",
       .description = "Euler's constant as the (1-xy) double integral",
       .default_tol = 1e-9,
       .lhs_route = "I_minus(-1) by tanh-sinh on the reduced 1D integrand",
       .rhs_route = "euler_formula_gamma(50)",
       .lhs_ops = with({"integral_forms.I_minus",
                        "integral_forms.reduced_integrand_minus"},
                       kCoreSemiInfinite),
       .rhs_ops = {"constants.euler_formula_gamma",
                   "special_functions.zeta_euler_maclaurin"}},
      [](Complex, double tol) {
        const auto q = integrals::I_minus(-1.0, quadrature_tol(tol));
        return Sides{q.value, gamma_reference(), q.evaluations};
      });

  add({.id = "eq3",
       .description = "ln(4/pi) as the (1+xy) double integral",
       .default_tol = 1e-9,
       .lhs_route = "I_plus(-1) by tanh-sinh on the reduced 1D integrand",
       .rhs_route = "ln 4 - ln pi",
       .lhs_ops = with({"integral_forms.I_plus",
                        "integral_forms.reduced_integrand_plus"},
                       kCoreSemiInfinite),
       .rhs_ops = {"constants.ln_4_over_pi_closed_form"}},
      [](Complex, double tol) {
        const auto q = integrals::I_plus(-1.0, quadrature_tol(tol));
        return Sides{q.value, constants::ln_4_over_pi_closed_form().value,
                     q.evaluations};
      });

  add({.id = "eq4",
       .description = "Euler's formula linking gamma, ln(4/pi) and zeta(n)",
       .default_tol = 2e-6,
       .lhs_route = "euler_formula_gamma(50)",
       .rhs_route = "euler_gamma_series(10^6)",
       .lhs_ops = {"constants.euler_formula_gamma",
                   "special_functions.zeta_euler_maclaurin"},
       .rhs_ops = {"constants.euler_gamma_series"}},
      [](Complex, double) {
        const auto series = constants::euler_gamma_series(1'000'000);
        return Sides{gamma_reference(), series.value, series.terms_or_n + 50};
      });

  add({.id = "eq6",
       .description = "zeta(2) as a Beukers double integral",
       .default_tol = 1e-10,
       .lhs_route = "beukers_reduced(2)",
       .rhs_route = "pi^2/6",
       .lhs_ops = {"integral_forms.beukers_reduced", "core.integrate_finite"},
       .rhs_ops = {"closed_form.pi_squared_over_six"}},
      [](Complex, double tol) {
        const auto q = integrals::beukers_reduced(2, quadrature_tol(tol));
        return Sides{q.value, kPi * kPi / 6.0, q.evaluations};
      });

  add({.id = "eq7",
       .description = "zeta(3) as a Beukers double integral",
       .default_tol = 1e-10,
       .lhs_route = "beukers_reduced(3)",
       .rhs_route = "zeta(3)",
       .lhs_ops = {"integral_forms.beukers_reduced", "core.integrate_finite"},
       .rhs_ops = {"special_functions.zeta", "special_functions.eta"}},
      [](Complex, double tol) {
        const auto q = integrals::beukers_reduced(3, quadrature_tol(tol));
        return Sides{q.value, special::zeta(3.0), q.evaluations};
      });

  add({.id = "eq9",
       .description = "(1+xy) integral with (ln xy)^2: ln(pi^(1/2) A^6 / (2^(7/6) e))",
       .default_tol = 1e-8,
       .lhs_route = "I_plus(-2) by tanh-sinh on the reduced 1D integrand",
       .rhs_route = "1/2 ln pi + 6 ln A - 7/6 ln 2 - 1, A = glaisher_zeta",
       .lhs_ops = with({"integral_forms.I_plus",
                        "integral_forms.reduced_integrand_plus"},
                       kCoreSemiInfinite),
       .rhs_ops = {"constants.glaisher_zeta", "special_functions.zeta_prime",
                   "special_functions.eta", "special_functions.eta_prime"}},
      [](Complex, double tol) {
        const auto q = integrals::I_plus(-2.0, quadrature_tol(tol));
        return Sides{q.value, ln_glaisher_rhs_eq9(), q.evaluations};
      });

  add({.id = "eq10_limit",
       .description = "Glaisher-Kinkelin constant as the hyperfactorial limit",
       .default_tol = 1e-3,
       .lhs_route = "glaisher_limit(10^5)",
       .rhs_route = "exp(1/12 - zeta'(-1))",
       .lhs_ops = {"constants.glaisher_limit"},
       .rhs_ops = {"constants.glaisher_zeta", "special_functions.zeta_prime",
                   "special_functions.eta", "special_functions.eta_prime"}},
      [](Complex, double) {
        const auto limit = constants::glaisher_limit(100'000);
        return Sides{limit.value, constants::glaisher_zeta().value,
                     limit.terms_or_n};
      });

  add({.id = "eq11",
       .description = "Alternating harmonic series sums to ln 2",
       .default_tol = 1e-6,
       .lhs_route = "sum_series of (-1)^(n-1)/n cut at |term| < tol",
       .rhs_route = "ln 2",
       .lhs_ops = {"core.sum_series"},
       .rhs_ops = {"closed_form.log"}},
      [](Complex, double tol) {
        const auto series = numerics::sum_series(
            [](std::int64_t n) {
              return Complex((n % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(n));
            },
            tol, 10'000'000, true);
        return Sides{series.value, std::log(2.0), series.terms_used};
      });

  add({.id = "eq12",
       .description = "(1-xy) kernel integral as Gamma(s+2)[zeta(s+2) - 1/(s+1)], Re(s) > -2",
       .parameterized = true,
       .re_lower_bound = -2.0,
       .excluded_points = {{Complex(-1.0), 1e-6}},
       .default_tol = 1e-8,
       .lhs_route = "I_minus(s) by tanh-sinh on the reduced 1D integrand",
       .rhs_route = "Gamma(s+2) [zeta(s+2) - 1/(s+1)]",
       .lhs_ops = with({"integral_forms.I_minus",
                        "integral_forms.reduced_integrand_minus"},
                       kCoreSemiInfinite),
       .rhs_ops = {"integral_forms.rhs_eq12", "special_functions.gamma",
                   "special_functions.zeta_minus_pole", "special_functions.zeta",
                   "special_functions.eta"}},
      [](Complex s, double tol) {
        const auto q = integrals::I_minus(s, quadrature_tol(tol));
        return Sides{q.value, integrals::rhs_eq12(s), q.evaluations};
      });

  add({.id = "eq14",
       .description = "zeta(s) - 1/(s-1) tends to Euler's constant at s = 1",
       .default_tol = 1e-6,
       .lhs_route = "Richardson limit of zeta_minus_pole at 1 +- {0.1, 0.05, 0.025}",
       .rhs_route = "euler_formula_gamma(50)",
       .lhs_ops = {"special_functions.zeta_minus_pole", "special_functions.zeta",
                   "special_functions.eta"},
       .rhs_ops = {"constants.euler_formula_gamma",
                   "special_functions.zeta_euler_maclaurin"}},
      [](Complex, double) {
        return Sides{zeta_pole_limit(), gamma_reference(), 6};
      });

  add({.id = "eq15",
       .description = "(1+xy) kernel integral in closed form via eta, Re(s) > -3",
       .parameterized = true,
       .re_lower_bound = -3.0,
       .excluded_points = {{Complex(-1.0), 1e-6}, {Complex(-2.0), 1e-6}},
       .default_tol = 1e-8,
       .lhs_route = "I_plus(s) by tanh-sinh on the reduced 1D integrand",
       .rhs_route = "Gamma(s+2) [eta(s+2) + (1 - 2 eta(s+1))/(s+1)]",
       .lhs_ops = with({"integral_forms.I_plus",
                        "integral_forms.reduced_integrand_plus"},
                       kCoreSemiInfinite),
       .rhs_ops = {"integral_forms.rhs_eq15", "special_functions.gamma",
                   "special_functions.eta", "special_functions.eta_prime"}},
      [](Complex s, double tol) {
        const auto q = integrals::I_plus(s, quadrature_tol(tol));
        return Sides{q.value, integrals::rhs_eq15(s), q.evaluations};
      });

  // A functional equation: both sides necessarily use the same function.
  add({.id = "eq16",
       .description = "Gamma functional equation Gamma(s) = Gamma(s+1)/s",
       .parameterized = true,
       .default_tol = 1e-12,
       .tol_scales_with_rhs = true,
       .lhs_route = "Gamma(s+1)/s",
       .rhs_route = "Gamma(s)",
       .lhs_ops = {"special_functions.gamma"},
       .rhs_ops = {"special_functions.gamma"}},
      [](Complex s, double) {
        return Sides{special::gamma(s + 1.0) / s, special::gamma(s), 2};
      });

  add({.id = "eq17",
       .description = "Alternating zeta equals (1 - 2^(1-s)) zeta(s)",
       .parameterized = true,
       .default_tol = 1e-11,
       .tol_scales_with_rhs = true,
       .lhs_route = "eta(s) by Euler transformation",
       .rhs_route = "(1 - 2^(1-s)) zeta(s), zeta by Euler-Maclaurin",
       .lhs_ops = {"special_functions.eta"},
       .rhs_ops = {"special_functions.zeta_euler_maclaurin"}},
      [](Complex s, double) {
        const Complex factor = 1.0 - std::exp((1.0 - s) * std::log(2.0));
        return Sides{special::eta(s),
                     factor * special::zeta_euler_maclaurin(s), 2};
      });

  add({.id = "eq18",
       .description = "Fermi-Dirac type integral equals Gamma(s) eta(s)",
       .parameterized = true,
       .re_lower_bound = 0.01,
       .default_tol = 1e-9,
       .lhs_route = "fermi_dirac(s) by tanh-sinh",
       .rhs_route = "Gamma(s) eta(s)",
       .lhs_ops = with({"integral_forms.fermi_dirac"}, kCoreSemiInfinite),
       .rhs_ops = {"special_functions.gamma", "special_functions.eta"}},
      [](Complex s, double tol) {
        const auto q = integrals::fermi_dirac(s, quadrature_tol(tol));
        return Sides{q.value, special::gamma(s) * special::eta(s),
                     q.evaluations};
      });

  add({.id = "wallis",
       .description = "Wallis product tends to pi/2",
       .default_tol = 1e-6,
       .lhs_route = "wallis_partial(10^6)",
       .rhs_route = "pi/2",
       .lhs_ops = {"constants.wallis_partial"},
       .rhs_ops = {"closed_form.pi_over_two"}},
      [](Complex, double) {
        return Sides{constants::wallis_partial(1'000'000), kPi / 2.0,
                     1'000'000};
      });

  add({.id = "stirling",
       .description = "n!/(n^(n+1/2) e^-n) tends to sqrt(2 pi)",
       .default_tol = 1e-3,
       .lhs_route = "stirling_ratio(10^5)",
       .rhs_route = "sqrt(2 pi)",
       .lhs_ops = {"constants.stirling_ratio"},
       .rhs_ops = {"closed_form.sqrt_two_pi"}},
      [](Complex, double) {
        return Sides{constants::stirling_ratio(100'000), std::sqrt(2.0 * kPi),
                     1};
      });

  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build_registry();
  return entries;
}

const Entry& find_entry(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.meta.id == id) return e;
  }
  throw Error(ErrorCode::kUnknownIdentity, "unknown identity '" +
                                               std::string(id) +
                                               "'; known: " + identity_tokens());
}

std::string format_bound(double bound) {
  std::ostringstream out;
  out << bound;
  return out.str();
}

// Throws Error{kDomain} for points outside the half-plane or inside an
// exclusion radius.
void check_point(const Identity& meta, Complex s) {
  if (meta.re_lower_bound && !(s.real() > *meta.re_lower_bound)) {
    throw Error(ErrorCode::kDomain,
                "outside Re(s) > " + format_bound(*meta.re_lower_bound));
  }
  for (const auto& ex : meta.excluded_points) {
    if (std::abs(s - ex.point) < ex.radius) {
      throw Error(ErrorCode::kDomain, "s is an excluded point of " + meta.id +
                                          "; its limit is checked separately");
    }
  }
}

VerificationReport run(const Entry& entry, std::optional<Complex> s,
                       double tol) {
  const auto start = std::chrono::steady_clock::now();
  const Sides sides = entry.evaluate(s.value_or(Complex{}), tol);
  VerificationReport report;
  report.id = entry.meta.id;
  report.s = s;
  report.lhs = sides.lhs;
  report.rhs = sides.rhs;
  report.abs_err = std::abs(sides.lhs - sides.rhs);
  const double scale = std::abs(sides.rhs);
  if (scale >= 1e-300) report.rel_err = report.abs_err / scale;
  report.tol = entry.meta.tol_scales_with_rhs ? tol * std::max(1.0, scale) : tol;
  report.pass = report.abs_err <= report.tol;
  report.lhs_route = entry.meta.lhs_route;
  report.rhs_route = entry.meta.rhs_route;
  report.evaluations = sides.evaluations;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

double resolve_tol(const Identity& meta, std::optional<double> tol) {
  const double value = tol.value_or(meta.default_tol);
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  return value;
}

bool is_skippable(ErrorCode code) {
  return code == ErrorCode::kDomain || code == ErrorCode::kPole ||
         code == ErrorCode::kIllConditioned;
}

unsigned thread_count(unsigned requested, std::size_t work) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  n = std::max(n, 1u);
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

}  // namespace

const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> identities = [] {
    std::vector<Identity> out;
    for (const auto& e : registry()) out.push_back(e.meta);
    return out;
  }();
  return identities;
}

const Identity& find_identity(std::string_view id) { return find_entry(id).meta; }

std::string identity_tokens() {
  std::string out;
  for (const auto& e : registry()) {
    if (!out.empty()) out += ' ';
    out += e.meta.id;
  }
  return out;
}

VerificationReport verify(std::string_view id, std::optional<Complex> s,
                          std::optional<double> tol) {
  const Entry& entry = find_entry(id);
  const Identity& meta = entry.meta;
  if (meta.parameterized && !s) {
    throw Error(ErrorCode::kMissingParameter,
                "identity " + meta.id + " requires a parameter s");
  }
  if (!meta.parameterized && s) {
    throw Error(ErrorCode::kNotParameterized,
                "identity " + meta.id + " takes no parameter s");
  }
  const double resolved = resolve_tol(meta, tol);
  if (s) check_point(meta, *s);
  return run(entry, s, resolved);
}

std::vector<double> expand_range(const GridRange& range) {
  if (!std::isfinite(range.lo) || !std::isfinite(range.hi) ||
      !std::isfinite(range.step) || !(range.step > 0.0) ||
      range.hi < range.lo) {
    throw Error(ErrorCode::kInvalidArgument,
                "range requires finite lo <= hi and step > 0");
  }
  const double span = (range.hi - range.lo) / range.step;
  if (span > 1e6) {
    throw Error(ErrorCode::kInvalidArgument, "range has too many points");
  }
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = range.lo + static_cast<double>(i) * range.step;
  }
  return values;
}

std::vector<GridPoint> verify_points(std::string_view id,
                                     std::span<const Complex> points,
                                     std::optional<double> tol,
                                     unsigned max_threads) {
  const Entry& entry = find_entry(id);
  if (!entry.meta.parameterized) {
    throw Error(ErrorCode::kNotParameterized,
                "identity " + entry.meta.id + " takes no parameter s");
  }
  const double resolved = resolve_tol(entry.meta, tol);

  std::vector<GridPoint> out(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      GridPoint& gp = out[i];
      gp.id = entry.meta.id;
      gp.s = points[i];
      try {
        check_point(entry.meta, gp.s);
        gp.report = run(entry, gp.s, resolved);
      } catch (const Error& e) {
        if (!is_skippable(e.code())) throw;
        gp.skip_reason = e.what();
      }
    }
  };
  const unsigned n = thread_count(max_threads, points.size());
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> failures(n);
  for (unsigned t = 0; t < n; ++t) {
    threads.emplace_back([&, t] {
      try {
        worker();
      } catch (...) {
        failures[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

std::vector<GridPoint> grid(std::string_view id, const GridRange& re,
                            const GridRange& im, std::optional<double> tol,
                            unsigned max_threads) {
  find_entry(id);
  const auto res = expand_range(re);
  const auto ims = expand_range(im);
  std::vector<Complex> points;
  points.reserve(res.size() * ims.size());
  for (double y : ims) {
    for (double x : res) points.emplace_back(x, y);
  }
  return verify_points(id, points, tol, max_threads);
}

std::vector<Complex> seeded_points(std::size_t count, double re_lo,
                                   double re_hi, double im_lo, double im_hi,
                                   std::uint64_t seed) {
  // mt19937_64 output is fully specified; the [0,1) mapping is done by hand
  // so the panel is identical across standard libraries.
  std::mt19937_64 engine(seed);
  auto unit = [&engine] {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };
  std::vector<Complex> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double re = re_lo + (re_hi - re_lo) * unit();
    const double im = im_lo + (im_hi - im_lo) * unit();
    points.emplace_back(re, im);
  }
  return points;
}

std::vector<Complex> default_points(std::string_view id) {
  auto product = [](std::initializer_list<double> res,
                    std::initializer_list<double> ims) {
    std::vector<Complex> points;
    for (double y : ims) {
      for (double x : res) points.emplace_back(x, y);
    }
    return points;
  };
  if (id == "eq12") {
    return product({-1.5, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0}, {0.0, 1.0});
  }
  if (id == "eq15") {
    return product({-2.5, -2.25, -1.5, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0},
                   {0.0, 1.0, 2.0});
  }
  if (id == "eq16") return seeded_points(200, -3.0, 5.0, -2.0, 2.0, kPanelSeed);
  if (id == "eq17") return seeded_points(25, -2.0, 4.0, -4.0, 4.0, kPanelSeed);
  if (id == "eq18") {
    return {Complex(1.0), Complex(2.0), Complex(3.5), Complex(2.0, 1.0)};
  }
  find_entry(id);
  return {};
}

std::vector<VerificationReport> verify_all(
    const std::map<std::string, double>& tol_overrides, unsigned max_threads) {
  for (const auto& [id, value] : tol_overrides) {
    find_entry(id);
    if (!(value > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "tolerance override for " + id +
                                                   " must be positive");
    }
  }
  auto tol_for = [&](const std::string& id) -> std::optional<double> {
    const auto it = tol_overrides.find(id);
    if (it == tol_overrides.end()) return std::nullopt;
    return it->second;
  };
  std::vector<VerificationReport> reports;
  for (const auto& entry : registry()) {
    const auto& id = entry.meta.id;
    if (!entry.meta.parameterized) {
      reports.push_back(verify(id, std::nullopt, tol_for(id)));
      continue;
    }
    const auto points = default_points(id);
    for (auto& gp : verify_points(id, points, tol_for(id), max_threads)) {
      if (gp.report) reports.push_back(std::move(*gp.report));
    }
  }
  return reports;
}

bool all_pass(std::span<const VerificationReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

}  // namespace eulerlab::identities
