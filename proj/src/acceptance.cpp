#include "vdw/acceptance.hpp"

#include "vdw/instantaneous.hpp"
#include "vdw/kato.hpp"
#include "vdw/oracles.hpp"
#include "vdw/retarded.hpp"
#include "vdw/specfun.hpp"
#include "vdw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace vdw {

namespace {

double rel_err(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<double> log_points(double lo, double hi, int n) {
  return log_grid({lo, hi, n});
}

using Check = std::function<CriterionResult()>;

CriterionResult guarded(int id, const std::string &name, const Check &check) {
  try {
    auto r = check();
    r.id = id;
    r.name = name;
    return r;
  } catch (const std::exception &e) {
    return {id, name, false, std::string("exception: ") + e.what()};
  }
}

CriterionResult london_constant() {
  const double f = e4_energy_closed(1e-4);
  const double err = rel_err(f, 0.75);
  return {0, "", err <= 1e-4, "F(1e-4) = " + format_number(f) + ", rel err " + sci(err)};
}

CriterionResult casimir_polder_constant(double expected) {
  const double e100 = rel_err(e4_energy_closed(100.0) * 100.0, expected);
  const double e1000 = rel_err(e4_energy_closed(1000.0) * 1000.0, expected);
  const double lib = rel_err(asymptote_casimir_polder(), expected);
  const bool ok = e100 <= 1e-2 && e1000 <= 1e-3 && lib <= 1e-15;
  return {0, "", ok,
          "rel err r=100: " + sci(e100) + " (<= 1e-2), r=1000: " + sci(e1000) +
              " (<= 1e-3), library constant: " + sci(lib)};
}

CriterionResult route_equivalence() {
  double worst_reduced = 0.0;
  double worst_tensor = 0.0;
  const QuadratureSpec spec(0.0, 1e-12);
  for (double r : log_points(1e-3, 1e3, 48)) {
    const double closed = e4_energy_closed(r);
    worst_reduced = std::max(worst_reduced, rel_err(e4_energy_reduced(r, spec), closed));
    worst_tensor = std::max(worst_tensor, rel_err(e4_energy_tensor(r, spec), closed));
  }
  return {0, "", worst_reduced <= 1e-8 && worst_tensor <= 1e-6,
          "max rel err reduced/closed " + sci(worst_reduced) +
              " (<= 1e-8), tensor/closed " + sci(worst_tensor) + " (<= 1e-6)"};
}

CriterionResult slope_crossover() {
  const auto curve = crossover_curve(1e-3, 1e3, 97);
  const auto &s = curve.slope;
  bool in_range = true;
  bool monotone = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    in_range = in_range && s[i] >= -1.0 - 1e-3 && s[i] <= 1e-3;
    if (i > 0)
      monotone = monotone && s[i] <= s[i - 1];
  }
  const bool ends = s.front() >= -0.01 && s.back() <= -0.99;
  return {0, "", in_range && monotone && ends,
          "slope(1e-3) = " + format_number(s.front()) + ", slope(1e3) = " +
              format_number(s.back()) + ", in range: " +
              (in_range ? "yes" : "no") + ", monotone: " +
              (monotone ? "yes" : "no")};
}

CriterionResult all_orders_vs_normal_modes() {
  double worst = 0.0;
  for (double g : {0.05, 0.1, 0.2, 0.4}) {
    const auto spectral = exact_energy_spectral(g, QuadratureSpec(0.0, 1e-13));
    const auto modes = exact_energy_normal_modes(g);
    worst = std::max(worst, rel_err(spectral.re, modes.re));
    if (spectral.im != 0.0 || modes.im != 0.0)
      return {0, "", false, "nonzero imaginary part below threshold"};
  }
  return {0, "", worst <= 1e-10, "max rel err " + sci(worst) + " (<= 1e-10)"};
}

CriterionResult decay_thresholds() {
  std::string detail;
  bool ok = true;
  for (double g : {0.0, 0.1, 0.25, 0.4, 0.49, 0.5}) {
    if (exact_energy_spectral(g).im != 0.0 || exact_energy_normal_modes(g).im != 0.0) {
      ok = false;
      detail += "im != 0 at g=" + format_number(g) + "; ";
    }
  }
  for (double g : {0.6, 0.9}) {
    if (!(exact_energy_spectral(g).im < 0.0) || !(exact_energy_normal_modes(g).im < 0.0)) {
      ok = false;
      detail += "im not < 0 at g=" + format_number(g) + "; ";
    }
  }
  // Second channel at g = 1: slope of im jumps.
  const auto im_slope = [](double a, double b) {
    return (exact_energy_spectral(b).im - exact_energy_spectral(a).im) / (b - a);
  };
  const double left = im_slope(0.98, 0.99);
  const double right = im_slope(1.01, 1.02);
  const bool kink = std::abs(right - left) >= 1.0;
  ok = ok && kink;
  detail += "d(im)/dg below g=1: " + sci(left) + ", above: " + sci(right);

  // R1 = (2 alpha)^(1/3), R2 = alpha^(1/3), and im != 0 exactly below R1.
  for (const auto &p : {ModelParams::unit(), ModelParams(1.0, 137.0, 1.0, 0.3, 0.5)}) {
    const double alpha = polarizability(p);
    const auto t = thresholds(p);
    const bool algebra = rel_err(t.r1 * t.r1 * t.r1, 2.0 * alpha) <= 1e-14 &&
                         rel_err(t.r2 * t.r2 * t.r2, alpha) <= 1e-14 && t.r1 > t.r2;
    const auto g_at = [&](double R) { return to_dimensionless(p, R).g; };
    const bool inside = exact_energy_normal_modes(g_at(t.r1 * (1 - 1e-9))).im < 0.0;
    const bool outside = exact_energy_normal_modes(g_at(t.r1 * (1 + 1e-9))).im == 0.0;
    const bool second = exact_energy_normal_modes(g_at(t.r2 * (1 - 1e-6))).im <
                        exact_energy_normal_modes(g_at(t.r2 * (1 + 1e-6))).im - 1e-4;
    if (!(algebra && inside && outside && second)) {
      ok = false;
      detail += "; threshold radii inconsistent";
    }
  }
  return {0, "", ok, detail};
}

CriterionResult kato_engine() {
  const double g = 0.1;
  const auto three = build_three_channel_pair(g, 4);
  const auto one = build_coupled_pair(g, 4);
  const double e1 = kato_energy_coefficient(three.h0, three.hint, 1);
  const double e2 = kato_energy_coefficient(three.h0, three.hint, 2);
  const double e3 = kato_energy_coefficient(three.h0, three.hint, 3);
  const double e4 = kato_energy_coefficient(three.h0, three.hint, 4);
  const double e4_one = kato_energy_coefficient(one.h0, one.hint, 4);
  const double g4 = g * g * g * g;
  const double err2 = rel_err(e2, -0.75 * g * g);
  const double err4 = rel_err(e4, -45.0 / 64.0 * g4);
  const double err4_one =
      rel_err(e4_one, -5.0 / 128.0 * g4);
  const auto split = verify_fourth_order_subtraction(three.h0, three.hint);
  const bool ok = std::abs(e1) <= 1e-14 && err2 <= 1e-12 && std::abs(e3) <= 1e-14 &&
                  err4 <= 1e-10 && err4_one <= 1e-10 &&
                  std::abs(split.residual()) <= 1e-12;
  return {0, "", ok,
          "|E1| " + sci(std::abs(e1)) + ", E2 rel " + sci(err2) + ", |E3| " +
              sci(std::abs(e3)) + ", E4 rel " + sci(err4) + " (3ch) " +
              sci(err4_one) + " (1D), subtraction residual " +
              sci(std::abs(split.residual()))};
}

CriterionResult special_functions() {
  double series_err = 0.0;
  for (double x : log_points(1e-3, 4.0, 64)) {
    const auto ref = oracle::sici_series(x);
    series_err = std::max({series_err, std::abs(sine_integral(x) - ref.si),
                           std::abs(cosine_integral(x) - ref.ci)});
  }
  double asym_err = 0.0;
  for (double x : log_points(4.0, 1e3, 64)) {
    const auto ref = oracle::sici(x);
    asym_err = std::max({asym_err, std::abs(sine_integral(x) - ref.si),
                         std::abs(cosine_integral(x) - ref.ci)});
  }
  double deriv_err = 0.0;
  for (double x : log_points(1e-3, 1e3, 64)) {
    const double h = 1e-4 * x;
    const double df = (aux_f(x + h) - aux_f(x - h)) / (2 * h);
    const double dg = (aux_g(x + h) - aux_g(x - h)) / (2 * h);
    deriv_err = std::max({deriv_err, rel_err(df, -aux_g(x)),
                          rel_err(dg, aux_f(x) - 1.0 / x)});
  }
  return {0, "", series_err <= 1e-12 && asym_err <= 1e-10 && deriv_err <= 1e-6,
          "series oracle " + sci(series_err) + " (<= 1e-12), large-x oracle " +
              sci(asym_err) + " (<= 1e-10), f'=-g, g'=f-1/x rel " +
              sci(deriv_err) + " (<= 1e-6)"};
}

CriterionResult static_replacement() {
  double worst = 0.0;
  const QuadratureSpec spec(0.0, 1e-13);
  for (const auto &p : {ModelParams::unit(), ModelParams(1.0, 137.0, 2.0, 0.7, 3.0)})
    for (double R : {0.5, 2.0, 30.0})
      worst = std::max(worst, rel_err(static_limit_energy(p, R, spec),
                                      london_energy(p, R)));
  for (double r : {1e-3, 1.0, 1e3})
    worst = std::max(worst, rel_err(e4_energy_static_limit(r, spec),
                                    -london_energy(1.0)));
  return {0, "", worst <= 1e-10, "max rel err " + sci(worst) + " (<= 1e-10)"};
}

std::vector<CriterionResult> core_criteria(const AcceptanceOptions &opts) {
  return {
      guarded(1, "London constant", london_constant),
      guarded(2, "Casimir-Polder constant",
              [&] { return casimir_polder_constant(opts.casimir_polder_constant); }),
      guarded(3, "Route equivalence", route_equivalence),
      guarded(4, "Slope crossover", slope_crossover),
      guarded(5, "All-orders vs normal modes", all_orders_vs_normal_modes),
      guarded(6, "Decay thresholds", decay_thresholds),
      guarded(7, "Kato engine", kato_engine),
      guarded(8, "Special functions", special_functions),
      guarded(9, "Static replacement", static_replacement),
  };
}

std::string sweep_outputs() {
  std::string out;
  out += cmd_london({0.01, 0.99, 25}).to_csv();
  out += cmd_instantaneous(ModelParams::unit(), {0.1, 2.0, 25}).to_csv();
  out += cmd_retarded(ModelParams::unit(), {1e-2, 1e2, 17}).to_csv();
  out += cmd_crossover({1e-3, 1e3, 97}).to_csv();
  out += crossover_svg({1e-2, 1e2, 41});
  out += cmd_kato(0.1, 4, 4).to_csv();
  return out;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts) {
  auto results = core_criteria(opts);
  results.push_back(guarded(10, "Determinism", [&] {
    const std::string first = format_report(results);
    const std::string second = format_report(core_criteria(opts));
    const std::string sweeps_a = sweep_outputs();
    const std::string sweeps_b = sweep_outputs();
    const bool ok = first == second && sweeps_a == sweeps_b;
    return CriterionResult{0, "", ok,
                           std::string("report ") +
                               (first == second ? "identical" : "differs") +
                               ", sweeps " +
                               (sweeps_a == sweeps_b ? "identical" : "differ") +
                               " (" + std::to_string(sweeps_a.size()) + " bytes)"};
  }));
  return results;
}

std::string format_report(const std::vector<CriterionResult> &results) {
  std::string out;
  for (const auto &r : results) {
    char head[96];
    std::snprintf(head, sizeof head, "[%s] %2d %-28s ", r.passed ? "PASS" : "FAIL",
                  r.id, r.name.c_str());
    out += head + r.detail + "\n";
  }
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const auto &r) { return r.passed; });
  out += std::to_string(passed) + "/" + std::to_string(results.size()) +
         " criteria passed\n";
  return out;
}

bool all_passed(const std::vector<CriterionResult> &results) {
  return std::all_of(results.begin(), results.end(),
                     [](const auto &r) { return r.passed; });
}

} // namespace vdw
