#include "vdw/sweep.hpp"

#include "vdw/instantaneous.hpp"
#include "vdw/kato.hpp"

#include <cmath>
#include <cstdio>

namespace vdw {

bool SweepTable::all_finite() const {
  for (const auto &row : rows)
    for (const auto &cell : row)
      if (cell && !std::isfinite(*cell))
        return false;
  return true;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string SweepTable::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i)
      out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto &row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        out += ',';
      if (row[i])
        out += format_number(*row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

void validate(const Grid &grid) {
  if (grid.points < 1)
    throw ConfigError("grid needs at least one point");
  if (!(grid.min > 0.0) || !std::isfinite(grid.min) || !std::isfinite(grid.max))
    throw ConfigError("grid bounds must be positive and finite");
  if (grid.max < grid.min)
    throw ConfigError("grid bounds must be ordered (min <= max)");
  if (grid.points > 1 && grid.max == grid.min)
    throw ConfigError("grid with several points needs min < max");
}

} // namespace

std::vector<double> linear_grid(const Grid &grid) {
  validate(grid);
  std::vector<double> out(grid.points);
  if (grid.points == 1) {
    out[0] = grid.min;
    return out;
  }
  const double step = (grid.max - grid.min) / (grid.points - 1);
  for (int i = 0; i < grid.points; ++i)
    out[i] = grid.min + step * i;
  out.back() = grid.max;
  return out;
}

std::vector<double> log_grid(const Grid &grid) {
  validate(grid);
  std::vector<double> out(grid.points);
  if (grid.points == 1) {
    out[0] = grid.min;
    return out;
  }
  const double lo = std::log(grid.min);
  const double step = (std::log(grid.max) - lo) / (grid.points - 1);
  for (int i = 0; i < grid.points; ++i)
    out[i] = std::exp(lo + step * i);
  out.front() = grid.min;
  out.back() = grid.max;
  return out;
}

SweepTable cmd_london(const Grid &g_grid, const QuadratureSpec &spec) {
  SweepTable t{{"g", "E_london", "E_exact_re", "E_exact_im", "ratio"}, {}};
  for (double g : linear_grid(g_grid)) {
    const double london = london_energy(g);
    const auto exact = exact_energy_spectral(g, spec);
    t.rows.push_back({g, london, exact.re, exact.im, exact.re / london});
  }
  return t;
}

SweepTable cmd_instantaneous(const ModelParams &p, const Grid &r_grid,
                             const QuadratureSpec &spec) {
  SweepTable t{{"R", "g", "E_london", "E_exact_re", "E_exact_im"}, {}};
  const double unit = p.energy_unit();
  for (double R : log_grid(r_grid)) {
    const double g = to_dimensionless(p, R).g;
    const auto exact = exact_energy_spectral(g, spec);
    t.rows.push_back(
        {R, g, london_energy(g) * unit, exact.re * unit, exact.im * unit});
  }
  return t;
}

SweepTable cmd_retarded(const ModelParams &p, const Grid &r_grid,
                        const QuadratureSpec &spec) {
  SweepTable t{{"r", "R", "F_closed", "F_reduced", "F_tensor", "energy"}, {}};
  for (double r : log_grid(r_grid)) {
    const double R = from_dimensionless(p, {r, 0.0});
    t.rows.push_back({r, R, e4_energy_closed(r), e4_energy_reduced(r, spec),
                      e4_energy_tensor(r, spec), retarded_energy(p, R)});
  }
  return t;
}

namespace {
CrossoverCurve curve_for(const Grid &r_grid) {
  const auto grid = log_grid(r_grid); // validation
  return crossover_curve(grid.front(), grid.back(), r_grid.points);
}
} // namespace

SweepTable cmd_crossover(const Grid &r_grid) {
  const auto curve = curve_for(r_grid);
  SweepTable t{{"r", "minus_E_r6_over_A2", "slope", "london_asymptote",
                "cp_asymptote"},
               {}};
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    const double r = curve.grid[i];
    std::optional<double> slope;
    if (!curve.slope.empty())
      slope = curve.slope[i];
    t.rows.push_back({r, curve.energy[i], slope, asymptote_london(),
                      asymptote_casimir_polder() / r});
  }
  return t;
}

std::string crossover_svg(const Grid &r_grid) {
  return render_crossover_svg(curve_for(r_grid));
}

SweepTable cmd_kato(double g, int n_max, int max_order) {
  if (max_order < 1 || max_order > 6)
    throw ConfigError("kato: order must be between 1 and 6");
  if (n_max < 2)
    throw ConfigError("kato: nmax must be >= 2");
  if (n_max < max_order)
    throw ConfigError("kato: nmax must be >= order");
  if (!(g >= 0.0) || !std::isfinite(g))
    throw ConfigError("kato: coupling must be >= 0");

  CoupledPair pair = [&] {
    try {
      return build_three_channel_pair(g, n_max);
    } catch (const std::invalid_argument &e) {
      throw ConfigError(std::string("kato: ") + e.what());
    }
  }();
  const double exact = exact_energy_normal_modes(g).re;
  SweepTable t{{"order", "E_n", "partial_sum", "exact_normal_mode", "residual"},
               {}};
  double partial = 0.0;
  for (int n = 1; n <= max_order; ++n) {
    const double e = kato_energy_coefficient(pair.h0, pair.hint, n);
    partial += e;
    t.rows.push_back(
        {static_cast<double>(n), e, partial, exact, partial - exact});
  }
  return t;
}

} // namespace vdw
