#pragma once

// Regime sweeps behind the command-line tool. Each command returns a
// SweepTable; tables serialize to CSV with '.' decimals, ',' separators,
// '\n' line endings, a mandatory header row, and 17 significant digits so
// every cell round-trips exactly. Missing values are empty cells.

#include "vdw/quadrature.hpp"
#include "vdw/retarded.hpp"
#include "vdw/units.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdw {

/// Invalid user input (maps to exit status 2).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  /// True if no cell is NaN or infinite.
  bool all_finite() const;
  std::string to_csv() const;
};

/// "%.17g"
std::string format_number(double v);

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

/// Throws ConfigError unless points >= 1, 0 < min <= max, and min < max
/// whenever points > 1. A single point sits at `min`.
std::vector<double> linear_grid(const Grid &grid);
std::vector<double> log_grid(const Grid &grid);

/// (g, E_london, E_exact_re, E_exact_im, ratio) over a linear g-grid; the
/// exact energy is the all-orders frequency integral, ratio = re / london.
SweepTable cmd_london(const Grid &g_grid, const QuadratureSpec &spec = {});

/// (R, g, E_london, E_exact_re, E_exact_im) in physical energy units over a
/// log-uniform grid of separations R.
SweepTable cmd_instantaneous(const ModelParams &p, const Grid &r_grid,
                             const QuadratureSpec &spec = {});

/// (r, R, F_closed, F_reduced, F_tensor, energy) over a log grid of r, F in
/// the -E r^6/A^2 normalization and energy = physical retarded energy.
SweepTable cmd_retarded(const ModelParams &p, const Grid &r_grid,
                        const QuadratureSpec &spec = {});

/// (r, minus_E_r6_over_A2, slope, london_asymptote, cp_asymptote).
SweepTable cmd_crossover(const Grid &r_grid);

/// SVG with two plot groups: F(r) on log-log axes with dashed asymptotes,
/// and the logarithmic slope.
std::string crossover_svg(const Grid &r_grid);
std::string render_crossover_svg(const CrossoverCurve &curve);

/// (order, E_n, partial_sum, exact_normal_mode, residual) for the
/// three-channel pair. Throws ConfigError unless 1 <= max_order <= 6,
/// n_max >= max_order, n_max >= 2 and g >= 0.
SweepTable cmd_kato(double g, int n_max, int max_order);

} // namespace vdw
