#pragma once

#include "vdw/quadrature.hpp"
#include "vdw/sweep.hpp"
#include "vdw/units.hpp"

#include <iosfwd>
#include <string>

namespace vdw::cli {

enum class Command { london, instantaneous, retarded, crossover, kato, selfcheck };

struct RunConfig {
  Command command = Command::london;
  ModelParams params = ModelParams::unit();
  Grid r_grid{1e-2, 1e2, 41};
  Grid g_grid{0.01, 0.99, 41};
  std::string out;            // empty: write to the output stream
  std::string format = "csv"; // csv | svg (svg for crossover only)
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int n_max = 4;
  int order = 4;
  double g = 0.1;
};

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_selfcheck_failed = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_numerical = 3;

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace vdw::cli
