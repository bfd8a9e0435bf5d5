#include "vdw/cli.hpp"

#include "vdw/acceptance.hpp"

#include <fstream>
#include <ostream>

namespace vdw::cli {

namespace {

std::string produce(const RunConfig &cfg) {
  if (cfg.format != "csv" && cfg.format != "svg")
    throw ConfigError("format must be csv or svg");
  if (cfg.format == "svg" && cfg.command != Command::crossover)
    throw ConfigError("svg output is only available for crossover");
  const QuadratureSpec spec(cfg.abs_tol, cfg.rel_tol);

  SweepTable table;
  switch (cfg.command) {
  case Command::london:
    table = cmd_london(cfg.g_grid, spec);
    break;
  case Command::instantaneous:
    table = cmd_instantaneous(cfg.params, cfg.r_grid, spec);
    break;
  case Command::retarded:
    table = cmd_retarded(cfg.params, cfg.r_grid, spec);
    break;
  case Command::crossover:
    if (cfg.format == "svg")
      return crossover_svg(cfg.r_grid);
    table = cmd_crossover(cfg.r_grid);
    break;
  case Command::kato:
    table = cmd_kato(cfg.g, cfg.n_max, cfg.order);
    break;
  case Command::selfcheck:
    break;
  }
  if (!table.all_finite())
    throw QuadratureError(QuadratureError::Kind::EvaluationError,
                          "non-finite value in output table");
  return table.to_csv();
}

int emit(const RunConfig &cfg, const std::string &text, std::ostream &out,
         std::ostream &err) {
  if (cfg.out.empty()) {
    out << text;
    return exit_ok;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << cfg.out << "\n";
    return exit_config;
  }
  return exit_ok;
}

} // namespace

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    if (cfg.command == Command::selfcheck) {
      const auto results = run_acceptance();
      const int rc = emit(cfg, format_report(results), out, err);
      return rc != exit_ok ? rc : all_passed(results) ? exit_ok : exit_selfcheck_failed;
    }
    return emit(cfg, produce(cfg), out, err);
  } catch (const QuadratureError &e) {
    err << "error: " << e.what() << "\n";
    return exit_numerical;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
}

} // namespace vdw::cli
