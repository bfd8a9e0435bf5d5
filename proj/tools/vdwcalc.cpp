#include "vdw/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

int main(int argc, char **argv) {
  CLI::App app{"Van der Waals energies of two harmonic atoms"};
  app.require_subcommand(1);

  double hbar = 1.0, c = 1.0, m = 1.0, q = 1.0, omega = 1.0;
  double rmin = 1e-2, rmax = 1e2, gmin = 0.01, gmax = 0.99;
  int points = 41;
  vdw::cli::RunConfig cfg;

  const auto model_flags = [&](CLI::App *sub) {
    sub->add_option("--q", q, "Charge")->capture_default_str();
    sub->add_option("--m", m, "Mass")->capture_default_str();
    sub->add_option("--omega", omega, "Oscillator frequency")->capture_default_str();
    sub->add_option("--hbar", hbar, "Reduced Planck constant")->capture_default_str();
    sub->add_option("--c", c, "Speed of light")->capture_default_str();
  };
  const auto output_flags = [&](CLI::App *sub) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "csv or svg")->capture_default_str();
  };
  const auto tol_flags = [&](CLI::App *sub) {
    sub->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance")
        ->capture_default_str();
    sub->add_option("--abs-tol", cfg.abs_tol, "Quadrature absolute tolerance")
        ->capture_default_str();
  };
  const auto r_flags = [&](CLI::App *sub) {
    sub->add_option("--rmin", rmin, "Smallest separation")->capture_default_str();
    sub->add_option("--rmax", rmax, "Largest separation")->capture_default_str();
    sub->add_option("--points", points, "Grid points")->capture_default_str();
  };

  auto *london = app.add_subcommand("london", "London energy vs exact, over a g grid");
  london->add_option("--gmin", gmin, "Smallest coupling")->capture_default_str();
  london->add_option("--gmax", gmax, "Largest coupling")->capture_default_str();
  london->add_option("--points", points, "Grid points")->capture_default_str();
  output_flags(london);
  tol_flags(london);

  auto *inst = app.add_subcommand("instantaneous", "Instantaneous energy over an R grid");
  model_flags(inst);
  r_flags(inst);
  output_flags(inst);
  tol_flags(inst);

  auto *ret = app.add_subcommand("retarded", "Retarded energy over an r grid");
  model_flags(ret);
  r_flags(ret);
  output_flags(ret);
  tol_flags(ret);

  auto *cross = app.add_subcommand("crossover", "Normalized energy and slope curves");
  r_flags(cross);
  output_flags(cross);

  auto *kato = app.add_subcommand("kato", "Perturbative energy coefficients");
  kato->add_option("--g", cfg.g, "Coupling")->capture_default_str();
  kato->add_option("--nmax", cfg.n_max, "Occupation cutoff per oscillator")
      ->capture_default_str();
  kato->add_option("--order", cfg.order, "Highest order")->capture_default_str();
  output_flags(kato);

  auto *self = app.add_subcommand("selfcheck", "Run the acceptance suite");
  self->add_option("--out", cfg.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return vdw::cli::exit_config;
  }

  using vdw::cli::Command;
  if (london->parsed())
    cfg.command = Command::london;
  else if (inst->parsed())
    cfg.command = Command::instantaneous;
  else if (ret->parsed())
    cfg.command = Command::retarded;
  else if (cross->parsed())
    cfg.command = Command::crossover;
  else if (kato->parsed())
    cfg.command = Command::kato;
  else
    cfg.command = Command::selfcheck;

  try {
    cfg.params = vdw::ModelParams(hbar, c, m, q, omega);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return vdw::cli::exit_config;
  }
  cfg.r_grid = {rmin, rmax, points};
  cfg.g_grid = {gmin, gmax, points};
  return vdw::cli::run(cfg, std::cout, std::cerr);
}
