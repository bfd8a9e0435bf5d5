#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/cli.hpp"
#include "vdw/sweep.hpp"

#include <cmath>
#include <sstream>
#include <string>

using namespace vdw;

namespace {

std::size_t count(const std::string &s, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST_CASE("grids") {
  CHECK(linear_grid({0.1, 0.5, 5}).back() == 0.5);
  CHECK(linear_grid({0.1, 0.5, 5})[2] == doctest::Approx(0.3));
  const auto lg = log_grid({1e-2, 1e2, 5});
  CHECK(lg.front() == 1e-2);
  CHECK(lg[2] == doctest::Approx(1.0));
  CHECK(lg.back() == 1e2);
  CHECK(log_grid({2.0, 2.0, 1}) == std::vector<double>{2.0});
  CHECK_THROWS_AS(log_grid({1.0, 2.0, 0}), ConfigError);
  CHECK_THROWS_AS(log_grid({-1.0, 2.0, 3}), ConfigError);
  CHECK_THROWS_AS(log_grid({3.0, 2.0, 3}), ConfigError);
  CHECK_THROWS_AS(linear_grid({2.0, 2.0, 3}), ConfigError);
}

TEST_CASE("csv formatting") {
  SweepTable t{{"a", "b"}, {{1.0, std::nullopt}, {0.1, -2.5e-300}}};
  CHECK(t.to_csv() == "a,b\n1,\n0.10000000000000001,-2.5e-300\n");
  CHECK(std::stod(format_number(0.1)) == 0.1);
  CHECK(t.all_finite());
  t.rows.push_back({NAN, 1.0});
  CHECK(!t.all_finite());
}

TEST_CASE("london sweep") {
  const auto small = cmd_london({0.01, 0.01, 1});
  REQUIRE(small.rows.size() == 1);
  CHECK(std::abs(*small.rows[0][4] - 1.0) < 1e-3);
  const auto big = cmd_london({0.75, 0.75, 1});
  CHECK(*big.rows[0][3] < 0.0);
  CHECK(cmd_london({0.1, 0.9, 9}).rows.size() == 9);
  CHECK(cmd_london({0.1, 0.9, 9}).header ==
        std::vector<std::string>{"g", "E_london", "E_exact_re", "E_exact_im", "ratio"});
}

TEST_CASE("crossover sweep") {
  const auto t = cmd_crossover({1e-3, 1e3, 97});
  REQUIRE(t.rows.size() == 97);
  CHECK(std::abs(*t.rows.front()[2]) < 1e-2);
  CHECK(*t.rows.back()[2] == doctest::Approx(-1.0).epsilon(1e-3));
  const auto one = cmd_crossover({1.0, 1.0, 1});
  REQUIRE(one.rows.size() == 1);
  CHECK(!one.rows[0][2].has_value());
  CHECK(one.to_csv().find(",,0.75,") != std::string::npos);
}

TEST_CASE("svg document") {
  const auto svg = crossover_svg({1e-2, 1e2, 41});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "<g class=\"plot\"") == 2);
  CHECK(count(svg, "<svg") == 1);
  CHECK(count(svg, "</svg>") == 1);
  CHECK(count(svg, "<g") == count(svg, "</g>"));
  CHECK(count(svg, "stroke-dasharray") >= 2);
  CHECK(svg == crossover_svg({1e-2, 1e2, 41}));
}

TEST_CASE("kato sweep") {
  const auto t = cmd_kato(0.1, 4, 4);
  REQUIRE(t.rows.size() == 4);
  CHECK(*t.rows[1][1] == doctest::Approx(-0.0075).epsilon(1e-12));
  CHECK(std::abs(*t.rows[2][1]) < 1e-14);
  CHECK(*t.rows[3][1] == doctest::Approx(-45.0 / 64.0 * 1e-4).epsilon(1e-10));
  CHECK_THROWS_AS(cmd_kato(0.1, 3, 4), ConfigError);
  CHECK_THROWS_AS(cmd_kato(0.1, 8, 7), ConfigError);
}

TEST_CASE("sweeps are deterministic") {
  const auto p = ModelParams::unit();
  CHECK(cmd_retarded(p, {1e-2, 1e2, 9}).to_csv() == cmd_retarded(p, {1e-2, 1e2, 9}).to_csv());
  CHECK(cmd_instantaneous(p, {0.2, 3.0, 9}).to_csv() ==
        cmd_instantaneous(p, {0.2, 3.0, 9}).to_csv());
}

TEST_CASE("run exit codes") {
  std::ostringstream out, err;
  cli::RunConfig cfg;
  cfg.command = cli::Command::london;
  cfg.g_grid = {0.1, 0.2, 3};
  CHECK(cli::run(cfg, out, err) == cli::exit_ok);
  CHECK(out.str().rfind("g,E_london", 0) == 0);
  CHECK(err.str().empty());

  cfg.g_grid = {0.1, 0.2, 0};
  CHECK(cli::run(cfg, out, err) == cli::exit_config);

  cfg.g_grid = {0.1, 0.2, 3};
  cfg.format = "svg";
  CHECK(cli::run(cfg, out, err) == cli::exit_config);
  cfg.format = "png";
  cfg.command = cli::Command::crossover;
  CHECK(cli::run(cfg, out, err) == cli::exit_config);

  cfg.format = "csv";
  cfg.command = cli::Command::kato;
  cfg.n_max = 2;
  cfg.order = 4;
  CHECK(cli::run(cfg, out, err) == cli::exit_config);

  cfg.command = cli::Command::retarded;
  cfg.rel_tol = 1.0;
  CHECK(cli::run(cfg, out, err) == cli::exit_config);

  cfg.rel_tol = 1e-12;
  cfg.command = cli::Command::london;
  cfg.g_grid = {1e200, 1e200, 1};
  CHECK(cli::run(cfg, out, err) == cli::exit_numerical);
}
