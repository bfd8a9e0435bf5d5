#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace vdw;
using std::numbers::pi;

TEST_CASE("polarizability examples") {
  CHECK(polarizability(ModelParams::unit()) == doctest::Approx(1.0 / (4 * pi)).epsilon(1e-15));
  CHECK(polarizability({1, 1, 1, 2, 1}) ==
        doctest::Approx(4 * polarizability(ModelParams::unit())).epsilon(1e-15));
  CHECK(polarizability({1, 1, 1, 1, 2}) == doctest::Approx(1.0 / (16 * pi)).epsilon(1e-15));
}

TEST_CASE("polarizability scales as q^2 / (m omega^2)") {
  const ModelParams base(1.3, 2.0, 0.7, 0.4, 1.9);
  const double a = polarizability(base);
  CHECK(polarizability({1.3, 2.0, 0.7, 1.2, 1.9}) == doctest::Approx(9 * a).epsilon(1e-14));
  CHECK(polarizability({1.3, 2.0, 2.8, 0.4, 1.9}) == doctest::Approx(a / 4).epsilon(1e-14));
  CHECK(polarizability({1.3, 2.0, 0.7, 0.4, 5.7}) == doctest::Approx(a / 9).epsilon(1e-14));
  CHECK(polarizability({9.0, 7.0, 0.7, 0.4, 1.9}) == a);
}

TEST_CASE("to_dimensionless examples") {
  const auto pt = to_dimensionless(ModelParams::unit(), 1.0);
  CHECK(pt.r == 1.0);
  CHECK(pt.g == doctest::Approx(1.0 / (4 * pi)).epsilon(1e-15));

  const auto slow = to_dimensionless({1, 2, 1, 1, 1}, 1.0);
  CHECK(slow.r == 0.5);
  CHECK(slow.g == pt.g);
}

TEST_CASE("round trip over twelve decades") {
  const ModelParams p(1.05e-34, 3e8, 9.1e-31, 1.6e-19, 2.4e15);
  for (int k = -6; k <= 6; ++k) {
    for (double mant : {1.0, 2.7, 7.3}) {
      const double R = mant * std::pow(10.0, k);
      const double back = from_dimensionless(p, to_dimensionless(p, R));
      CHECK(std::abs(back - R) / R <= 1e-14);
    }
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(ModelParams(0, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1, -1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1, 1, 1, 1, NAN), std::invalid_argument);
  CHECK_THROWS_AS(to_dimensionless(ModelParams::unit(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(to_dimensionless(ModelParams::unit(), -2.0), std::invalid_argument);
}

TEST_CASE("energy unit and amplitude") {
  const ModelParams p(2.0, 1.0, 0.5, 3.0, 4.0);
  CHECK(p.energy_unit() == 8.0);
  CHECK(p.amplitude() == doctest::Approx(9.0 * 4.0 / (4 * pi * 0.5)).epsilon(1e-15));
}
