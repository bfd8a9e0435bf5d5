#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/instantaneous.hpp"
#include "vdw/oracles.hpp"
#include "vdw/retarded.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace vdw;
using std::numbers::pi;

TEST_CASE("London energy") {
  CHECK(london_energy(0.0) == 0.0);
  CHECK(london_energy(1.0) == -0.75);
  CHECK(london_energy(0.1) == doctest::Approx(-7.5e-3).epsilon(1e-15));
  CHECK_THROWS_AS(london_energy(-0.1), std::invalid_argument);
  const ModelParams p(1.0, 1.0, 2.0, 0.5, 3.0);
  const double g = to_dimensionless(p, 2.0).g;
  CHECK(london_energy(p, 2.0) == doctest::Approx(-0.75 * g * g * 3.0).epsilon(1e-15));
}

TEST_CASE("spectral energy examples") {
  const auto zero = exact_energy_spectral(0.0);
  CHECK(zero.re == 0.0);
  CHECK(zero.im == 0.0);

  const auto e = exact_energy_spectral(0.1);
  const double expected =
      0.5 * (2 * (std::sqrt(1.1) + std::sqrt(0.9) - 2) + (std::sqrt(1.2) + std::sqrt(0.8) - 2));
  CHECK(e.re == doctest::Approx(expected).epsilon(1e-12));
  CHECK(e.re == doctest::Approx(-7.5718e-3).epsilon(1e-4));
  CHECK(e.im == 0.0);

  const auto a = exact_energy_spectral(0.4);
  const auto b = exact_energy_normal_modes(0.4);
  CHECK(std::abs(a.re - b.re) <= 1e-10 * std::abs(b.re));
  CHECK(a.im == 0.0);
}

TEST_CASE("normal-mode energy branches") {
  CHECK(exact_energy_normal_modes(0.0).re == 0.0);
  const auto half = exact_energy_normal_modes(0.5);
  CHECK(half.im == 0.0);
  CHECK(half.re == doctest::Approx(0.5 * (2 * (std::sqrt(1.5) + std::sqrt(0.5) - 2) +
                                          (std::sqrt(2.0) - 2)))
                       .epsilon(1e-15));

  const auto e = exact_energy_normal_modes(0.75);
  CHECK(e.im == doctest::Approx(-0.5 * std::sqrt(0.5)).epsilon(1e-15));
  const auto s = exact_energy_spectral(0.75);
  CHECK(s.im == doctest::Approx(e.im).epsilon(1e-10));
  CHECK(s.re == doctest::Approx(e.re).epsilon(1e-10));

  const auto two = exact_energy_normal_modes(1.5);
  const auto two_s = exact_energy_spectral(1.5);
  CHECK(two.im == doctest::Approx(-0.5 * (2 * std::sqrt(0.5) + std::sqrt(2.0))).epsilon(1e-15));
  CHECK(two_s.im == doctest::Approx(two.im).epsilon(1e-10));
  CHECK(two_s.re == doctest::Approx(two.re).epsilon(1e-10));
}

TEST_CASE("small-g normal modes against the series") {
  for (double g : {1e-4, 1e-3, 1e-2}) {
    const auto coeffs = london_series_coefficients(8);
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      sum += coeffs[i] * std::pow(g, 2.0 * (i + 1));
    CHECK(exact_energy_normal_modes(g).re == doctest::Approx(sum).epsilon(1e-13));
  }
}

TEST_CASE("series coefficients") {
  CHECK(london_series_coefficient(2) == -0.75);
  CHECK(london_series_coefficient(4) == -45.0 / 64.0);
  CHECK_THROWS_AS(london_series_coefficient(3), std::invalid_argument);
  CHECK_THROWS_AS(london_series_coefficients(10), std::invalid_argument);
  for (int n : {2, 4, 6, 8})
    CHECK(london_series_coefficient(n) ==
          doctest::Approx(oracle::normal_mode_series_coefficient(n)).epsilon(1e-14));
  CHECK(oracle::normal_mode_series_coefficient(4, false) == doctest::Approx(-5.0 / 128.0));
}

TEST_CASE("thresholds") {
  const ModelParams unit_alpha(1.0, 1.0, 1.0, std::sqrt(4 * pi), 1.0);
  const auto t = thresholds(unit_alpha);
  CHECK(t.r1 == doctest::Approx(1.259921).epsilon(1e-6));
  CHECK(t.r2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(thresholds(ModelParams::unit()).r1 ==
        doctest::Approx(std::cbrt(1.0 / (2 * pi))).epsilon(1e-14));
}

TEST_CASE("coupling tensor") {
  const auto t = dipole_coupling_tensor({0.0, 0.0, 1.0});
  CHECK(t[0][0] == -1.0);
  CHECK(t[1][1] == -1.0);
  CHECK(t[2][2] == 2.0);
  const double s = 1.0 / std::sqrt(3.0);
  const auto d = dipole_coupling_tensor({s, s, s});
  CHECK(std::abs(d[0][0] + d[1][1] + d[2][2]) < 1e-15);
  CHECK(d[0][1] == doctest::Approx(1.0));
}

TEST_CASE("dipole correlator") {
  const ModelParams p(1.3, 1.0, 0.8, 0.6, 2.1);
  const DipoleCorrelator d(p);
  CHECK(d(0.4, 0.4) == doctest::Approx(1.3 / (2 * 0.8 * 2.1)).epsilon(1e-15));
  CHECK(d(0.1, 0.9) == d(0.9, 0.1));
  CHECK(d(0.0, 1.0) == doctest::Approx(d.prefactor * std::exp(-2.1)).epsilon(1e-15));

  // q^2/hbar times the Fourier transform of the correlator is M(nu).
  for (double nu : {0.0, 0.5, 2.1, 7.0}) {
    const auto ft = integrate_semi_infinite(
        [&](double tau) { return 2.0 * std::cos(nu * tau) * d(tau, 0.0); }, {});
    CHECK(ft.value * p.q() * p.q() / p.hbar() ==
          doctest::Approx(spectral_dipole_correlator(p, nu)).epsilon(1e-10));
  }
}

TEST_CASE("spectral energy at very weak coupling") {
  for (double g : {1e-5, 1e-8, 1e-12}) {
    const auto e = exact_energy_spectral(g);
    CHECK(e.re == doctest::Approx(exact_energy_normal_modes(g).re).epsilon(1e-10));
  }
}
