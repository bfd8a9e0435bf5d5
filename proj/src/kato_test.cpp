#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vdw/instantaneous.hpp"
#include "vdw/kato.hpp"
#include "vdw/oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace vdw;

namespace {

using Dense = std::vector<std::vector<double>>;

// Rayleigh-Schroedinger recursion in intermediate normalization for
// H0 = diag(e), e[0] = 0 < e[i]:
//   E(n) = <0|V|psi(n-1)>,
//   psi(n) = -Q H0^-1 Q [V psi(n-1) - sum_{k=1}^{n-1} E(k) psi(n-k)].
std::vector<double> rs_energies(const std::vector<double> &e, const Dense &v, int order) {
  const std::size_t d = e.size();
  std::vector<std::vector<double>> psi = {std::vector<double>(d, 0.0)};
  psi[0][0] = 1.0;
  std::vector<double> energy(order + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    for (std::size_t j = 0; j < d; ++j)
      energy[n] += v[0][j] * psi[n - 1][j];
    std::vector<double> next(d, 0.0);
    for (std::size_t i = 1; i < d; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        s += v[i][j] * psi[n - 1][j];
      for (int k = 1; k < n; ++k)
        s -= energy[k] * psi[n - k][i];
      next[i] = -s / e[i];
    }
    psi.push_back(next);
  }
  return energy;
}

} // namespace

TEST_CASE("compositions") {
  const auto c = compositions(2, 3);
  const std::vector<std::vector<int>> expected = {
      {0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  CHECK(c == expected);
  CHECK(compositions(5, 4).size() == 56);
  CHECK(compositions(0, 0).size() == 1);
  CHECK(compositions(1, 0).empty());
  CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
}

TEST_CASE("S operator") {
  const FockSpace s(1, 4);
  const auto h0 = FockOperator::number(s, 0);
  const auto s0 = s_operator(h0, 0);
  double trace = 0.0;
  for (double x : s0.diagonal())
    trace += x;
  CHECK(trace == -1.0);
  const auto s1 = s_operator(h0, 1);
  CHECK(s1.diagonal() == std::vector<double>{0.0, 1.0, 0.5, 1.0 / 3.0, 0.25});
  CHECK(s_operator(h0, 2).at(2, 2) == 0.25);
  CHECK_THROWS_AS(s_operator(h0, -1), std::invalid_argument);
  CHECK_THROWS_AS(s_operator(FockOperator::identity(s), 1), std::invalid_argument);
}

TEST_CASE("coupled pair") {
  const auto zero = build_coupled_pair(0.0, 3);
  CHECK(zero.hint.nonzeros() == 0);
  CHECK_THROWS_AS(build_coupled_pair(0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_coupled_pair(-0.1, 3), std::invalid_argument);
  const auto p = build_coupled_pair(0.3, 3);
  CHECK(p.hint.is_symmetric());
  CHECK(p.h0.is_diagonal());
}

TEST_CASE("low orders") {
  const double g = 0.1;
  const auto one = build_coupled_pair(g, 4);
  CHECK(kato_energy_coefficient(one.h0, one.hint, 1) == 0.0);
  CHECK(kato_energy_coefficient(one.h0, one.hint, 2) ==
        doctest::Approx(-g * g / 8).epsilon(1e-14));
  CHECK(std::abs(kato_energy_coefficient(one.h0, one.hint, 3)) <= 1e-16);
  CHECK_THROWS_AS(kato_energy_coefficient(one.h0, one.hint, 0), std::invalid_argument);

  const auto three = build_three_channel_pair(g, 4);
  CHECK(kato_energy_coefficient(three.h0, three.hint, 2) ==
        doctest::Approx(-0.0075).epsilon(1e-14));
}

TEST_CASE("fourth-order split") {
  const double g = 0.1;
  const auto one = build_coupled_pair(g, 4);
  const auto c1 = verify_fourth_order_subtraction(one.h0, one.hint);
  CHECK(c1.direct == doctest::Approx(-5.0 / 128.0 * std::pow(g, 4)).epsilon(1e-10));
  CHECK(std::abs(c1.residual()) <= 1e-16);
  CHECK(c1.subtraction != 0.0);

  const auto three = build_three_channel_pair(g, 4);
  const auto c3 = verify_fourth_order_subtraction(three.h0, three.hint);
  CHECK(c3.direct == doctest::Approx(-45.0 / 64.0 * std::pow(g, 4)).epsilon(1e-10));

  const auto free = build_coupled_pair(0.0, 4);
  const auto c0 = verify_fourth_order_subtraction(free.h0, free.hint);
  CHECK(c0.direct == 0.0);
  CHECK(c0.chained == 0.0);
  CHECK(c0.subtraction == 0.0);
}

TEST_CASE("sixth order of the one-dimensional pair") {
  const double g = 0.1;
  const auto one = build_coupled_pair(g, 6);
  CHECK(kato_energy_coefficient(one.h0, one.hint, 6) ==
        doctest::Approx(oracle::normal_mode_series_coefficient(6, false) * std::pow(g, 6))
            .epsilon(1e-10));
  CHECK(std::abs(kato_energy_coefficient(one.h0, one.hint, 5)) <= 1e-18);
}

TEST_CASE("truncation converges") {
  const auto a = build_three_channel_pair(0.2, 4);
  const auto b = build_three_channel_pair(0.2, 6);
  CHECK(kato_energy_coefficient(a.h0, a.hint, 4) ==
        doctest::Approx(kato_energy_coefficient(b.h0, b.hint, 4)).epsilon(1e-14));
}

TEST_CASE("agrees with the recursion on random matrices") {
  std::mt19937 rng(20261016);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int dim = 4 + trial % 3;
    const FockSpace s(1, dim - 1);
    std::vector<double> e(dim, 0.0);
    for (int i = 1; i < dim; ++i)
      e[i] = 0.5 + i + 0.5 * u(rng);
    Dense v(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        v[i][j] = v[j][i] = 0.3 * u(rng);
    v[0][0] = 0.2 + 0.1 * u(rng);

    std::vector<FockOperator::Triplet> h0_t, v_t;
    for (int i = 0; i < dim; ++i) {
      h0_t.emplace_back(i, i, e[i]);
      for (int j = 0; j < dim; ++j)
        v_t.emplace_back(i, j, v[i][j]);
    }
    const FockOperator h0(s, h0_t), hint(s, v_t);
    const auto ref = rs_energies(e, v, 6);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(trial);
      CAPTURE(n);
      CHECK(kato_energy_coefficient(h0, hint, n) ==
            doctest::Approx(ref[n]).epsilon(1e-12).scale(1e-14));
    }
  }
}
