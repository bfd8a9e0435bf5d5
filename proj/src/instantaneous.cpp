#include "vdw/instantaneous.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace vdw {

std::array<std::array<double, 3>, 3>
dipole_coupling_tensor(const std::array<double, 3> &rhat) {
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = 3.0 * rhat[i] * rhat[j] - (i == j ? 1.0 : 0.0);
  return t;
}

DipoleCorrelator::DipoleCorrelator(const ModelParams &p)
    : prefactor(p.hbar() / (2.0 * p.m() * p.omega())), decay_rate(p.omega()) {}

double DipoleCorrelator::operator()(double tau, double tau_prime) const {
  return prefactor * std::exp(-decay_rate * std::abs(tau - tau_prime));
}

double london_energy(double g) {
  if (!(g >= 0.0))
    throw std::invalid_argument("london_energy: coupling must be >= 0");
  return -0.75 * g * g;
}

double london_energy(const ModelParams &p, double R) {
  const auto pt = to_dimensionless(p, R);
  return london_energy(pt.g) * p.energy_unit();
}

namespace {

void require_coupling(double g, const char *who) {
  if (!(g >= 0.0) || !std::isfinite(g))
    throw std::invalid_argument(std::string(who) + ": coupling must be >= 0");
}

// sqrt(1 + w) + sqrt(1 - w) - 2 for w >= 0, decaying branch.
std::pair<double, double> channel_shift(double w) {
  const double plus = std::sqrt(1.0 + w);
  if (w <= 1.0) {
    // -2 w^2 / ((a + b)(a + 1)(b + 1)), free of cancellation at small w.
    const double minus = std::sqrt(1.0 - w);
    return {-2.0 * w * w / ((plus + minus) * (plus + 1.0) * (minus + 1.0)),
            0.0};
  }
  return {plus - 2.0, -std::sqrt(w - 1.0)};
}

// ln|1 - (w/(nu^2+1))^2| written to avoid cancellation both for small w and
// near the zero of nu^2 + 1 - w.
double log_abs_argument(double nu, double w) {
  const double d = nu * nu + 1.0;
  const double x = w / d;
  if (x < 0.5)
    return std::log1p(-x * x);
  const double upper = std::log1p(x);
  const double gap = nu * nu + (1.0 - w); // d - w
  return std::log(std::abs(gap) / d) + upper;
}

// Integral over the whole real nu axis of log[1 - (w/(nu^2+1))^2] / (2 pi).
std::pair<double, double> channel_integral(double w,
                                           const QuadratureSpec &spec) {
  if (w == 0.0)
    return {0.0, 0.0};
  const auto integrand = [w](double nu) { return log_abs_argument(nu, w); };
  if (w <= 1.0) {
    const auto r = integrate_semi_infinite(integrand, spec, 0.0);
    return {r.value / std::numbers::pi, 0.0};
  }
  // Argument negative on [0, root): log|x| - i pi there.
  const double root = std::sqrt(w - 1.0);
  const auto inner = integrate(integrand, 0.0, root, spec);
  const auto outer = integrate_semi_infinite(integrand, spec, root);
  const auto phase =
      integrate([](double) { return -std::numbers::pi; }, 0.0, root, spec);
  return {(inner.value + outer.value) / std::numbers::pi,
          phase.value / std::numbers::pi};
}

} // namespace

ComplexEnergy exact_energy_spectral(double g, const QuadratureSpec &spec) {
  require_coupling(g, "exact_energy_spectral");
  ComplexEnergy e;
  if (g == 0.0)
    return e;
  const auto [t_re, t_im] = channel_integral(g, spec);
  const auto [l_re, l_im] = channel_integral(2.0 * g, spec);
  e.re = 0.5 * (2.0 * t_re + l_re);
  e.im = 0.5 * (2.0 * t_im + l_im);
  return e;
}

ComplexEnergy exact_energy_normal_modes(double g) {
  require_coupling(g, "exact_energy_normal_modes");
  const auto [t_re, t_im] = channel_shift(g);
  const auto [l_re, l_im] = channel_shift(2.0 * g);
  return {0.5 * (2.0 * t_re + l_re), 0.5 * (2.0 * t_im + l_im)};
}

Thresholds thresholds(const ModelParams &p) {
  const double alpha = polarizability(p);
  return {std::cbrt(2.0 * alpha), std::cbrt(alpha)};
}

double london_series_coefficient(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument(
        "london_series_coefficient: order must be even and >= 2");
  if (order > 8)
    throw std::invalid_argument("london_series_coefficient: order must be <= 8");
  // (1/2)(sqrt(1+x) + sqrt(1-x) - 2) = sum_{n even} binom(1/2, n) x^n, and
  // the channels contribute x = g, g, 2g.
  double binom = 1.0;
  for (int k = 0; k < order; ++k)
    binom *= (0.5 - k) / (k + 1);
  double weight_sum = 0.0;
  for (double w : channel_weights)
    weight_sum += std::pow(w, order);
  return binom * weight_sum;
}

std::vector<double> london_series_coefficients(int order) {
  if (order % 2 != 0 || order < 2 || order > 8)
    throw std::invalid_argument(
        "london_series_coefficients: order must be one of 2, 4, 6, 8");
  std::vector<double> out;
  for (int n = 2; n <= order; n += 2)
    out.push_back(london_series_coefficient(n));
  return out;
}

} // namespace vdw
