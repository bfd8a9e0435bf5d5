#include "vdw/retarded.hpp"

#include "vdw/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vdw {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double four_pi = 4.0 * std::numbers::pi;

void require_separation(double r, const char *who) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument(std::string(who) + ": separation must be > 0");
}

// Above this argument the remainders below come from their asymptotic
// series; the truncation error there is below exp(-x) ~ 4e-18.
constexpr double remainder_asymptotic_limit = 40.0;

// f(x) - 1/x + 2/x^3 = int_0^inf exp(-xt) t^4 / (1 + t^2) dt
double aux_f_remainder(double x) {
  if (x < remainder_asymptotic_limit)
    return aux_f(x) - 1.0 / x + 2.0 / (x * x * x);
  // sum_{k>=2} (-1)^k (2k)! / x^(2k+1), stopped at the smallest term
  const double x2 = x * x;
  double term = 24.0 / (x2 * x2 * x);
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    sum += term;
    const double next = -term * (2.0 * k + 1.0) * (2.0 * k + 2.0) / x2;
    if (std::abs(next) >= std::abs(term) ||
        std::abs(next) < 1e-17 * std::abs(sum))
      break;
    term = next;
  }
  return sum;
}

// g(x) - 1/x^2 + 6/x^4 = int_0^inf exp(-xt) t^5 / (1 + t^2) dt
double aux_g_remainder(double x) {
  if (x < remainder_asymptotic_limit) {
    const double x2 = x * x;
    return aux_g(x) - 1.0 / x2 + 6.0 / (x2 * x2);
  }
  // sum_{k>=2} (-1)^k (2k+1)! / x^(2k+2)
  const double x2 = x * x;
  double term = 120.0 / (x2 * x2 * x2);
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    sum += term;
    const double next = -term * (2.0 * k + 2.0) * (2.0 * k + 3.0) / x2;
    if (std::abs(next) >= std::abs(term) ||
        std::abs(next) < 1e-17 * std::abs(sum))
      break;
    term = next;
  }
  return sum;
}

// Beyond this r the bracket is evaluated with the leading large-argument
// terms of f and g cancelled analytically; the direct form loses ~r^4 ulps.
constexpr double closed_form_switch = 2.0;

} // namespace

double spectral_dipole_correlator(double nu) { return 1.0 / (nu * nu + 1.0); }

double spectral_dipole_correlator(const ModelParams &p, double nu) {
  return p.q() * p.q() / p.m() / (nu * nu + p.omega() * p.omega());
}

std::array<std::array<double, 3>, 3>
SpectralTensor3::components(const std::array<double, 3> &rhat) const {
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = (i == j ? transverse : 0.0) +
                (longitudinal - transverse) * rhat[i] * rhat[j];
  return t;
}

SpectralTensor3 field_correlator(double r_sep, double nu) {
  require_separation(r_sep, "field_correlator");
  const double x = std::abs(nu) * r_sep;
  const double scale = std::exp(-x) / (four_pi * r_sep * r_sep * r_sep);
  return {-2.0 * (1.0 + x) * scale, (1.0 + x + x * x) * scale};
}

double e4_energy_tensor(double r, const QuadratureSpec &spec) {
  require_separation(r, "e4_energy_tensor");
  // Units with A = q^2/(4 pi m) = 1 and omega = 1, so q^2/m = 4 pi.
  const double r3 = r * r * r;
  const auto integrand = [r, r3](double nu) {
    const double m = four_pi * spectral_dipole_correlator(nu);
    const auto corr = field_correlator(r, nu);
    const double l = m * r3 * corr.longitudinal;
    const double t = m * r3 * corr.transverse;
    return l * l + 2.0 * t * t;
  };
  // Even integrand: (1/2) int_-inf^inf dnu/2pi = (1/2pi) int_0^inf
  return integrate_semi_infinite(integrand, spec).value / (2.0 * pi);
}

double reduced_integrand(double nu, double r) {
  const double poly = (((nu + 2.0) * nu + 5.0) * nu + 6.0) * nu + 3.0;
  const double d = nu * nu + r * r;
  return poly * std::exp(-2.0 * nu) / (d * d);
}

double e4_energy_reduced(double r, const QuadratureSpec &spec, double cutoff) {
  require_separation(r, "e4_energy_reduced");
  if (!(cutoff > 0.0))
    throw std::invalid_argument("e4_energy_reduced: cutoff must be > 0");
  const double r3 = r * r * r;
  const auto integrand = [r, r3](double nu) {
    return r3 * reduced_integrand(nu, r);
  };
  return integrate(integrand, 0.0, cutoff, spec).value / pi;
}

double e4_energy_closed(double r) {
  require_separation(r, "e4_energy_closed");
  const double r2 = r * r;
  const double x = 2.0 * r;
  const double pf = 3.0 - 7.0 * r2 + r2 * r2;
  const double pg = 2.0 * r * (3.0 - 3.0 * r2 + r2 * r2);
  double bracket;
  if (r <= closed_form_switch) {
    bracket = r * (6.0 - r2) + pf * aux_f(x) + pg * aux_g(x);
  } else {
    // f = 1/x - 2/x^3 + F4, g = 1/x^2 - 6/x^4 + G5; the polynomial parts
    // collapse to 7/r - 3/r^3.
    bracket = 7.0 / r - 3.0 / (r2 * r) + pf * aux_f_remainder(x) +
              pg * aux_g_remainder(x);
  }
  return bracket / (2.0 * pi);
}

double retarded_energy(const ModelParams &p, double R) {
  const auto pt = to_dimensionless(p, R);
  return -e4_energy_closed(pt.r) * pt.g * pt.g * p.energy_unit();
}

double asymptote_london() { return 0.75; }

double asymptote_casimir_polder() { return 23.0 / (4.0 * pi); }

double casimir_polder_to_london_ratio(double r) {
  require_separation(r, "casimir_polder_to_london_ratio");
  return 23.0 / (3.0 * pi) / r;
}

double e4_energy_static_limit(double r, const QuadratureSpec &spec) {
  require_separation(r, "e4_energy_static_limit");
  const double r6 = std::pow(r, 6);
  const double contraction = r6 * field_correlator(r, 0.0).self_contraction();
  const auto integrand = [](double nu) {
    const double m = four_pi * spectral_dipole_correlator(nu);
    return m * m;
  };
  return integrate_semi_infinite(integrand, spec).value * contraction /
         (2.0 * pi);
}

double static_limit_energy(const ModelParams &p, double R,
                           const QuadratureSpec &spec) {
  require_separation(R, "static_limit_energy");
  const double omega = p.omega();
  // nu = omega u
  const auto integrand = [&p, omega](double u) {
    const double m = spectral_dipole_correlator(p, omega * u);
    return m * m;
  };
  const double line_integral =
      omega * integrate_semi_infinite(integrand, spec).value / pi; // int dnu/2pi
  return -0.5 * p.hbar() * line_integral *
         field_correlator(R, 0.0).self_contraction();
}

CrossoverCurve crossover_curve(double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max >= r_min) || !std::isfinite(r_max))
    throw std::invalid_argument("crossover_curve: need 0 < r_min <= r_max");
  if (points < 1)
    throw std::invalid_argument("crossover_curve: need at least one point");
  if (points > 1 && r_min == r_max)
    throw std::invalid_argument("crossover_curve: degenerate range");

  CrossoverCurve curve;
  const double lo = std::log(r_min);
  const double step =
      points > 1 ? (std::log(r_max) - lo) / (points - 1) : 0.0;
  for (int i = 0; i < points; ++i) {
    double r = std::exp(lo + step * i);
    if (i == 0)
      r = r_min;
    else if (i == points - 1)
      r = r_max;
    curve.grid.push_back(r);
    curve.energy.push_back(e4_energy_closed(r));
  }
  if (points < 3)
    return curve;

  std::vector<double> y(points);
  for (int i = 0; i < points; ++i)
    y[i] = std::log(curve.energy[i]);
  curve.slope.resize(points);
  const int n = points - 1;
  curve.slope[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * step);
  for (int i = 1; i < n; ++i)
    curve.slope[i] = (y[i + 1] - y[i - 1]) / (2.0 * step);
  curve.slope[n] = (3.0 * y[n] - 4.0 * y[n - 1] + y[n - 2]) / (2.0 * step);
  return curve;
}

} // namespace vdw
