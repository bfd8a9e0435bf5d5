#include "vdw/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vdw {

namespace detail {

SiCi sici_series(double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double x2 = x * x;

  // Si = sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
  double si = 0.0;
  {
    double power = x; // (-1)^k x^(2k+1) / (2k+1)!
    for (int k = 0; k < 100; ++k) {
      const double term = power / (2 * k + 1);
      si += term;
      if (std::abs(term) < eps * std::abs(si))
        break;
      power *= -x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
  }

  // Ci = gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
  double sum = 0.0;
  {
    double power = -x2 / 2.0; // (-1)^k x^(2k) / (2k)!
    for (int k = 1; k < 100; ++k) {
      const double term = power / (2 * k);
      sum += term;
      if (std::abs(term) < eps * std::abs(sum))
        break;
      power *= -x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
  }
  return {si, euler_gamma + std::log(x) + sum};
}

AuxFG aux_continued_fraction(double x) {
  // Modified Lentz evaluation of exp(z) E1(z), z = ix:
  //   1/(z+1 - 1/(z+3 - 4/(z+5 - 9/(z+7 - ...))))
  using cplx = std::complex<double>;
  constexpr double tiny = 1e-300;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  cplx b(1.0, x);
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
      return {-h.imag(), h.real()};
  }
  throw std::runtime_error("aux_continued_fraction: no convergence");
}

} // namespace detail

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

void require_positive(double x, const char *who) {
  if (std::isnan(x) || x <= 0.0)
    throw std::domain_error(std::string(who) + ": argument must be > 0");
}

} // namespace

double sine_integral(double x) {
  if (std::isnan(x) || x < 0.0)
    throw std::domain_error("sine_integral: argument must be >= 0");
  if (x == 0.0)
    return 0.0;
  if (std::isinf(x))
    return half_pi;
  if (x <= detail::series_branch_limit)
    return detail::sici_series(x).si;
  const auto [f, g] = detail::aux_continued_fraction(x);
  return half_pi - f * std::cos(x) - g * std::sin(x);
}

double cosine_integral(double x) {
  require_positive(x, "cosine_integral");
  if (std::isinf(x))
    return 0.0;
  if (x <= detail::series_branch_limit)
    return detail::sici_series(x).ci;
  const auto [f, g] = detail::aux_continued_fraction(x);
  return f * std::sin(x) - g * std::cos(x);
}

double aux_f(double x) {
  require_positive(x, "aux_f");
  if (std::isinf(x))
    return 0.0;
  if (x <= detail::series_branch_limit) {
    const auto [si, ci] = detail::sici_series(x);
    return ci * std::sin(x) - (si - half_pi) * std::cos(x);
  }
  return detail::aux_continued_fraction(x).f;
}

double aux_g(double x) {
  require_positive(x, "aux_g");
  if (std::isinf(x))
    return 0.0;
  if (x <= detail::series_branch_limit) {
    const auto [si, ci] = detail::sici_series(x);
    return -(ci * std::cos(x) + (si - half_pi) * std::sin(x));
  }
  return detail::aux_continued_fraction(x).g;
}

} // namespace vdw
