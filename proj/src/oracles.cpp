#include "vdw/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vdw::oracle {

namespace {
using quad = __float128;

// long double gamma; good to ~1e-19
const quad euler_gamma_q = 0.577215664901532860606512090082402431L;

quad abs_q(quad v) { return v < 0 ? -v : v; }
} // namespace

SiCi sici_series(double x) {
  if (!(x > 0.0))
    throw std::domain_error("oracle::sici_series: x must be > 0");
  const quad xq = x;
  const quad x2 = xq * xq;
  const quad tiny = 1e-34L;

  quad si = 0;
  quad power = xq;
  for (int k = 0; k < 400; ++k) {
    const quad term = power / (2 * k + 1);
    si += term;
    if (k > 2 && abs_q(term) < tiny * abs_q(si))
      break;
    power *= -x2 / ((2 * k + 2) * static_cast<quad>(2 * k + 3));
  }

  quad sum = 0;
  power = -x2 / 2;
  for (int k = 1; k < 400; ++k) {
    const quad term = power / (2 * k);
    sum += term;
    if (k > 2 && abs_q(term) < tiny * (abs_q(sum) + 1))
      break;
    power *= -x2 / ((2 * k + 1) * static_cast<quad>(2 * k + 2));
  }
  // ln x in long double is good to ~1e-19, enough for a 1e-13 oracle.
  const quad ci = euler_gamma_q + static_cast<quad>(std::log(static_cast<long double>(x))) + sum;
  return {static_cast<double>(si), static_cast<double>(ci)};
}

Asymptotic aux_asymptotic(double x) {
  if (!(x > 0.0))
    throw std::domain_error("oracle::aux_asymptotic: x must be > 0");
  using ld = long double;
  const ld xl = x;
  const ld inv2 = 1.0L / (xl * xl);

  ld f = 0, g = 0;
  ld tf = 1.0L / xl;       // (2k)!/x^(2k+1)
  ld tg = 1.0L / (xl * xl); // (2k+1)!/x^(2k+2)
  ld truncation = 0;
  for (int k = 0; k < 1000; ++k) {
    const ld sign = (k % 2 == 0) ? 1.0L : -1.0L;
    f += sign * tf;
    g += sign * tg;
    const ld nf = tf * (2 * k + 1) * (2 * k + 2) * inv2;
    const ld ng = tg * (2 * k + 2) * (2 * k + 3) * inv2;
    truncation = std::max(nf, ng);
    if (nf >= tf || ng >= tg || truncation < 1e-30L)
      break;
    tf = nf;
    tg = ng;
  }
  return {static_cast<double>(f), static_cast<double>(g),
          static_cast<double>(truncation)};
}

SiCi sici_asymptotic(double x) {
  const auto a = aux_asymptotic(x);
  using ld = long double;
  const ld s = std::sin(static_cast<ld>(x));
  const ld c = std::cos(static_cast<ld>(x));
  const ld half_pi = std::numbers::pi_v<ld> / 2;
  return {static_cast<double>(half_pi - a.f * c - a.g * s),
          static_cast<double>(a.f * s - a.g * c)};
}

SiCi sici(double x) {
  if (aux_asymptotic(x).truncation < 1e-13)
    return sici_asymptotic(x);
  if (x > 30.0)
    throw std::domain_error("oracle::sici: no reliable oracle at this x");
  return sici_series(x);
}

double normal_mode_series_coefficient(int n, bool three_channel) {
  if (n < 0)
    throw std::invalid_argument("normal_mode_series_coefficient: n < 0");
  // s(x) = sqrt(1 + x) = sum a_k x^k with s^2 = 1 + x:
  //   2 a_0 a_k + sum_{j=1}^{k-1} a_j a_{k-j} = [k == 1]
  std::vector<double> a(n + 1, 0.0);
  a[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double conv = 0.0;
    for (int j = 1; j < k; ++j)
      conv += a[j] * a[k - j];
    a[k] = ((k == 1 ? 1.0 : 0.0) - conv) / 2.0;
  }
  if (n == 0 || n % 2 == 1)
    return 0.0; // sqrt(1+x) + sqrt(1-x) - 2 is even and vanishes at 0
  // (1/2)(s(x) + s(-x) - 2) has coefficient a_n at even n.
  const double channel = a[n];
  if (!three_channel)
    return channel;
  return channel * (1.0 + 1.0 + std::pow(2.0, n));
}

double reduced_polynomial_moment() {
  const double c[] = {3.0, 6.0, 5.0, 2.0, 1.0}; // c_0 .. c_4
  double sum = 0.0;
  double factorial = 1.0;
  for (int k = 0; k <= 4; ++k) {
    if (k > 0)
      factorial *= k;
    sum += c[k] * factorial / std::pow(2.0, k + 1);
  }
  return sum;
}

} // namespace vdw::oracle
