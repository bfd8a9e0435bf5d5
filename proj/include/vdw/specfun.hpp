#pragma once

// Sine and cosine integrals and the auxiliary functions
//
//   f(x) = Ci(x) sin x - (Si(x) - pi/2) cos x
//   g(x) = -[Ci(x) cos x + (Si(x) - pi/2) sin x]
//
// For x <= 4 Si and Ci come from their power series and f, g are composed
// from them. For x > 4 f and g are evaluated first, from the continued
// fraction of exp(ix) E1(ix) = g(x) - i f(x), and Si, Ci follow from
//
//   Si(x) = pi/2 - f cos x - g sin x,   Ci(x) = f sin x - g cos x.
//
// All functions throw std::domain_error outside their domain (NaN included).

namespace vdw {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// Si(x) for x >= 0.
double sine_integral(double x);

/// Ci(x) for x > 0.
double cosine_integral(double x);

/// f(x) for x > 0. f(0+) = pi/2, f(x) ~ 1/x for large x.
double aux_f(double x);

/// g(x) for x > 0. g(x) ~ -ln x - gamma near 0, g(x) ~ 1/x^2 for large x.
double aux_g(double x);

namespace detail {

inline constexpr double series_branch_limit = 4.0;

struct SiCi {
  double si;
  double ci;
};

struct AuxFG {
  double f;
  double g;
};

/// Power series for Si and Ci. Accurate for moderate x only (x <~ 6).
SiCi sici_series(double x);

/// Continued fraction for f and g. Converges for any x > 0, slowly below ~2.
AuxFG aux_continued_fraction(double x);

} // namespace detail
} // namespace vdw
