#pragma once

// Independent reference computations used by the test suites and by the
// self-check. None of these share code paths with the library routines they
// check.

namespace vdw::oracle {

struct SiCi {
  double si;
  double ci;
};

/// Power series for Si and Ci summed in 113-bit precision. Reliable to
/// ~1e-20 absolute for 0 < x <= 30.
SiCi sici_series(double x);

struct Asymptotic {
  double f;
  double g;
  double truncation; ///< magnitude of the smallest (first omitted) term
};

/// Large-x asymptotic expansions
///   f ~ (1/x) sum (-1)^k (2k)!/x^2k,  g ~ (1/x^2) sum (-1)^k (2k+1)!/x^2k,
/// stopped at the smallest term, in extended precision.
Asymptotic aux_asymptotic(double x);

/// Si and Ci from the asymptotic expansions.
SiCi sici_asymptotic(double x);

/// Best available oracle at x > 0: asymptotic where its truncation error is
/// below 1e-13, the extended-precision series otherwise.
SiCi sici(double x);

/// Taylor coefficient of g^n in the normal-mode energy of the three-channel
/// pair (couplings g, g, 2g), from the power series of sqrt(1+x) obtained by
/// the Cauchy-product recurrence s^2 = 1 + x. Exact rational arithmetic is
/// not needed at these orders; returns a double.
double normal_mode_series_coefficient(int n, bool three_channel = true);

/// sum_n c_n n! / 2^(n+1) for the polynomial x^4 + 2x^3 + 5x^2 + 6x + 3,
/// i.e. int_0^inf poly(x) exp(-2x) dx by Gamma-function moments.
double reduced_polynomial_moment();

} // namespace vdw::oracle
