#pragma once

// Fourth-order retarded (Casimir-Polder) interaction energy of two harmonic
// atoms, c = 1 internally, frequencies in units of omega and separations in
// units of c/omega, so that r = omega R / c.
//
// Results are reported in the normalization
//
//   F(r) = -E(r) r^6 / A^2,   A = q^2 omega / (4 pi m),
//
// which tends to 3/4 for r -> 0 (London) and to 23/(4 pi r) for r -> inf
// (Casimir-Polder). The physical energy is E = -F(r) hbar omega alpha^2 / R^6.
//
// Field correlator. Applying (delta^ij nabla^2 - d^i d^j) to the kernel
// phi(R) = exp(-mu R)/(4 pi R), mu = |nu|, away from R = 0:
//
//   nabla^2 phi = mu^2 phi
//   d^i d^j phi = (delta^ij - Rh^i Rh^j) phi'/R + Rh^i Rh^j phi''
//   phi'  = -(1 + mu R) exp(-mu R) / (4 pi R^2)
//   phi'' = (2 + 2 mu R + mu^2 R^2) exp(-mu R) / (4 pi R^3)
//
// so with x = mu R the tensor is T delta^ij + (L - T) Rh^i Rh^j with
//
//   L = -2 (1 + x) exp(-x) / (4 pi R^3)          (along R)
//   T = (1 + x + x^2) exp(-x) / (4 pi R^3)       (transverse)
//
// and L^2 + 2 T^2 = 2 (x^4 + 2x^3 + 5x^2 + 6x + 3) exp(-2x) / ((4 pi)^2 R^6).
// The contact term -delta^ij delta^3(R) is dropped (R > 0).

#include "vdw/quadrature.hpp"
#include "vdw/units.hpp"

#include <array>
#include <optional>
#include <vector>

namespace vdw {

/// M(nu) m omega^2 / q^2 = 1 / (nu^2 + 1), nu in units of omega.
double spectral_dipole_correlator(double nu);

/// Physical M(nu) = (q^2/m) / (nu^2 + omega^2).
double spectral_dipole_correlator(const ModelParams &p, double nu);

/// Frequency-space electric-field correlator in the frame with R along an axis.
struct SpectralTensor3 {
  double longitudinal = 0.0;
  double transverse = 0.0;

  /// L + 2T (vanishes at nu = 0).
  double trace() const { return longitudinal + 2.0 * transverse; }
  /// sum_ij I^ij I^ji = L^2 + 2 T^2.
  double self_contraction() const {
    return longitudinal * longitudinal + 2.0 * transverse * transverse;
  }
  /// Full tensor for separation direction rhat (unit vector).
  std::array<std::array<double, 3>, 3>
  components(const std::array<double, 3> &rhat) const;
};

/// Throws std::invalid_argument for r_sep <= 0.
SpectralTensor3 field_correlator(double r_sep, double nu);

/// Frequency-domain route: F(r) from
///   E = -(1/2) int dnu/2pi sum_ij (M(nu) I^ij(R, nu))^2
/// by quadrature over nu, using field_correlator.
double e4_energy_tensor(double r, const QuadratureSpec &spec = {});

/// Integrand of the reduced route,
///   (nu^4 + 2nu^3 + 5nu^2 + 6nu + 3) exp(-2nu) / (nu^2 + r^2)^2.
double reduced_integrand(double nu, double r);

/// Reduced route: F(r) = (r^3/pi) int_0^cutoff reduced_integrand.
/// The exp(-2 nu) factor makes cutoff = 40 exact to double precision.
double e4_energy_reduced(double r, const QuadratureSpec &spec = {},
                         double cutoff = 40.0);

/// Closed form through the auxiliary functions f, g of the sine and cosine
/// integrals:
///   F(r) = [r(6 - r^2) + (3 - 7r^2 + r^4) f(2r) + 2r(3 - 3r^2 + r^4) g(2r)] / (2 pi)
double e4_energy_closed(double r);

/// Physical fourth-order energy at separation R, from the closed form.
double retarded_energy(const ModelParams &p, double R);

/// Small-r limit of F: 3/4.
double asymptote_london();
/// Large-r limit of F r: 23/(4 pi).
double asymptote_casimir_polder();
/// Casimir-Polder over London asymptote at r: (23 / 3pi) / r.
double casimir_polder_to_london_ratio(double r);

/// F(r) with I^ij(R, nu) replaced by its nu = 0 value (instantaneous
/// interaction). Independent of r; equals 3/4.
double e4_energy_static_limit(double r, const QuadratureSpec &spec = {});

/// Physical energy of the same replacement:
///   -(hbar/2) int dnu/2pi M(nu)^2 sum_ij I^ij(R,0) I^ji(R,0)
double static_limit_energy(const ModelParams &p, double R,
                           const QuadratureSpec &spec = {});

struct CrossoverCurve {
  std::vector<double> grid;   ///< log-uniform, strictly increasing
  std::vector<double> energy; ///< F(r) = -E r^6 / A^2
  /// d log F / d log r; empty when fewer than 3 points.
  std::vector<double> slope;
};

/// F and its logarithmic slope on a log-uniform grid, from the closed form.
/// The slope uses centered differences inside and second-order one-sided
/// stencils at the ends, with the grid spacing as step.
/// Requires 0 < r_min <= r_max, points >= 1, and r_min < r_max if points > 1.
CrossoverCurve crossover_curve(double r_min, double r_max, int points);

} // namespace vdw
