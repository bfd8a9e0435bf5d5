#pragma once

// Interaction energies of two harmonic atoms coupled through the
// instantaneous (Coulomb) dipole-dipole interaction.
//
// Everything is dimensionless: the coupling is g = alpha / R^3 and energies
// are in units of hbar * omega. In the frame with R along z the dipole
// coupling tensor 3 R^i R^j / R^5 - delta^ij / R^3 (times 1/4pi) has
// eigenvalues (-1, -1, +2) in units of alpha/R^3 after the polarizability
// is folded in, so the problem splits into two transverse channels with
// coupling g and one longitudinal channel with coupling 2g.

#include "vdw/quadrature.hpp"
#include "vdw/units.hpp"

#include <array>
#include <vector>

namespace vdw {

/// Interaction energy with a vacuum-decay channel. im <= 0 always.
struct ComplexEnergy {
  double re = 0.0;
  double im = 0.0;
};

/// Channel couplings in units of g: two transverse, one longitudinal.
inline constexpr std::array<double, 3> channel_weights = {-1.0, -1.0, 2.0};

/// The coupling tensor (3 rhat rhat - 1), i.e. the dipole kernel in units of
/// 1/(4 pi R^3), for a unit vector rhat. Exposed for tests.
std::array<std::array<double, 3>, 3>
dipole_coupling_tensor(const std::array<double, 3> &rhat);

/// Time-ordered dipole (position) correlator of one harmonic atom:
///   <T r^i(tau) r^j(tau')> = delta^ij hbar / (2 m omega) exp(-omega |tau - tau'|)
struct DipoleCorrelator {
  double prefactor;  ///< hbar / (2 m omega)
  double decay_rate; ///< omega

  explicit DipoleCorrelator(const ModelParams &p);

  double operator()(double tau, double tau_prime) const;
};

/// Second-order (London) energy -3/4 g^2. Throws std::invalid_argument for g < 0.
double london_energy(double g);

/// London energy in physical units at separation R.
double london_energy(const ModelParams &p, double R);

/// All-orders energy from the frequency integral
///   (1/2) int dnu/2pi { 2 log[1 - (g/(nu^2+1))^2] + log[1 - (2g/(nu^2+1))^2] }.
/// Where a log argument is negative the branch log|x| - i pi is taken, so the
/// imaginary part is <= 0. The nu axis is split at the zeros of the
/// arguments and real and imaginary parts are integrated per segment.
/// Throws QuadratureError if the integral does not converge.
ComplexEnergy exact_energy_spectral(double g, const QuadratureSpec &spec = {});

/// Exact ground-state shift from the normal modes:
///   (1/2) [2 (sqrt(1+g) + sqrt(1-g) - 2) + (sqrt(1+2g) + sqrt(1-2g) - 2)],
/// with sqrt(-y) = -i sqrt(y).
ComplexEnergy exact_energy_normal_modes(double g);

struct Thresholds {
  double r1; ///< (2 alpha)^(1/3): longitudinal channel goes unstable below
  double r2; ///< alpha^(1/3): transverse channels go unstable below
};

Thresholds thresholds(const ModelParams &p);

/// Taylor coefficient of g^order of the normal-mode energy, order even >= 2.
/// Throws std::invalid_argument for odd or out-of-range orders.
double london_series_coefficient(int order);

/// Coefficients c_2, c_4, ..., c_order (order in {2, 4, 6, 8}).
std::vector<double> london_series_coefficients(int order);

} // namespace vdw
