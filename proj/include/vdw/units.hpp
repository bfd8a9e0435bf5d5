#pragma once

#include <numbers>

namespace vdw {

/// Physical parameters of the harmonic-atom model.
///
/// Energies elsewhere in the library are reported in units of hbar*omega and
/// separations through the dimensionless pair (r, g); this type only lives at
/// API boundaries. Heaviside-Lorentz units: the Coulomb kernel is 1/(4 pi |x|).
class ModelParams {
public:
  /// Throws std::invalid_argument unless hbar, c, m, omega > 0 and q != 0.
  ModelParams(double hbar, double c, double m, double q, double omega);

  /// hbar = c = m = q = omega = 1.
  static ModelParams unit() { return {1.0, 1.0, 1.0, 1.0, 1.0}; }

  double hbar() const { return hbar_; }
  double c() const { return c_; }
  double m() const { return m_; }
  double q() const { return q_; }
  double omega() const { return omega_; }

  /// hbar * omega, the energy unit of every dimensionless result.
  double energy_unit() const { return hbar_ * omega_; }

  /// A = q^2 omega / (4 pi m).
  double amplitude() const;

private:
  double hbar_;
  double c_;
  double m_;
  double q_;
  double omega_;
};

/// Static polarizability q^2 / (4 pi m omega^2).
double polarizability(const ModelParams &p);

struct DimlessPoint {
  double r; ///< omega R / c
  double g; ///< alpha / R^3
};

/// Throws std::invalid_argument for R <= 0 (or non-finite R).
DimlessPoint to_dimensionless(const ModelParams &p, double R);

/// Separation R reconstructed from r.
double from_dimensionless(const ModelParams &p, const DimlessPoint &pt);

} // namespace vdw
