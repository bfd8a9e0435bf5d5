#include "vdw/units.hpp"

#include <cmath>
#include <stdexcept>

namespace vdw {

namespace {
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
} // namespace

ModelParams::ModelParams(double hbar, double c, double m, double q,
                         double omega)
    : hbar_(hbar), c_(c), m_(m), q_(q), omega_(omega) {
  if (!positive(hbar))
    throw std::invalid_argument("ModelParams: hbar must be > 0");
  if (!positive(c))
    throw std::invalid_argument("ModelParams: c must be > 0");
  if (!positive(m))
    throw std::invalid_argument("ModelParams: m must be > 0");
  if (!positive(omega))
    throw std::invalid_argument("ModelParams: omega must be > 0");
  if (!std::isfinite(q) || q == 0.0)
    throw std::invalid_argument("ModelParams: q must be nonzero");
}

double ModelParams::amplitude() const {
  return q_ * q_ * omega_ / (4.0 * std::numbers::pi * m_);
}

double polarizability(const ModelParams &p) {
  return p.q() * p.q() / (4.0 * std::numbers::pi * p.m() * p.omega() * p.omega());
}

DimlessPoint to_dimensionless(const ModelParams &p, double R) {
  if (!positive(R))
    throw std::invalid_argument("to_dimensionless: separation must be > 0");
  return {p.omega() * R / p.c(), polarizability(p) / (R * R * R)};
}

double from_dimensionless(const ModelParams &p, const DimlessPoint &pt) {
  return pt.r * p.c() / p.omega();
}

} // namespace vdw
