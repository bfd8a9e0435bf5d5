#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace vdw {

/// Convergence request for the adaptive integrators.
class QuadratureSpec {
public:
  /// Throws std::invalid_argument unless abs_tol >= 0,
  /// rel_tol in [1e-14, 1e-2] and 1 <= max_subdivisions <= 1e6.
  QuadratureSpec(double abs_tol = 0.0, double rel_tol = 1e-12,
                 int max_subdivisions = 20000);

  double abs_tol() const { return abs_tol_; }
  double rel_tol() const { return rel_tol_; }
  int max_subdivisions() const { return max_subdivisions_; }

private:
  double abs_tol_;
  double rel_tol_;
  int max_subdivisions_;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

class QuadratureError : public std::runtime_error {
public:
  enum class Kind { ToleranceNotReached, EvaluationError };

  QuadratureError(Kind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

using Integrand = std::function<double(double)>;

/// Adaptive 7/15-point Gauss-Kronrod on [a, b]. Panels are bisected in order
/// of decreasing error estimate until the global estimate satisfies the spec.
/// Integrable endpoint singularities are fine (nodes never touch endpoints).
QuadratureResult integrate(const Integrand &f, double a, double b,
                           const QuadratureSpec &spec = {});

/// Integral over [a, inf). The tail is mapped onto [0, 1) by
/// x = a + t / (1 - t), which turns both exponential and x^-p (p >= 2) decay
/// into a bounded integrand, and then handled by `integrate`.
QuadratureResult integrate_semi_infinite(const Integrand &f,
                                         const QuadratureSpec &spec = {},
                                         double a = 0.0);

namespace detail {
/// Kronrod abscissae (descending, last one is 0) and weights, plus the
/// embedded Gauss weights at the odd Kronrod nodes.
extern const double kronrod15_nodes[8];
extern const double kronrod15_weights[8];
extern const double gauss7_weights[4];
} // namespace detail

} // namespace vdw
