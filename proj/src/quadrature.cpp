#include "vdw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace vdw {

namespace detail {
const double kronrod15_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kronrod15_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double gauss7_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
} // namespace detail

QuadratureSpec::QuadratureSpec(double abs_tol, double rel_tol,
                               int max_subdivisions)
    : abs_tol_(abs_tol), rel_tol_(rel_tol),
      max_subdivisions_(max_subdivisions) {
  if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol))
    throw std::invalid_argument("QuadratureSpec: abs_tol must be >= 0");
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2))
    throw std::invalid_argument("QuadratureSpec: rel_tol must be in [1e-14, 1e-2]");
  if (max_subdivisions < 1 || max_subdivisions > 1000000)
    throw std::invalid_argument(
        "QuadratureSpec: max_subdivisions must be in [1, 1e6]");
}

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel &x, const Panel &y) const {
    if (x.error != y.error)
      return x.error < y.error;
    return x.a > y.a; // ties: leftmost panel first
  }
};

double checked(const Integrand &f, double x) {
  const double y = f(x);
  if (!std::isfinite(y))
    throw QuadratureError(QuadratureError::Kind::EvaluationError,
                          "integrand returned a non-finite value at x = " +
                              std::to_string(x));
  return y;
}

Panel kronrod15(const Integrand &f, double a, double b) {
  using namespace detail;
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = checked(f, center);
  double kronrod = fc * kronrod15_weights[7];
  double gauss = fc * gauss7_weights[3];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod15_nodes[j];
    const double f1 = checked(f, center - dx);
    const double f2 = checked(f, center + dx);
    kronrod += kronrod15_weights[j] * (f1 + f2);
    abs_sum += kronrod15_weights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1)
      gauss += gauss7_weights[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  double error = std::abs((kronrod - gauss) * half);
  // Roundoff floor.
  error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() *
                              std::abs(abs_sum * half));
  return {a, b, value, error};
}

} // namespace

QuadratureResult integrate(const Integrand &f, double a, double b,
                           const QuadratureSpec &spec) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate: limits must be finite");
  if (a == b)
    return {};
  if (b < a) {
    auto r = integrate(f, b, a, spec);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  panels.push(kronrod15(f, a, b));
  long evaluations = 15;
  double value = panels.top().value;
  double error = panels.top().error;

  const auto converged = [&](double v, double e) {
    return e <= std::max(spec.abs_tol(), spec.rel_tol() * std::abs(v));
  };

  while (!converged(value, error)) {
    if (static_cast<int>(panels.size()) >= spec.max_subdivisions())
      throw QuadratureError(QuadratureError::Kind::ToleranceNotReached,
                            "integrate: max_subdivisions exhausted (error " +
                                std::to_string(error) + ")");
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw QuadratureError(QuadratureError::Kind::ToleranceNotReached,
                            "integrate: panel width below resolution");
    panels.pop();
    const Panel left = kronrod15(f, worst.a, mid);
    const Panel right = kronrod15(f, mid, worst.b);
    evaluations += 30;
    panels.push(left);
    panels.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;

    if (converged(value, error)) {
      // Resum from scratch in left-to-right order to shed running drift.
      std::vector<Panel> all;
      all.reserve(panels.size());
      auto copy = panels;
      while (!copy.empty()) {
        all.push_back(copy.top());
        copy.pop();
      }
      std::sort(all.begin(), all.end(),
                [](const Panel &x, const Panel &y) { return x.a < y.a; });
      value = 0.0;
      error = 0.0;
      for (const auto &p : all) {
        value += p.value;
        error += p.error;
      }
    }
  }
  return {value, error, evaluations};
}

QuadratureResult integrate_semi_infinite(const Integrand &f,
                                         const QuadratureSpec &spec,
                                         double a) {
  if (!std::isfinite(a))
    throw std::invalid_argument("integrate_semi_infinite: lower limit must be finite");
  const auto mapped = [&](double t) {
    const double s = 1.0 - t;
    const double x = a + t / s;
    if (!std::isfinite(x))
      return 0.0;
    const double y = f(x);
    return y == 0.0 ? 0.0 : y / (s * s);
  };
  return integrate(mapped, 0.0, 1.0, spec);
}

} // namespace vdw
