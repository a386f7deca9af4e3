#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace octograss {

class DifferentiationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DerivativeOptions {
  double step = 1e-3;
  /// Largest accepted gap between the two Richardson extrapolants.
  double accept_tol = 1e-7;
};

/**
 * Central differences at h, h/2, h/4 with one Richardson step each.
 *
 * The two extrapolants (h, h/2) and (h/2, h/4) must agree to accept_tol,
 * scaled by max(1, |value|); the finer one is returned. F returns an Eigen
 * dense object or a double.
 */
template <class F>
auto derivative(F&& f, double x, const DerivativeOptions& opt = {}) {
  const double h = opt.step;
  auto central = [&](double step) { return ((f(x + step) - f(x - step)) / (2.0 * step)).eval(); };
  const auto d1 = central(h);
  const auto d2 = central(h / 2.0);
  const auto d4 = central(h / 4.0);
  const auto r1 = ((4.0 * d2 - d1) / 3.0).eval();
  const auto r2 = ((4.0 * d4 - d2) / 3.0).eval();
  const double gap = (r1 - r2).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, r2.cwiseAbs().maxCoeff());
  if (!(gap <= opt.accept_tol * scale)) {
    throw DifferentiationError("Richardson extrapolants disagree by " + std::to_string(gap) +
                               " at step " + std::to_string(h));
  }
  return r2;
}

template <class F>
double derivative_scalar(F&& f, double x, const DerivativeOptions& opt = {}) {
  auto wrapped = [&](double y) {
    Eigen::Matrix<double, 1, 1> m;
    m(0, 0) = f(y);
    return m;
  };
  return derivative(wrapped, x, opt)(0, 0);
}

}  // namespace octograss
