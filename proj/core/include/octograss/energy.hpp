#pragma once

/**
 * @file energy.hpp
 * @brief Monte Carlo estimates of total bending and Sasaki energy densities,
 *        first-variation tests, and the parallel-section obstruction.
 *
 * Only densities (per unit volume) are reported. For a section sigma of a
 * sphere bundle with the Sasaki metric, |d sigma|^2 = dim M + |nabla sigma|^2,
 * so the energy density is (dim M + bending density) / 2.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "octograss/diffops.hpp"
#include "octograss/report.hpp"
#include "octograss/sections.hpp"

namespace octograss {

/// sum_a |nabla_{e_a} sigma|^2 over an orthonormal frame at P.
double bending_density(const Section& sigma, const OrientedSubspace& p,
                       const DiffOptions& opt = {});

struct EnergyEstimate {
  std::string section;
  int samples = 0;
  double mean_density = 0.0;  ///< mean bending density
  double stddev = 0.0;        ///< sample standard deviation of the density
  double energy_density = 0.0;
  std::uint64_t seed = 0;
};

EnergyEstimate estimate_energy(const Section& sigma, int samples, std::uint64_t seed,
                               const DiffOptions& opt = {});

/**
 * A variation sigma_t(P) = (sigma(P) + t W(P)) / |sigma(P) + t W(P)|.
 *
 * W is a fixed random polynomial of degree two in the projector F F^T
 * (so it does not depend on the chosen frame), projected to the fibre and
 * made orthogonal to sigma(P).
 */
class Variation {
 public:
  Variation(Section base, std::vector<Eigen::MatrixXd> coefficients);

  const Section& base() const { return base_; }

  /// W at the point spanned by `frame`.
  Eigen::MatrixXd direction(const Eigen::MatrixXd& frame) const;

  /// sigma_t as a section of the same sphere bundle.
  Section at(double t) const;

 private:
  Section base_;
  std::vector<Eigen::MatrixXd> coeffs_;
};

Variation random_variation(const Section& base, std::uint64_t seed);

struct FirstVariation {
  double derivative = 0.0;      ///< estimated dE/dt at t = 0 (density)
  double standard_error = 0.0;  ///< Monte Carlo standard error
  int samples = 0;
  bool inconclusive = false;    ///< standard error exceeds |derivative|

  double z_score() const {
    return standard_error > 0.0 ? derivative / standard_error : 0.0;
  }
};

/**
 * Central difference of the energy density at t = +-dt, with the same
 * sample points at both t (common random numbers). The horizontal part of
 * the energy does not depend on t and cancels.
 */
FirstVariation first_variation(const Variation& variation, double dt, int samples,
                               std::uint64_t seed, const DiffOptions& opt = {});

struct ObstructionSample {
  double t = 0.0;
  double a = 0.0;
  double transport_error = 0.0;  ///< |transported v - (-sin t u_a + cos t v)|
  double loop_derivative = 0.0;  ///< |D/da V(c(a))|
  double expected = 0.0;         ///< |pi_a(-sin t v_a)|
};

/**
 * Non-existence of parallel sections of the normal sphere bundle over G(3,8).
 *
 * With u_a = cos a e1 + sin a e2, v_a = -sin a e1 + cos a e2 and the curves
 * gamma_a(t) = e0 ^ (cos t u_a + sin t v) ^ (cos t v_a + sin t w), transports
 * v along gamma_a numerically and differentiates the result along
 * c(a) = gamma_a(t). A parallel section would make that derivative vanish.
 */
ObstructionSample parallel_obstruction(double t, double a = 0.0, double transport_tol = 1e-9);

/// Runs t in {pi/6, pi/4, pi/3}; residual is the worst deviation from sin^2 t.
VerificationReport parallel_obstruction_report(std::span<const double> ts = {});

}  // namespace octograss
