#pragma once

/**
 * @file bundles.hpp
 * @brief Normal and skew-operator bundles over Grassmannians and their connections.
 *
 * Normal bundle: fibre over P is P^perp in R^n, connection D/dt x = pi_t(x').
 * Skew bundle:   fibre over P is {T skew : T|_P = 0}, inner product
 *                <S,T> = trace(S^T T) / 6, connection D/dt T = pi_t T' pi_t.
 *
 * Fibre values are carried as Eigen::MatrixXd (an n x 1 column for normal
 * vectors) so that the differential operators can be written once.
 */

#include <functional>

#include <Eigen/Core>

#include "octograss/grassmann.hpp"
#include "octograss/numdiff.hpp"

namespace octograss {

enum class FiberKind { Normal, Skew };

const char* to_string(FiberKind kind);

double fiber_inner(FiberKind kind, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double fiber_norm(FiberKind kind, const Eigen::MatrixXd& a);

/// pi x for normal fibres, pi T pi for skew fibres; `pi` is the projector onto P^perp.
Eigen::MatrixXd fiber_project(FiberKind kind, const Eigen::MatrixXd& pi,
                              const Eigen::MatrixXd& value);

/// Largest violation of the fibre constraint at P (|F^T x| or |T F|).
double fiber_constraint_residual(FiberKind kind, const OrientedSubspace& p,
                                 const Eigen::MatrixXd& value);

class NormalElement {
 public:
  /// Throws std::invalid_argument if vec is not orthogonal to base.
  NormalElement(OrientedSubspace base, Eigen::VectorXd vec, double tol = 1e-10);

  const OrientedSubspace& base() const { return base_; }
  const Eigen::VectorXd& vec() const { return vec_; }
  double norm() const { return vec_.norm(); }
  bool is_unit(double tol = 1e-10) const;

 private:
  OrientedSubspace base_;
  Eigen::VectorXd vec_;
};

class SkewElement {
 public:
  /// Throws std::invalid_argument unless op is skew and vanishes on base.
  SkewElement(OrientedSubspace base, Eigen::MatrixXd op, double tol = 1e-10);

  const OrientedSubspace& base() const { return base_; }
  const Eigen::MatrixXd& op() const { return op_; }
  /// sqrt(trace(op^T op) / 6)
  double norm() const;
  bool is_unit(double tol = 1e-10) const;

 private:
  OrientedSubspace base_;
  Eigen::MatrixXd op_;
};

double skew_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

NormalElement fiber_project_normal(const OrientedSubspace& p, const Eigen::VectorXd& x);

/// Pi_P(T) = pi_P T pi_P. Throws std::invalid_argument if T is not skew.
SkewElement fiber_project_skew(const OrientedSubspace& p, const Eigen::MatrixXd& t);

/// A curve of base points with a fibre value along it. `velocity`, if set,
/// is the exact ambient derivative of `value`; otherwise it is differentiated
/// numerically.
template <class Value>
struct FiberPath {
  std::function<OrientedSubspace(double)> base;
  std::function<Value(double)> value;
  std::function<Value(double)> velocity{};
};

using NormalPath = FiberPath<Eigen::VectorXd>;
using SkewPath = FiberPath<Eigen::MatrixXd>;

NormalElement covariant_derivative_normal(const NormalPath& path, double t,
                                          const DerivativeOptions& opt = {});
SkewElement covariant_derivative_skew(const SkewPath& path, double t,
                                      const DerivativeOptions& opt = {});

struct TransportOptions {
  double step = 1e-3;
  /// Accepted gap between the solutions at step h and h/2.
  double tol = 1e-9;
  int max_halvings = 10;
  /// When false, integrate once at `step` without the halving test.
  bool adaptive = true;
};

struct TransportResult {
  NormalElement value;
  double step;          ///< step size of the accepted solution
  double gap;           ///< |x_h - x_{h/2}| at acceptance
  double norm_drift;    ///< |(|x| - |x0|)| before renormalisation, worst step
};

/**
 * Parallel transport in the normal bundle along `curve` from 0 to t_end.
 *
 * Solves x' = pi'(t) x (equivalently pi_t x' = 0 with x_t in Q_t^perp) with
 * the explicit midpoint rule, projecting onto the fibre and restoring the
 * norm after every step. The step is halved until two successive step sizes
 * agree to `tol`; throws std::runtime_error if that never happens.
 */
TransportResult parallel_transport_normal(const std::function<OrientedSubspace(double)>& curve,
                                          const Eigen::VectorXd& x0, double t_end,
                                          const TransportOptions& opt = {});

/// Index shift R^7 = Im O -> e0^perp in R^8.
Eigen::VectorXd embed_imaginary(const Eigen::VectorXd& v7);

/// phi(u ^ v) = e0 ^ u ^ v, G(2,7) -> G(3,8).
OrientedSubspace embed_phi(const OrientedSubspace& p);

/// Phi(u ^ v, x) = (e0 ^ u ^ v, x).
NormalElement bundle_morphism_phi(const NormalElement& e);

}  // namespace octograss
