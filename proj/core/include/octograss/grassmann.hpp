#pragma once

/**
 * @file grassmann.hpp
 * @brief Points, tangent vectors and geodesics of the oriented Grassmannian G(k,n).
 *
 * A point is stored as an n x k matrix with orthonormal columns; the column
 * order fixes the orientation. Tangent vectors live in the Cartan complement
 * m of o(n) and are stored as n x n skew matrices, with the inner product
 * <A,B> = trace(A^T B) / 2 that makes the canonical basis
 *
 *     e_j^l = e_j (x) e^l - e_l (x) e^j,   0 <= l < k <= j < n
 *
 * orthonormal. Geodesics through P are t -> exp(tZ) P for Z in m_P.
 */

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace octograss {

class OrientedSubspace {
 public:
  /// Validates frame^T frame = I to `tol`; throws std::invalid_argument.
  explicit OrientedSubspace(Eigen::MatrixXd frame, double tol = 1e-10);

  /// e_0 ^ ... ^ e_{k-1} in R^n.
  static OrientedSubspace canonical(int k, int n);

  int n() const { return static_cast<int>(frame_.rows()); }
  int k() const { return static_cast<int>(frame_.cols()); }
  const Eigen::MatrixXd& frame() const { return frame_; }
  Eigen::VectorXd column(int c) const { return frame_.col(c); }

  /// Same oriented subspace: equal projectors and det(F^T G) > 0.
  bool same_point(const OrientedSubspace& other, double tol = 1e-9) const;

  bool is_canonical(double tol = 1e-12) const;

  /// Largest entry of |F^T F - I|.
  double orthonormality_residual() const;

 private:
  Eigen::MatrixXd frame_;
};

/// Orthogonal projection of R^n onto P^perp: I - F F^T.
Eigen::MatrixXd projector(const OrientedSubspace& p);

/// A^{i,j} = e_i (x) e^j - e_j (x) e^i in R^{n x n}.
Eigen::MatrixXd skew_basis(int n, int i, int j);

/// <A,B> = trace(A^T B) / 2.
double tangent_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

class TangentVector {
 public:
  /// Validates skewness and that mat maps P into P^perp; throws std::invalid_argument.
  TangentVector(OrientedSubspace base, Eigen::MatrixXd mat, double tol = 1e-9);

  const OrientedSubspace& base() const { return base_; }
  const Eigen::MatrixXd& mat() const { return mat_; }

  /// Velocity of the curve t -> exp(tZ)P at t = 0 (an n x k matrix).
  Eigen::MatrixXd frame_velocity() const { return mat_ * base_.frame(); }

 private:
  OrientedSubspace base_;
  Eigen::MatrixXd mat_;
};

/// e_j^l at the canonical base point. Requires `base.is_canonical()`.
TangentVector basis_tangent(const OrientedSubspace& base, int l, int j);

/// gamma_j^l(t): the canonical frame with column l replaced by cos t e_l + sin t e_j.
OrientedSubspace geodesic(int k, int n, int l, int j, double t);

/// exp(tZ) for skew Z. Uses the Rodrigues form when Z^3 = -Z, Pade otherwise.
Eigen::MatrixXd rotation(const Eigen::MatrixXd& z, double t);

/// exp(tZ) applied to every column of P's frame.
OrientedSubspace exp_action(const TangentVector& z, double t, const OrientedSubspace& p);

/**
 * Orthonormal tangent basis at an arbitrary point P.
 *
 * An isometry g in SO(n) whose first k columns are P's frame is built by
 * Gram-Schmidt completion; the basis is g e_j^l g^T. At the canonical base
 * point g is the identity and the basis is exactly {e_j^l}.
 */
class TangentFrame {
 public:
  explicit TangentFrame(OrientedSubspace point);

  const OrientedSubspace& point() const { return point_; }
  const Eigen::MatrixXd& isometry() const { return g_; }
  int k() const { return point_.k(); }
  int n() const { return point_.n(); }
  int dimension() const { return k() * (n() - k()); }

  /// g e_j^l g^T; l is taken mod k, 0 <= l < k <= j < n after reduction.
  TangentVector direction(int l, int j) const;

  /// Flat index a = l * (n - k) + (j - k).
  TangentVector direction(int a) const;
  std::pair<int, int> indices(int a) const;

 private:
  OrientedSubspace point_;
  Eigen::MatrixXd g_;
};

/// P_{t,s} = exp(t X) exp(s Y) P.
class GeodesicSurface {
 public:
  GeodesicSurface(TangentVector outer, TangentVector inner);

  const OrientedSubspace& base() const { return outer_.base(); }
  const TangentVector& outer() const { return outer_; }
  const TangentVector& inner() const { return inner_; }

  Eigen::MatrixXd frame_at(double t, double s) const;
  OrientedSubspace at(double t, double s) const;

 private:
  TangentVector outer_;
  TangentVector inner_;
};

/// exp(t e_i^k) gamma_j^l(s) on the tangent frame at P.
GeodesicSurface surface(const TangentFrame& frame, int i, int k, int j, int l);

/// Canonical-base-point variant.
GeodesicSurface surface(int k_dim, int n, int i, int k, int j, int l);

/// Orthonormalised Gaussian n x k frame (invariant measure on G(k,n)).
OrientedSubspace random_point(int n, int k, std::mt19937_64& rng);
OrientedSubspace random_point(int n, int k, std::uint64_t seed);

/// Uniformly distributed R in SO(k).
Eigen::MatrixXd random_rotation(int k, std::mt19937_64& rng);

}  // namespace octograss
