#include "octograss/grassmann.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>
#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

namespace octograss {

OrientedSubspace::OrientedSubspace(Eigen::MatrixXd frame, double tol) : frame_(std::move(frame)) {
  if (frame_.cols() < 1 || frame_.cols() >= frame_.rows()) {
    throw std::invalid_argument("OrientedSubspace: need 1 <= k < n");
  }
  if (orthonormality_residual() > tol) {
    throw std::invalid_argument("OrientedSubspace: frame columns are not orthonormal (residual " +
                                std::to_string(orthonormality_residual()) + ")");
  }
}

OrientedSubspace OrientedSubspace::canonical(int k, int n) {
  return OrientedSubspace(Eigen::MatrixXd::Identity(n, k));
}

double OrientedSubspace::orthonormality_residual() const {
  const auto k = frame_.cols();
  return (frame_.transpose() * frame_ - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff();
}

bool OrientedSubspace::same_point(const OrientedSubspace& other, double tol) const {
  if (other.n() != n() || other.k() != k()) return false;
  const Eigen::MatrixXd diff =
      frame_ * frame_.transpose() - other.frame_ * other.frame_.transpose();
  if (diff.norm() >= tol) return false;
  return (frame_.transpose() * other.frame_).determinant() > 0.0;
}

bool OrientedSubspace::is_canonical(double tol) const {
  return (frame_ - Eigen::MatrixXd::Identity(n(), k())).cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXd projector(const OrientedSubspace& p) {
  return Eigen::MatrixXd::Identity(p.n(), p.n()) - p.frame() * p.frame().transpose();
}

Eigen::MatrixXd skew_basis(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("skew_basis index out of range");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  a(i, j) += 1.0;
  a(j, i) -= 1.0;
  return a;
}

double tangent_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return 0.5 * (a.transpose() * b).trace();
}

TangentVector::TangentVector(OrientedSubspace base, Eigen::MatrixXd mat, double tol)
    : base_(std::move(base)), mat_(std::move(mat)) {
  if (mat_.rows() != base_.n() || mat_.cols() != base_.n()) {
    throw std::invalid_argument("TangentVector: matrix size does not match ambient dimension");
  }
  const double scale = std::max(1.0, mat_.norm());
  if ((mat_ + mat_.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("TangentVector: matrix is not skew");
  }
  const Eigen::MatrixXd& f = base_.frame();
  if ((f.transpose() * mat_ * f).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("TangentVector: matrix does not map P into P^perp");
  }
  const Eigen::MatrixXd pi = projector(base_);
  if ((pi * mat_ * pi).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("TangentVector: matrix does not map P^perp into P");
  }
}

namespace {

void check_indices(int k, int n, int l, int j) {
  if (k < 1 || k >= n || l < 0 || l >= k || j < k || j >= n) {
    throw std::out_of_range("tangent index out of range: l=" + std::to_string(l) +
                            " j=" + std::to_string(j) + " for G(" + std::to_string(k) + "," +
                            std::to_string(n) + ")");
  }
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

TangentVector basis_tangent(const OrientedSubspace& base, int l, int j) {
  if (!base.is_canonical()) {
    throw std::invalid_argument("basis_tangent: base must be the canonical point");
  }
  check_indices(base.k(), base.n(), l, j);
  return TangentVector(base, skew_basis(base.n(), j, l));
}

OrientedSubspace geodesic(int k, int n, int l, int j, double t) {
  check_indices(k, n, l, j);
  Eigen::MatrixXd f = Eigen::MatrixXd::Identity(n, k);
  f(l, l) = std::cos(t);
  f(j, l) = std::sin(t);
  return OrientedSubspace(std::move(f));
}

Eigen::MatrixXd rotation(const Eigen::MatrixXd& z, double t) {
  const auto n = z.rows();
  // A rank-2 skew matrix with eigenvalues +-i theta satisfies Z^3 = -theta^2 Z.
  const double theta = z.norm() / std::sqrt(2.0);
  const Eigen::MatrixXd z2 = z * z;
  if (theta == 0.0) return Eigen::MatrixXd::Identity(n, n);
  if ((z2 * z + theta * theta * z).cwiseAbs().maxCoeff() <= 1e-13 * std::max(1.0, theta * theta * theta)) {
    const double a = theta * t;
    return Eigen::MatrixXd::Identity(n, n) + (std::sin(a) / theta) * z +
           ((1.0 - std::cos(a)) / (theta * theta)) * z2;
  }
  const Eigen::MatrixXd tz = t * z;
  return tz.exp();
}

OrientedSubspace exp_action(const TangentVector& z, double t, const OrientedSubspace& p) {
  Eigen::MatrixXd f = rotation(z.mat(), t) * p.frame();
  // Absorb round-off without moving the point: Q of a QR with positive R diagonal.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(f);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(f.rows(), f.cols());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(f.cols()).triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    if (r(c, c) < 0.0) q.col(c) *= -1.0;
  }
  return OrientedSubspace(std::move(q));
}

TangentFrame::TangentFrame(OrientedSubspace point) : point_(std::move(point)) {
  const int n = point_.n();
  const int k = point_.k();
  g_ = Eigen::MatrixXd::Zero(n, n);
  g_.leftCols(k) = point_.frame();
  int filled = k;
  for (int e = 0; e < n && filled < n; ++e) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, e);
    for (int pass = 0; pass < 2; ++pass) {
      v -= g_.leftCols(filled) * (g_.leftCols(filled).transpose() * v);
    }
    const double norm = v.norm();
    if (norm < 1e-3) continue;
    g_.col(filled++) = v / norm;
  }
  if (filled != n) throw std::runtime_error("TangentFrame: frame completion failed");
  if (g_.determinant() < 0.0) g_.col(n - 1) *= -1.0;
}

TangentVector TangentFrame::direction(int l, int j) const {
  l = mod(l, k());
  check_indices(k(), n(), l, j);
  return TangentVector(point_, g_ * skew_basis(n(), j, l) * g_.transpose());
}

std::pair<int, int> TangentFrame::indices(int a) const {
  if (a < 0 || a >= dimension()) throw std::out_of_range("tangent basis index out of range");
  const int codim = n() - k();
  return {a / codim, k() + a % codim};
}

TangentVector TangentFrame::direction(int a) const {
  const auto [l, j] = indices(a);
  return direction(l, j);
}

GeodesicSurface::GeodesicSurface(TangentVector outer, TangentVector inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.base().same_point(inner_.base(), 1e-12) ||
      (outer_.base().frame() - inner_.base().frame()).norm() > 1e-12) {
    throw std::invalid_argument("GeodesicSurface: directions must share a base frame");
  }
}

Eigen::MatrixXd GeodesicSurface::frame_at(double t, double s) const {
  return rotation(outer_.mat(), t) * (rotation(inner_.mat(), s) * base().frame());
}

OrientedSubspace GeodesicSurface::at(double t, double s) const {
  return OrientedSubspace(frame_at(t, s));
}

GeodesicSurface surface(const TangentFrame& frame, int i, int k, int j, int l) {
  return GeodesicSurface(frame.direction(k, i), frame.direction(l, j));
}

GeodesicSurface surface(int k_dim, int n, int i, int k, int j, int l) {
  return surface(TangentFrame(OrientedSubspace::canonical(k_dim, n)), i, k, j, l);
}

OrientedSubspace random_point(int n, int k, std::mt19937_64& rng) {
  if (k < 1 || k >= n) throw std::invalid_argument("random_point: need 1 <= k < n");
  std::normal_distribution<double> gauss;
  for (;;) {
    Eigen::MatrixXd a(n, k);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < n; ++r) a(r, c) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd r = qr.matrixQR().topRows(k);
    bool degenerate = false;
    for (int c = 0; c < k; ++c) degenerate = degenerate || std::abs(r(c, c)) < 1e-10;
    if (degenerate) continue;
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
    for (int c = 0; c < k; ++c) {
      if (r(c, c) < 0.0) q.col(c) *= -1.0;
    }
    // One Gram-Schmidt sweep brings F^T F - I down to a few ulps.
    for (int c = 0; c < k; ++c) {
      for (int d = 0; d < c; ++d) q.col(c) -= q.col(d).dot(q.col(c)) * q.col(d);
      q.col(c).normalize();
    }
    return OrientedSubspace(std::move(q));
  }
}

OrientedSubspace random_point(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point(n, k, rng);
}

Eigen::MatrixXd random_rotation(int k, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd a(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r) a(r, c) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int c = 0; c < k; ++c) {
    if (r(c, c) < 0.0) q.col(c) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

}  // namespace octograss
