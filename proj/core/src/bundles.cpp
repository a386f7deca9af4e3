#include "octograss/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace octograss {

const char* to_string(FiberKind kind) {
  return kind == FiberKind::Normal ? "normal" : "skew";
}

double skew_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.transpose() * b).trace() / 6.0;
}

double fiber_inner(FiberKind kind, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return kind == FiberKind::Normal ? (a.array() * b.array()).sum() : skew_inner(a, b);
}

double fiber_norm(FiberKind kind, const Eigen::MatrixXd& a) {
  return std::sqrt(std::max(0.0, fiber_inner(kind, a, a)));
}

Eigen::MatrixXd fiber_project(FiberKind kind, const Eigen::MatrixXd& pi,
                              const Eigen::MatrixXd& value) {
  if (kind == FiberKind::Normal) return pi * value;
  return pi * value * pi;
}

double fiber_constraint_residual(FiberKind kind, const OrientedSubspace& p,
                                 const Eigen::MatrixXd& value) {
  if (kind == FiberKind::Normal) return (p.frame().transpose() * value).cwiseAbs().maxCoeff();
  return (value * p.frame()).cwiseAbs().maxCoeff();
}

NormalElement::NormalElement(OrientedSubspace base, Eigen::VectorXd vec, double tol)
    : base_(std::move(base)), vec_(std::move(vec)) {
  if (vec_.size() != base_.n()) throw std::invalid_argument("NormalElement: dimension mismatch");
  if (fiber_constraint_residual(FiberKind::Normal, base_, vec_) > tol) {
    throw std::invalid_argument("NormalElement: vector is not orthogonal to the base subspace");
  }
}

bool NormalElement::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

SkewElement::SkewElement(OrientedSubspace base, Eigen::MatrixXd op, double tol)
    : base_(std::move(base)), op_(std::move(op)) {
  if (op_.rows() != base_.n() || op_.cols() != base_.n()) {
    throw std::invalid_argument("SkewElement: dimension mismatch");
  }
  if ((op_ + op_.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("SkewElement: operator is not skew");
  }
  if (fiber_constraint_residual(FiberKind::Skew, base_, op_) > tol) {
    throw std::invalid_argument("SkewElement: operator does not vanish on the base plane");
  }
}

double SkewElement::norm() const { return fiber_norm(FiberKind::Skew, op_); }

bool SkewElement::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

NormalElement fiber_project_normal(const OrientedSubspace& p, const Eigen::VectorXd& x) {
  return NormalElement(p, projector(p) * x);
}

SkewElement fiber_project_skew(const OrientedSubspace& p, const Eigen::MatrixXd& t) {
  if (t.rows() != p.n() || t.cols() != p.n()) {
    throw std::invalid_argument("fiber_project_skew: dimension mismatch");
  }
  if ((t + t.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, t.norm())) {
    throw std::invalid_argument("fiber_project_skew: operator is not skew");
  }
  const Eigen::MatrixXd pi = projector(p);
  return SkewElement(p, pi * t * pi);
}

namespace {

template <class Value>
Value ambient_velocity(const FiberPath<Value>& path, double t, const DerivativeOptions& opt) {
  if (path.velocity) return path.velocity(t);
  return derivative([&](double s) -> Value { return path.value(s); }, t, opt);
}

}  // namespace

NormalElement covariant_derivative_normal(const NormalPath& path, double t,
                                          const DerivativeOptions& opt) {
  const OrientedSubspace q = path.base(t);
  return NormalElement(q, projector(q) * ambient_velocity(path, t, opt), 1e-9);
}

SkewElement covariant_derivative_skew(const SkewPath& path, double t,
                                      const DerivativeOptions& opt) {
  const OrientedSubspace q = path.base(t);
  const Eigen::MatrixXd pi = projector(q);
  Eigen::MatrixXd d = pi * ambient_velocity(path, t, opt) * pi;
  d = 0.5 * (d - d.transpose()).eval();
  return SkewElement(q, std::move(d), 1e-9);
}

namespace {

struct Integration {
  Eigen::VectorXd x;
  double drift = 0.0;
};

Integration integrate_midpoint(const std::function<OrientedSubspace(double)>& curve,
                               const Eigen::VectorXd& x0, double t_end, long steps) {
  const double h = t_end / static_cast<double>(steps);
  const double target = x0.norm();
  auto pi_at = [&](double t) { return projector(curve(t)); };
  auto pi_dot = [&](double t) {
    return derivative([&](double s) { return pi_at(s); }, t, DerivativeOptions{1e-3, 1e-6});
  };
  Integration out{x0, 0.0};
  Eigen::VectorXd& x = out.x;
  for (long i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    const Eigen::VectorXd mid = x + 0.5 * h * (pi_dot(t) * x);
    x += h * (pi_dot(t + 0.5 * h) * mid);
    x = pi_at(t + h) * x;
    const double norm = x.norm();
    out.drift = std::max(out.drift, std::abs(norm - target));
    if (norm > 0.0) x *= target / norm;
  }
  return out;
}

}  // namespace

TransportResult parallel_transport_normal(const std::function<OrientedSubspace(double)>& curve,
                                          const Eigen::VectorXd& x0, double t_end,
                                          const TransportOptions& opt) {
  const OrientedSubspace start = curve(0.0);
  if (fiber_constraint_residual(FiberKind::Normal, start, x0) > 1e-10) {
    throw std::invalid_argument("parallel_transport_normal: x0 is not normal to curve(0)");
  }
  if (t_end == 0.0) return {NormalElement(start, x0), 0.0, 0.0, 0.0};

  auto steps_for = [&](double h) {
    return std::max<long>(1, static_cast<long>(std::ceil(std::abs(t_end) / h)));
  };
  double h = opt.step;
  if (!opt.adaptive) {
    Integration once = integrate_midpoint(curve, x0, t_end, steps_for(h));
    return {NormalElement(curve(t_end), once.x, 1e-9), std::abs(t_end) / static_cast<double>(steps_for(h)),
            0.0, once.drift};
  }
  Integration coarse = integrate_midpoint(curve, x0, t_end, steps_for(h));
  for (int halving = 0; halving <= opt.max_halvings; ++halving) {
    const long fine_steps = 2 * steps_for(h);
    Integration fine = integrate_midpoint(curve, x0, t_end, fine_steps);
    const double gap = (fine.x - coarse.x).norm();
    if (gap <= opt.tol) {
      const double accepted = std::abs(t_end) / static_cast<double>(fine_steps);
      return {NormalElement(curve(t_end), fine.x, 1e-9), accepted, gap,
              std::max(coarse.drift, fine.drift)};
    }
    coarse = std::move(fine);
    h = std::abs(t_end) / static_cast<double>(fine_steps);
  }
  throw std::runtime_error("parallel_transport_normal: step halving did not reach tolerance");
}

Eigen::VectorXd embed_imaginary(const Eigen::VectorXd& v7) {
  if (v7.size() != 7) throw std::invalid_argument("embed_imaginary: need a 7-vector");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(8);
  v.tail(7) = v7;
  return v;
}

OrientedSubspace embed_phi(const OrientedSubspace& p) {
  if (p.n() != 7 || p.k() != 2) throw std::invalid_argument("embed_phi: expects a point of G(2,7)");
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(8, 3);
  f(0, 0) = 1.0;
  f.block(1, 1, 7, 2) = p.frame();
  return OrientedSubspace(std::move(f));
}

NormalElement bundle_morphism_phi(const NormalElement& e) {
  return NormalElement(embed_phi(e.base()), embed_imaginary(e.vec()));
}

}  // namespace octograss
