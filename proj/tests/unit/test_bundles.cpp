#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "octograss/bundles.hpp"
#include "octograss/numdiff.hpp"

using namespace octograss;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST(Fibers, ProjectionsAreIdempotentAndLandInTheFibre) {
  const OrientedSubspace p = random_point(8, 2, 4u);
  VectorXd x = VectorXd::LinSpaced(8, -1.0, 2.0);
  const NormalElement nx = fiber_project_normal(p, x);
  EXPECT_LT(fiber_constraint_residual(FiberKind::Normal, p, nx.vec()), 1e-14);
  EXPECT_LT((fiber_project_normal(p, nx.vec()).vec() - nx.vec()).norm(), 1e-14);

  MatrixXd a = MatrixXd::Random(8, 8);
  a = (a - a.transpose()).eval();
  const SkewElement st = fiber_project_skew(p, a);
  EXPECT_LT(fiber_constraint_residual(FiberKind::Skew, p, st.op()), 1e-14);
  EXPECT_THROW(fiber_project_skew(p, MatrixXd::Identity(8, 8)), std::invalid_argument);
}

TEST(Fibers, SkewNormUsesTraceOverSix) {
  // J_{e0^e1}-like structure on a 6-dimensional complement has trace(T^T T) = 6.
  MatrixXd t = MatrixXd::Zero(8, 8);
  for (int i = 2; i < 8; i += 2) {
    t(i + 1, i) = 1.0;
    t(i, i + 1) = -1.0;
  }
  const SkewElement s(OrientedSubspace::canonical(2, 8), t);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_TRUE(s.is_unit());
}

TEST(Fibers, ElementsValidateTheirConstraints) {
  const OrientedSubspace p0 = OrientedSubspace::canonical(2, 5);
  EXPECT_THROW(NormalElement(p0, VectorXd::Unit(5, 0)), std::invalid_argument);
  EXPECT_NO_THROW(NormalElement(p0, VectorXd::Unit(5, 3)));
  EXPECT_THROW(SkewElement(p0, skew_basis(5, 0, 3)), std::invalid_argument);
}

TEST(Connection, NormalBundleIsMetric) {
  // d/dt <x, y> = <Dx, y> + <x, Dy> for normal fields along a geodesic.
  auto base = [](double t) { return geodesic(2, 6, 0, 3, t); };
  auto field = [&](double t, const VectorXd& w) { return VectorXd(projector(base(t)) * w); };
  const VectorXd wx = VectorXd::LinSpaced(6, 1.0, 2.0);
  const VectorXd wy = VectorXd::LinSpaced(6, -1.0, 0.5);
  const NormalPath px{base, [&](double t) { return field(t, wx); }};
  const NormalPath py{base, [&](double t) { return field(t, wy); }};
  const double t0 = 0.4;
  const double lhs = derivative_scalar([&](double t) { return field(t, wx).dot(field(t, wy)); }, t0);
  const double rhs = covariant_derivative_normal(px, t0).vec().dot(field(t0, wy)) +
                     field(t0, wx).dot(covariant_derivative_normal(py, t0).vec());
  EXPECT_NEAR(lhs, rhs, 1e-8);
}

TEST(Connection, SkewBundleIsMetric) {
  auto base = [](double t) { return geodesic(2, 6, 1, 4, t); };
  MatrixXd a = MatrixXd::Random(6, 6);
  a = (a - a.transpose()).eval();
  MatrixXd b = MatrixXd::Random(6, 6);
  b = (b - b.transpose()).eval();
  auto field = [&](double t, const MatrixXd& w) {
    const MatrixXd pi = projector(base(t));
    return MatrixXd(pi * w * pi);
  };
  const SkewPath pa{base, [&](double t) { return field(t, a); }};
  const SkewPath pb{base, [&](double t) { return field(t, b); }};
  const double t0 = -0.3;
  const double lhs = derivative_scalar([&](double t) { return skew_inner(field(t, a), field(t, b)); }, t0);
  const double rhs = skew_inner(covariant_derivative_skew(pa, t0).op(), field(t0, b)) +
                     skew_inner(field(t0, a), covariant_derivative_skew(pb, t0).op());
  EXPECT_NEAR(lhs, rhs, 1e-8);
}

TEST(ParallelTransport, AlongAGreatCircleOfTheSphere) {
  // G(1,3): transporting a normal vector orthogonal to the plane of motion keeps it fixed.
  auto curve = [](double t) {
    Eigen::MatrixXd f(3, 1);
    f << std::cos(t), std::sin(t), 0.0;
    return OrientedSubspace(f);
  };
  const TransportResult r = parallel_transport_normal(curve, VectorXd::Unit(3, 2), 1.2);
  EXPECT_LT((r.value.vec() - VectorXd::Unit(3, 2)).norm(), 1e-9);
  // The in-plane normal rotates with the curve.
  const TransportResult s = parallel_transport_normal(curve, VectorXd::Unit(3, 1), 1.2);
  VectorXd want(3);
  want << -std::sin(1.2), std::cos(1.2), 0.0;
  EXPECT_LT((s.value.vec() - want).norm(), 1e-8);
  EXPECT_LT(s.gap, 1e-9);
}

TEST(ParallelTransport, RejectsNonNormalStart) {
  auto curve = [](double t) { return geodesic(1, 3, 0, 1, t); };
  EXPECT_THROW(parallel_transport_normal(curve, VectorXd::Unit(3, 0), 1.0), std::invalid_argument);
}

TEST(Morphism, EmbedsG27IntoG38) {
  const OrientedSubspace p = random_point(7, 2, 8u);
  const OrientedSubspace q = embed_phi(p);
  EXPECT_EQ(q.k(), 3);
  EXPECT_EQ(q.n(), 8);
  EXPECT_DOUBLE_EQ(q.frame()(0, 0), 1.0);
  const VectorXd x = projector(p) * VectorXd::LinSpaced(7, 0.0, 1.0);
  const NormalElement e = bundle_morphism_phi(NormalElement(p, x));
  EXPECT_LT((e.vec().tail(7) - x).norm(), 1e-15);
  EXPECT_EQ(e.vec()(0), 0.0);
  EXPECT_THROW(embed_phi(OrientedSubspace::canonical(3, 7)), std::invalid_argument);
}
