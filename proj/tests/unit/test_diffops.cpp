#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "octograss/diffops.hpp"
#include "octograss/octonion.hpp"

using namespace octograss;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

DiffOptions with(DiffMethod m) {
  DiffOptions o;
  o.method = m;
  return o;
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Richardson, DifferentiatesSmoothFunctions) {
  EXPECT_NEAR(derivative_scalar([](double x) { return std::sin(x); }, 0.7), std::cos(0.7), 1e-10);
  const VectorXd d = derivative([](double x) { return VectorXd::Constant(2, x * x * x); }, 2.0);
  EXPECT_NEAR(d(0), 12.0, 1e-9);
}

TEST(Richardson, RejectsAJump) {
  auto step = [](double x) { return x > 1e-4 ? 1.0 : -1.0; };
  EXPECT_THROW(derivative_scalar(step, 0.0), DifferentiationError);
}

TEST(Orientation, CompletesToThePositiveFrame) {
  EXPECT_EQ(complete_orientation(0, 1).m, 2);
  EXPECT_EQ(complete_orientation(0, 1).sign, 1);
  EXPECT_EQ(complete_orientation(1, 0).sign, -1);
  EXPECT_EQ(complete_orientation(2, 0).sign, 1);
  EXPECT_EQ(complete_orientation(0, 2).m, 1);
  EXPECT_THROW(complete_orientation(1, 1), std::invalid_argument);
}

TEST(Nabla, ClosedFormAgreesWithBothNumericalPaths) {
  std::mt19937_64 rng(31);
  for (const char* name : {"sigma2", "sigma3", "J", "acs6"}) {
    const Section s = section_by_name(name);
    const TangentFrame frame(random_point(s.n(), s.k(), rng));
    for (int a = 0; a < frame.dimension(); a += 3) {
      const MatrixXd c = nabla(s, frame.direction(a), with(DiffMethod::ClosedForm));
      EXPECT_LT(max_abs(c - nabla(s, frame.direction(a), with(DiffMethod::Jet))), 1e-7) << name;
      EXPECT_LT(max_abs(c - nabla(s, frame.direction(a), with(DiffMethod::Nested))), 1e-7) << name;
    }
  }
}

TEST(SecondNabla, ClosedFormAgreesWithBothNumericalPaths) {
  std::mt19937_64 rng(32);
  for (const char* name : {"sigma2", "sigma3", "J"}) {
    const Section s = section_by_name(name);
    const TangentFrame frame(random_point(s.n(), s.k(), rng));
    std::uniform_int_distribution<int> pick(0, frame.dimension() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const GeodesicSurface surf(frame.direction(pick(rng)), frame.direction(pick(rng)));
      const MatrixXd c = second_nabla(s, surf, with(DiffMethod::ClosedForm));
      EXPECT_LT(max_abs(c - second_nabla(s, surf, with(DiffMethod::Jet))), 1e-6) << name;
      EXPECT_LT(max_abs(c - second_nabla(s, surf, with(DiffMethod::Nested))), 1e-6) << name;
      EXPECT_NO_THROW(second_nabla(s, surf, with(DiffMethod::CrossChecked)));
    }
  }
}

TEST(Nabla, IsOrthogonalToTheUnitSection) {
  std::mt19937_64 rng(33);
  for (const char* name : {"sigma2", "sigma3", "J"}) {
    const Section s = section_by_name(name);
    const TangentFrame frame(random_point(s.n(), s.k(), rng));
    const MatrixXd v = s.value(frame.point());
    for (int a = 0; a < frame.dimension(); ++a) {
      const MatrixXd d = nabla(s, frame.direction(a));
      EXPECT_NEAR(fiber_inner(s.kind(), d, v), 0.0, 1e-12) << name;
      EXPECT_LT(fiber_constraint_residual(s.kind(), frame.point(), d), 1e-12) << name;
    }
  }
}

TEST(Nabla, Sigma3FirstDerivativeAtTheBase) {
  // e_4^0: X(e4, e1, e2) = -e7 (hand computed in the octonion tests).
  const OrientedSubspace p0 = OrientedSubspace::canonical(3, 8);
  const MatrixXd d = nabla(make_sigma3(), basis_tangent(p0, 0, 4));
  EXPECT_LT((d - (-VectorXd::Unit(8, 7))).norm(), 1e-15);
  // Moving e_l towards e_3 does not change sigma3 to first order.
  EXPECT_LT(nabla(make_sigma3(), basis_tangent(p0, 2, 3)).norm(), 1e-15);
}

TEST(Laplacian, EigenvaluesOfTheInvariantSections) {
  const std::pair<const char*, double> cases[] = {{"sigma3", -12.0}, {"sigma2", -8.0}, {"J", -8.0}};
  for (const auto& [name, f] : cases) {
    const Section s = section_by_name(name);
    for (std::uint64_t seed : {1u, 2u}) {
      const LaplacianResult lap = rough_laplacian(s, random_point(s.n(), s.k(), seed));
      EXPECT_NEAR(lap.eigen_estimate, f, 1e-10) << name;
      EXPECT_LT(lap.residual, 1e-10) << name;
    }
  }
}

TEST(Laplacian, NonMultilinearSectionsFallBackToNumerics) {
  const Section base = make_sigma3();
  const Section scaled("scaled", 3, 8, FiberKind::Normal,
                       [base](std::span<const VectorXd> c) { return base.value(c); }, false);
  const OrientedSubspace p = random_point(8, 3, 4u);
  EXPECT_NEAR(rough_laplacian(scaled, p).eigen_estimate, -12.0, 1e-6);
}

TEST(Curvature, IsAntisymmetricInItsDirections) {
  const Section s = make_J();
  const TangentFrame frame(random_point(8, 2, 5u));
  const MatrixXd rxy = curvature(s, frame.direction(1), frame.direction(8));
  const MatrixXd ryx = curvature(s, frame.direction(8), frame.direction(1));
  EXPECT_LT(max_abs(rxy + ryx), 1e-12);
  EXPECT_LT(max_abs(curvature(s, frame.direction(3), frame.direction(3))), 1e-12);
}

TEST(Curvature, Sigma3AtTheBase) {
  const TangentFrame frame(OrientedSubspace::canonical(3, 8));
  // k = l, i = 3: R = e_j.
  EXPECT_LT((curvature(make_sigma3(), frame, 3, 1, 5, 1) - VectorXd::Unit(8, 5)).norm(), 1e-14);
  EXPECT_LT(curvature(make_sigma3(), frame, 3, 0, 5, 1).norm(), 1e-14);
}

TEST(Criticality, VanishesForTheInvariantSections) {
  for (const char* name : {"sigma2", "sigma3", "J"}) {
    const Section s = section_by_name(name);
    const TangentFrame frame(random_point(s.n(), s.k(), 6u));
    for (int a = 0; a < frame.dimension(); ++a) {
      EXPECT_NEAR(criticality_form(s, frame.direction(a)), 0.0, 1e-10) << name;
    }
  }
}
