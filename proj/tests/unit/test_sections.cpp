#include <random>

#include <gtest/gtest.h>

#include "octograss/octonion.hpp"
#include "octograss/sections.hpp"

using namespace octograss;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

/// The same oriented subspace with its frame rotated by a random element of SO(k).
OrientedSubspace reframe(const OrientedSubspace& p, std::mt19937_64& rng) {
  return OrientedSubspace(p.frame() * random_rotation(p.k(), rng));
}

}  // namespace

TEST(Sections, AreUnitFibreElementsAtRandomPoints) {
  std::mt19937_64 rng(17);
  for (const char* name : {"sigma2", "sigma3", "J", "hopf", "hopf:3", "acs6"}) {
    const Section s = section_by_name(name);
    for (int i = 0; i < 20; ++i) {
      const OrientedSubspace p = random_point(s.n(), s.k(), rng);
      const MatrixXd v = s.value(p);
      EXPECT_NEAR(fiber_norm(s.kind(), v), 1.0, 1e-12) << name;
      EXPECT_LT(fiber_constraint_residual(s.kind(), p, v), 1e-12) << name;
    }
  }
}

TEST(Sections, DependOnlyOnTheOrientedSubspace) {
  std::mt19937_64 rng(18);
  for (const char* name : {"sigma2", "sigma3", "J"}) {
    const Section s = section_by_name(name);
    for (int i = 0; i < 10; ++i) {
      const OrientedSubspace p = random_point(s.n(), s.k(), rng);
      EXPECT_LT((s.value(p) - s.value(reframe(p, rng))).cwiseAbs().maxCoeff(), 1e-12) << name;
    }
  }
}

TEST(Sections, ReversingOrientationFlipsTheValue) {
  const OrientedSubspace p = random_point(8, 3, 3u);
  MatrixXd f = p.frame();
  f.col(0).swap(f.col(1));
  EXPECT_LT((sigma3(p).vec() + sigma3(OrientedSubspace(f)).vec()).norm(), 1e-12);
}

TEST(Sigma2, HandComputedValue) {
  // e1 ^ e4 in Im O is columns 0 and 3 of R^7; e1 e4 = e5 is column 4.
  MatrixXd f = MatrixXd::Zero(7, 2);
  f(0, 0) = 1.0;
  f(3, 1) = 1.0;
  EXPECT_LT((sigma2(OrientedSubspace(f)).vec() - VectorXd::Unit(7, 4)).norm(), 1e-15);
}

TEST(Sigma3, BasePointValue) {
  EXPECT_LT((sigma3(OrientedSubspace::canonical(3, 8)).vec() - VectorXd::Unit(8, 3)).norm(), 1e-15);
}

TEST(SectionJ, IsAnOrthogonalComplexStructureOnTheComplement) {
  const OrientedSubspace p = random_point(8, 2, 21u);
  const MatrixXd j = sectionJ(p).op();
  const MatrixXd pi = projector(p);
  EXPECT_LT((j * j + pi).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((j + j.transpose()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SectionJ, BasePointIsTheTripleOperator) {
  const MatrixXd j = sectionJ(OrientedSubspace::canonical(2, 8)).op();
  // J(e2) = X(e0, e1, e2) = e1 e2 = e3.
  EXPECT_LT((j.col(2) - VectorXd::Unit(8, 3)).norm(), 1e-15);
  EXPECT_LT(j.leftCols(2).norm(), 1e-15);
}

TEST(Hopf, IsTheStandardComplexStructureApplied) {
  VectorXd p = VectorXd::Zero(4);
  p(0) = 1.0;
  EXPECT_LT((hopf(p).vec() - VectorXd::Unit(4, 1)).norm(), 1e-15);
  EXPECT_THROW(hopf(VectorXd::Unit(3, 0)), std::invalid_argument);
}

TEST(Acs6, SquaresToMinusIdentityOnTheTangentSpace) {
  VectorXd u = VectorXd::LinSpaced(7, 1.0, 7.0).normalized();
  const MatrixXd j = acs6(u).op();
  const MatrixXd pi = MatrixXd::Identity(7, 7) - u * u.transpose();
  EXPECT_LT((j * j + pi).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Sections, LookupByName) {
  EXPECT_EQ(section_by_name("hopf:4").n(), 8);
  EXPECT_EQ(section_by_name("J").kind(), FiberKind::Skew);
  EXPECT_THROW(section_by_name("sigma9"), std::invalid_argument);
  EXPECT_THROW(sigma3(OrientedSubspace::canonical(2, 8)), std::invalid_argument);
}
