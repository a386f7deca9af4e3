#include <random>

#include <gtest/gtest.h>

#include "octograss/octonion.hpp"

using namespace octograss;

namespace {

Octonion random_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(8);
  for (int i = 0; i < 8; ++i) v(i) = g(rng);
  return Octonion::from_vector(v);
}

double distance(const Octonion& a, const Octonion& b) {
  return (a.to_vector() - b.to_vector()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Epsilon, PositiveTriplesAndAntisymmetry) {
  const auto& eps = epsilon_table();
  EXPECT_EQ(eps(1, 2, 3), 1);
  EXPECT_EQ(eps(1, 7, 6), 1);
  EXPECT_EQ(eps(3, 6, 5), 1);
  EXPECT_EQ(eps(1, 6, 7), -1);
  int nonzero = 0;
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      for (int k = 1; k < 8; ++k) {
        EXPECT_EQ(eps(i, j, k), -eps(j, i, k));
        EXPECT_EQ(eps(i, j, k), -eps(i, k, j));
        if (eps(i, j, k) != 0) ++nonzero;
      }
  // 7 lines of the Fano plane, 6 orderings each.
  EXPECT_EQ(nonzero, 42);
}

TEST(Epsilon, ThirdIndexCompletesTheLine) {
  const auto& eps = epsilon_table();
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const int k = eps.third(i, j);
      EXPECT_NE(eps(i, j, k), 0) << i << j;
    }
}

TEST(Octonion, BasisProducts) {
  EXPECT_EQ(mul(Octonion::basis(1), Octonion::basis(2)), Octonion::basis(3));
  EXPECT_EQ(mul(Octonion::basis(2), Octonion::basis(1)), -Octonion::basis(3));
  EXPECT_EQ(mul(Octonion::basis(5), Octonion::basis(5)), -Octonion::basis(0));
  EXPECT_EQ(mul(Octonion::basis(0), Octonion::basis(6)), Octonion::basis(6));
}

TEST(Octonion, NormIsMultiplicative) {
  std::mt19937_64 rng(1);
  for (int s = 0; s < 200; ++s) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    EXPECT_NEAR(mul(a, b).norm(), a.norm() * b.norm(), 1e-12 * a.norm() * b.norm());
  }
}

TEST(Octonion, AlternativeAndMoufang) {
  std::mt19937_64 rng(2);
  for (int s = 0; s < 100; ++s) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng), c = random_octonion(rng);
    EXPECT_LT(distance(mul(a, mul(a, b)), mul(mul(a, a), b)), 1e-11);
    EXPECT_LT(distance(mul(mul(b, a), a), mul(b, mul(a, a))), 1e-11);
    // a(b(ac)) = ((ab)a)c
    EXPECT_LT(distance(mul(a, mul(b, mul(a, c))), mul(mul(mul(a, b), a), c)), 1e-10);
  }
}

TEST(Octonion, ConjugationReversesProducts) {
  std::mt19937_64 rng(3);
  const Octonion a = random_octonion(rng), b = random_octonion(rng);
  EXPECT_LT(distance(conj(mul(a, b)), mul(conj(b), conj(a))), 1e-12);
  EXPECT_NEAR(mul(a, conj(a)).real(), a.norm2(), 1e-12);
}

TEST(Cross2, HandComputedValues) {
  // e1 e4 = e5 from the triple 145.
  EXPECT_EQ(cross2(Octonion::basis(1), Octonion::basis(4)), Octonion::basis(5));
  EXPECT_THROW(cross2(Octonion::basis(0), Octonion::basis(1)), std::invalid_argument);
  const Eigen::VectorXd x = cross2(Eigen::VectorXd::Unit(7, 0), Eigen::VectorXd::Unit(7, 3));
  EXPECT_LT((x - Eigen::VectorXd::Unit(7, 4)).norm(), 1e-15);
}

TEST(Cross3, HandComputedValues) {
  // X(e0, e1, e2) = e1 e2 = e3.
  EXPECT_EQ(cross3(Octonion::basis(0), Octonion::basis(1), Octonion::basis(2)), Octonion::basis(3));
  // X(e4, e1, e2) = -e4 (conj(e1) e2) = e4 e3 = -e7, since 347 is positive and 437 odd.
  EXPECT_EQ(cross3(Octonion::basis(4), Octonion::basis(1), Octonion::basis(2)), -Octonion::basis(7));
}

TEST(Cross3, AlternatingAndOrthogonal) {
  std::mt19937_64 rng(4);
  for (int s = 0; s < 50; ++s) {
    const Octonion u = random_octonion(rng), v = random_octonion(rng), w = random_octonion(rng);
    const Octonion x = cross3(u, v, w);
    EXPECT_LT(distance(x, -cross3(v, u, w)), 1e-11);
    EXPECT_LT(distance(x, -cross3(u, w, v)), 1e-11);
    EXPECT_NEAR(dot(x, u), 0.0, 1e-11);
    EXPECT_NEAR(dot(x, v), 0.0, 1e-11);
    EXPECT_NEAR(dot(x, w), 0.0, 1e-11);
  }
}

TEST(Cross3, FourFormSymmetryOffOrthonormalFrames) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 50; ++s) {
    const Octonion u = random_octonion(rng), v = random_octonion(rng), w = random_octonion(rng),
                   z = random_octonion(rng);
    EXPECT_NEAR(dot(cross3(u, v, w), z), -dot(cross3(z, v, w), u), 1e-10);
  }
}
