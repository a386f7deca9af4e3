#pragma once

/**
 * @file octonion.hpp
 * @brief Octonion arithmetic over R^8 and the double/triple cross products.
 *
 * Basis e0..e7, e0 the unit. For i, j >= 1 the product is
 *
 *     e_i e_j = -delta_ij e0 + eps_ijk e_k
 *
 * with eps totally antisymmetric and +1 on 123, 145, 176, 246, 257, 347, 365.
 *
 * Im O = R^7 is embedded as coordinates 1..7. Functions that take a plain
 * Eigen 7-vector use index c for e_{c+1}.
 */

#include <array>
#include <cstdint>

#include <Eigen/Core>

namespace octograss {

/// Fully expanded 7x7x7 structure constants, indices 1..7.
class EpsilonTable {
 public:
  static constexpr std::array<std::array<int, 3>, 7> kPositiveTriples{{
      {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

  EpsilonTable();

  /// Sign of eps_ijk, 1 <= i,j,k <= 7.
  int operator()(int i, int j, int k) const {
    return entries_[static_cast<std::size_t>(((i - 1) * 7 + (j - 1)) * 7 + (k - 1))];
  }

  /// The unique k with eps_ijk != 0 (i != j), else 0.
  int third(int i, int j) const {
    return third_[static_cast<std::size_t>((i - 1) * 7 + (j - 1))];
  }

 private:
  std::array<std::int8_t, 343> entries_{};
  std::array<std::int8_t, 49> third_{};
};

const EpsilonTable& epsilon_table();

class Octonion {
 public:
  static constexpr int kDim = 8;

  constexpr Octonion() = default;
  constexpr explicit Octonion(const std::array<double, 8>& coeffs) : c_(coeffs) {}

  static Octonion basis(int i);
  static Octonion from_vector(const Eigen::VectorXd& v);
  /// Pure imaginary octonion from a 7-vector (c -> e_{c+1}).
  static Octonion from_imaginary(const Eigen::VectorXd& v);

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 8>& coeffs() const { return c_; }

  double real() const { return c_[0]; }
  double norm2() const;
  double norm() const;

  Eigen::VectorXd to_vector() const;
  /// Coordinates 1..7 as a 7-vector.
  Eigen::VectorXd imaginary() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, 8> c_{};
};

double dot(const Octonion& a, const Octonion& b);
Octonion mul(const Octonion& a, const Octonion& b);
Octonion conj(const Octonion& a);

/// u x v = uv + <u,v>. Throws std::invalid_argument unless both are pure imaginary.
Octonion cross2(const Octonion& u, const Octonion& v);

/// X(u,v,w) = -u(conj(v) w) + <u,v> w + <v,w> u - <w,u> v.
Octonion cross3(const Octonion& u, const Octonion& v, const Octonion& w);

/// cross2 on 7-vectors of Im O.
Eigen::VectorXd cross2(const Eigen::VectorXd& u, const Eigen::VectorXd& v);
/// cross3 on 8-vectors.
Eigen::VectorXd cross3(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                       const Eigen::VectorXd& w);

}  // namespace octograss
