#include "octograss/octonion.hpp"

#include <cmath>
#include <stdexcept>

namespace octograss {

EpsilonTable::EpsilonTable() {
  auto set = [this](int i, int j, int k, int sign) {
    entries_[static_cast<std::size_t>(((i - 1) * 7 + (j - 1)) * 7 + (k - 1))] =
        static_cast<std::int8_t>(sign);
    third_[static_cast<std::size_t>((i - 1) * 7 + (j - 1))] = static_cast<std::int8_t>(k);
  };
  for (const auto& [i, j, k] : kPositiveTriples) {
    // even permutations
    set(i, j, k, +1);
    set(j, k, i, +1);
    set(k, i, j, +1);
    // odd permutations
    set(j, i, k, -1);
    set(i, k, j, -1);
    set(k, j, i, -1);
  }
}

const EpsilonTable& epsilon_table() {
  static const EpsilonTable table;
  return table;
}

Octonion Octonion::basis(int i) {
  if (i < 0 || i >= kDim) throw std::out_of_range("octonion basis index out of range");
  Octonion o;
  o[i] = 1.0;
  return o;
}

Octonion Octonion::from_vector(const Eigen::VectorXd& v) {
  if (v.size() != kDim) throw std::invalid_argument("octonion needs an 8-vector");
  Octonion o;
  for (int i = 0; i < kDim; ++i) o[i] = v[i];
  return o;
}

Octonion Octonion::from_imaginary(const Eigen::VectorXd& v) {
  if (v.size() != 7) throw std::invalid_argument("imaginary octonion needs a 7-vector");
  Octonion o;
  for (int i = 0; i < 7; ++i) o[i + 1] = v[i];
  return o;
}

double Octonion::norm2() const {
  double s = 0.0;
  for (double x : c_) s += x * x;
  return s;
}

double Octonion::norm() const { return std::sqrt(norm2()); }

Eigen::VectorXd Octonion::to_vector() const {
  Eigen::VectorXd v(kDim);
  for (int i = 0; i < kDim; ++i) v[i] = c_[static_cast<std::size_t>(i)];
  return v;
}

Eigen::VectorXd Octonion::imaginary() const {
  Eigen::VectorXd v(7);
  for (int i = 0; i < 7; ++i) v[i] = c_[static_cast<std::size_t>(i + 1)];
  return v;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

double dot(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (int i = 0; i < Octonion::kDim; ++i) s += a[i] * b[i];
  return s;
}

Octonion mul(const Octonion& a, const Octonion& b) {
  const auto& eps = epsilon_table();
  Octonion r;
  r[0] = a[0] * b[0];
  for (int i = 1; i < 8; ++i) {
    r[0] -= a[i] * b[i];
    r[i] += a[0] * b[i] + a[i] * b[0];
  }
  for (int i = 1; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 1; j < 8; ++j) {
      if (i == j || b[j] == 0.0) continue;
      const int k = eps.third(i, j);
      r[k] += eps(i, j, k) * a[i] * b[j];
    }
  }
  return r;
}

Octonion conj(const Octonion& a) {
  Octonion r = -a;
  r[0] = a[0];
  return r;
}

Octonion cross2(const Octonion& u, const Octonion& v) {
  if (u.real() != 0.0 || v.real() != 0.0) {
    throw std::invalid_argument("cross2: arguments must be pure imaginary");
  }
  Octonion r = mul(u, v);
  // Re(uv) = -<u,v> exactly; drop the rounding residue.
  r[0] = 0.0;
  return r;
}

Octonion cross3(const Octonion& u, const Octonion& v, const Octonion& w) {
  Octonion r = -mul(u, mul(conj(v), w));
  r += dot(u, v) * w;
  r += dot(v, w) * u;
  r -= dot(w, u) * v;
  return r;
}

Eigen::VectorXd cross2(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return cross2(Octonion::from_imaginary(u), Octonion::from_imaginary(v)).imaginary();
}

Eigen::VectorXd cross3(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                       const Eigen::VectorXd& w) {
  return cross3(Octonion::from_vector(u), Octonion::from_vector(v), Octonion::from_vector(w))
      .to_vector();
}

}  // namespace octograss
