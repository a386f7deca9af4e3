#include "octograss/sections.hpp"

#include <stdexcept>
#include <vector>

#include "octograss/octonion.hpp"

namespace octograss {

Section::Section(std::string name, int k, int n, FiberKind kind, FrameMap eval, bool multilinear)
    : name_(std::move(name)), k_(k), n_(n), kind_(kind), eval_(std::move(eval)),
      multilinear_(multilinear) {}

Eigen::MatrixXd Section::value(std::span<const Eigen::VectorXd> columns) const {
  if (static_cast<int>(columns.size()) != k_) {
    throw std::invalid_argument("Section " + name_ + ": wrong number of frame columns");
  }
  return eval_(columns);
}

Eigen::MatrixXd Section::value(const Eigen::MatrixXd& frame) const {
  if (frame.rows() != n_ || frame.cols() != k_) {
    throw std::invalid_argument("Section " + name_ + ": frame has the wrong shape");
  }
  std::vector<Eigen::VectorXd> cols;
  cols.reserve(static_cast<std::size_t>(k_));
  for (int c = 0; c < k_; ++c) cols.emplace_back(frame.col(c));
  return eval_(cols);
}

Eigen::MatrixXd Section::value(const OrientedSubspace& p) const { return value(p.frame()); }

Eigen::MatrixXd triple_operator(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const Octonion ou = Octonion::from_vector(u);
  const Octonion ov = Octonion::from_vector(v);
  Eigen::MatrixXd m(8, 8);
  for (int c = 0; c < 8; ++c) {
    m.col(c) = cross3(ou, ov, Octonion::basis(c)).to_vector();
  }
  return m;
}

Eigen::MatrixXd J_basis(int i, int j) {
  return triple_operator(Eigen::VectorXd::Unit(8, i), Eigen::VectorXd::Unit(8, j));
}

Eigen::MatrixXd double_operator(const Eigen::VectorXd& u) {
  Eigen::MatrixXd m(7, 7);
  for (int c = 0; c < 7; ++c) m.col(c) = cross2(u, Eigen::VectorXd::Unit(7, c));
  return m;
}

Eigen::MatrixXd standard_complex_structure(int m) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j(2 * i + 1, 2 * i) = 1.0;
    j(2 * i, 2 * i + 1) = -1.0;
  }
  return j;
}

Section make_sigma2() {
  return Section("sigma2", 2, 7, FiberKind::Normal,
                 [](std::span<const Eigen::VectorXd> c) -> Eigen::MatrixXd {
                   return cross2(c[0], c[1]);
                 },
                 true);
}

Section make_sigma3() {
  return Section("sigma3", 3, 8, FiberKind::Normal,
                 [](std::span<const Eigen::VectorXd> c) -> Eigen::MatrixXd {
                   return cross3(c[0], c[1], c[2]);
                 },
                 true);
}

Section make_J() {
  return Section("J", 2, 8, FiberKind::Skew,
                 [](std::span<const Eigen::VectorXd> c) -> Eigen::MatrixXd {
                   return triple_operator(c[0], c[1]);
                 },
                 true);
}

Section make_hopf(int m) {
  if (m < 1) throw std::invalid_argument("make_hopf: m must be positive");
  const Eigen::MatrixXd jstd = standard_complex_structure(m);
  return Section("hopf", 1, 2 * m, FiberKind::Normal,
                 [jstd](std::span<const Eigen::VectorXd> c) -> Eigen::MatrixXd {
                   return jstd * c[0];
                 },
                 true);
}

Section make_acs6() {
  return Section("acs6", 1, 7, FiberKind::Skew,
                 [](std::span<const Eigen::VectorXd> c) -> Eigen::MatrixXd {
                   return double_operator(c[0]);
                 },
                 true);
}

Section section_by_name(const std::string& name) {
  if (name == "sigma2") return make_sigma2();
  if (name == "sigma3") return make_sigma3();
  if (name == "J") return make_J();
  if (name == "acs6") return make_acs6();
  if (name == "hopf") return make_hopf(2);
  if (name.rfind("hopf:", 0) == 0) return make_hopf(std::stoi(name.substr(5)));
  throw std::invalid_argument("unknown section: " + name);
}

namespace {

void require(const OrientedSubspace& p, int k, int n, const char* what) {
  if (p.k() != k || p.n() != n) {
    throw std::invalid_argument(std::string(what) + ": point lies in the wrong Grassmannian");
  }
}

}  // namespace

NormalElement sigma2(const OrientedSubspace& p) {
  require(p, 2, 7, "sigma2");
  return NormalElement(p, make_sigma2().value(p));
}

NormalElement sigma3(const OrientedSubspace& p) {
  require(p, 3, 8, "sigma3");
  return NormalElement(p, make_sigma3().value(p));
}

SkewElement sectionJ(const OrientedSubspace& p) {
  require(p, 2, 8, "sectionJ");
  return SkewElement(p, make_J().value(p));
}

NormalElement hopf(const Eigen::VectorXd& p) {
  if (p.size() % 2 != 0) throw std::invalid_argument("hopf: dimension must be even");
  const OrientedSubspace point{Eigen::MatrixXd(p)};
  return NormalElement(point, make_hopf(static_cast<int>(p.size() / 2)).value(point));
}

SkewElement acs6(const Eigen::VectorXd& u) {
  if (u.size() != 7) throw std::invalid_argument("acs6: expects a unit vector of R^7");
  const OrientedSubspace point{Eigen::MatrixXd(u)};
  return SkewElement(point, make_acs6().value(point));
}

}  // namespace octograss
