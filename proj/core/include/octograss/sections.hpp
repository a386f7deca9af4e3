#pragma once

/**
 * @file sections.hpp
 * @brief Distinguished unit sections of the bundles over Grassmannians.
 *
 *   sigma2 : G(2,7) -> normal bundle,  u ^ v      -> u x v
 *   sigma3 : G(3,8) -> normal bundle,  u ^ v ^ w  -> X(u,v,w)
 *   J      : G(2,8) -> skew bundle,    u ^ v      -> (w -> X(u,v,w))
 *   hopf   : G(1,2m) -> normal bundle, p          -> J_std p
 *   acs6   : G(1,7) -> skew bundle,    u          -> (v -> u x v)
 *
 * Each is multilinear in the frame columns, which is what makes them well
 * defined on oriented subspaces and lets the differential operators compute
 * exact jets along geodesic surfaces.
 */

#include <functional>
#include <memory>
#include <span>
#include <string>

#include <Eigen/Core>

#include "octograss/bundles.hpp"
#include "octograss/grassmann.hpp"

namespace octograss {

class Section {
 public:
  /// Fibre value as a function of the frame columns.
  using FrameMap = std::function<Eigen::MatrixXd(std::span<const Eigen::VectorXd>)>;

  /// `multilinear` declares that `eval` is linear in each column separately,
  /// so its derivatives along rotations of the frame are available exactly.
  Section(std::string name, int k, int n, FiberKind kind, FrameMap eval, bool multilinear);

  const std::string& name() const { return name_; }
  int k() const { return k_; }
  int n() const { return n_; }
  FiberKind kind() const { return kind_; }
  bool multilinear() const { return multilinear_; }

  /// Fibre value at P (n x 1 for normal sections, n x n for skew ones).
  Eigen::MatrixXd value(const OrientedSubspace& p) const;
  Eigen::MatrixXd value(const Eigen::MatrixXd& frame) const;
  /// Evaluate on arbitrary (not necessarily orthonormal) columns.
  Eigen::MatrixXd value(std::span<const Eigen::VectorXd> columns) const;

 private:
  std::string name_;
  int k_;
  int n_;
  FiberKind kind_;
  FrameMap eval_;
  bool multilinear_;
};

Section make_sigma2();
Section make_sigma3();
Section make_J();
Section make_hopf(int m);
Section make_acs6();

/// "sigma2", "sigma3", "J", "hopf" (m = 2 unless given as "hopf:m"), "acs6".
Section section_by_name(const std::string& name);

/// Matrix of w -> X(u, v, w) on R^8; J_{u^v}.
Eigen::MatrixXd triple_operator(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// J_{e_i ^ e_j} on R^8.
Eigen::MatrixXd J_basis(int i, int j);

/// Matrix of v -> u x v on R^7.
Eigen::MatrixXd double_operator(const Eigen::VectorXd& u);

/// Block-diagonal complex structure pairing (e_{2i}, e_{2i+1}) on R^{2m}.
Eigen::MatrixXd standard_complex_structure(int m);

NormalElement sigma2(const OrientedSubspace& p);
NormalElement sigma3(const OrientedSubspace& p);
SkewElement sectionJ(const OrientedSubspace& p);
NormalElement hopf(const Eigen::VectorXd& p);
SkewElement acs6(const Eigen::VectorXd& u);

}  // namespace octograss
