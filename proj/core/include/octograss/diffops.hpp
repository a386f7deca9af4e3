#pragma once

/**
 * @file diffops.hpp
 * @brief Covariant derivatives, rough Laplacian, bundle curvature and the
 *        criticality 1-form of a section.
 *
 * Second derivatives are taken along geodesic surfaces P_{t,s} = exp(tX) exp(sY) P,
 * which at P give nabla_X nabla_{E_Y} sigma for the field E_Y parallel along
 * radial geodesics. Three evaluation paths are provided:
 *
 *  - ClosedForm: exact jets of a multilinear section along the rotated frame,
 *    assembled with pi0 (pi0' S1 + S2) (normal) or
 *    pi0 (pi0' T1 + T2 + T1 pi0') pi0 (skew);
 *  - Jet: the same assembly with S1, S2, pi0' obtained by Richardson
 *    extrapolated central differences of the surface;
 *  - Nested: project the s-derivative at every t, differentiate in t, project.
 *
 * CrossChecked runs Jet and Nested and throws when they disagree.
 */

#include <string>

#include <Eigen/Core>

#include "octograss/bundles.hpp"
#include "octograss/grassmann.hpp"
#include "octograss/numdiff.hpp"
#include "octograss/sections.hpp"

namespace octograss {

enum class DiffMethod { ClosedForm, Jet, Nested, CrossChecked };

const char* to_string(DiffMethod method);

struct DiffOptions {
  DerivativeOptions fd{};
  DiffMethod method = DiffMethod::ClosedForm;
  /// Jet vs nested agreement required by CrossChecked.
  double path_tol = 1e-5;
};

struct SurfaceJet {
  Eigen::MatrixXd first;    ///< S1 = d/ds x(P_{0,s}) at 0
  Eigen::MatrixXd mixed;    ///< S2 = d^2/dtds x(P_{t,s}) at (0,0)
  Eigen::MatrixXd pi0;      ///< projector onto P^perp
  Eigen::MatrixXd pi0_dot;  ///< d/dt of the projector along t -> P_{t,0}
};

/// Jet of a section along a surface; `method` is ClosedForm or Jet.
SurfaceJet surface_jet(const Section& sigma, const GeodesicSurface& surf, DiffMethod method,
                       const DerivativeOptions& fd = {});

/// pi0 (pi0' S1 + S2), or pi0 (pi0' T1 + T2 + T1 pi0') pi0 for skew fibres.
Eigen::MatrixXd assemble_second_derivative(FiberKind kind, const SurfaceJet& jet);

/// nabla_V sigma at V.base().
Eigen::MatrixXd nabla(const Section& sigma, const TangentVector& v, const DiffOptions& opt = {});

/// nabla_X nabla_{E_Y} sigma at the base of the surface (X outer, Y inner).
Eigen::MatrixXd second_nabla(const Section& sigma, const GeodesicSurface& surf,
                             const DiffOptions& opt = {});

struct LaplacianResult {
  std::string section;
  OrientedSubspace point;
  Eigen::MatrixXd value;
  double eigen_estimate;  ///< <Delta sigma, sigma> / <sigma, sigma>
  double residual;        ///< |Delta sigma - f sigma| in the fibre norm
};

/// Trace of nabla^2 sigma over the orthonormal frame g e_j^l g^T at P.
LaplacianResult rough_laplacian(const Section& sigma, const OrientedSubspace& p,
                                const DiffOptions& opt = {});

/// R_{X,Y} sigma = -nabla_X nabla_{E_Y} sigma + nabla_Y nabla_{E_X} sigma.
Eigen::MatrixXd curvature(const Section& sigma, const TangentVector& x, const TangentVector& y,
                          const DiffOptions& opt = {});

/// R_{e_i^k, e_j^l} sigma on the tangent frame.
Eigen::MatrixXd curvature(const Section& sigma, const TangentFrame& frame, int i, int k, int j,
                          int l, const DiffOptions& opt = {});

/// sum_a < R_{X, e_a} sigma, nabla_{e_a} sigma > over the frame at X.base().
double criticality_form(const Section& sigma, const TangentVector& x, const DiffOptions& opt = {});

/// Sign r of e_k ^ e_l ^ e_m = r e_0 ^ e_1 ^ e_2 and the complementary index m.
struct Orientation3 {
  int m;
  int sign;
};
Orientation3 complete_orientation(int k, int l);

}  // namespace octograss
