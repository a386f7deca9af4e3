#include "octograss/diffops.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace octograss {

const char* to_string(DiffMethod method) {
  switch (method) {
    case DiffMethod::ClosedForm: return "closed-form";
    case DiffMethod::Jet: return "jet";
    case DiffMethod::Nested: return "nested";
    case DiffMethod::CrossChecked: return "cross-checked";
  }
  return "?";
}

namespace {

std::vector<Eigen::VectorXd> columns(const Eigen::MatrixXd& m) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.emplace_back(m.col(c));
  return out;
}

/// sum_c sigma(f_1, .., d_c, .., f_k)
Eigen::MatrixXd first_variation_multilinear(const Section& sigma, const Eigen::MatrixXd& frame,
                                            const Eigen::MatrixXd& velocity) {
  auto cols = columns(frame);
  Eigen::MatrixXd out;
  for (int c = 0; c < sigma.k(); ++c) {
    const Eigen::VectorXd saved = cols[static_cast<std::size_t>(c)];
    cols[static_cast<std::size_t>(c)] = velocity.col(c);
    Eigen::MatrixXd term = sigma.value(cols);
    out = (c == 0) ? term : (out + term).eval();
    cols[static_cast<std::size_t>(c)] = saved;
  }
  return out;
}

/// Mixed derivative of a multilinear map along F(t,s) with dF/dt = a, dF/ds = b, d2F/dtds = ab.
Eigen::MatrixXd mixed_variation_multilinear(const Section& sigma, const Eigen::MatrixXd& frame,
                                            const Eigen::MatrixXd& dt, const Eigen::MatrixXd& ds,
                                            const Eigen::MatrixXd& dts) {
  Eigen::MatrixXd out = first_variation_multilinear(sigma, frame, dts);
  auto cols = columns(frame);
  for (int c = 0; c < sigma.k(); ++c) {
    for (int d = 0; d < sigma.k(); ++d) {
      if (c == d) continue;
      auto varied = cols;
      varied[static_cast<std::size_t>(c)] = dt.col(c);
      varied[static_cast<std::size_t>(d)] = ds.col(d);
      out += sigma.value(varied);
    }
  }
  return out;
}

Eigen::MatrixXd nested_second(const Section& sigma, const GeodesicSurface& surf,
                              const DerivativeOptions& fd) {
  const FiberKind kind = sigma.kind();
  auto projected_first = [&](double t) {
    const Eigen::MatrixXd ds =
        derivative([&](double s) { return sigma.value(surf.frame_at(t, s)); }, 0.0, fd);
    const Eigen::MatrixXd f = surf.frame_at(t, 0.0);
    const Eigen::MatrixXd pi = Eigen::MatrixXd::Identity(f.rows(), f.rows()) - f * f.transpose();
    return fiber_project(kind, pi, ds);
  };
  const Eigen::MatrixXd dt = derivative(projected_first, 0.0, fd);
  return fiber_project(kind, projector(surf.base()), dt);
}

Eigen::MatrixXd jet_second(const Section& sigma, const GeodesicSurface& surf, DiffMethod method,
                           const DerivativeOptions& fd) {
  return assemble_second_derivative(sigma.kind(), surface_jet(sigma, surf, method, fd));
}

}  // namespace

SurfaceJet surface_jet(const Section& sigma, const GeodesicSurface& surf, DiffMethod method,
                       const DerivativeOptions& fd) {
  const Eigen::MatrixXd& f0 = surf.base().frame();
  const Eigen::MatrixXd& x = surf.outer().mat();
  const Eigen::MatrixXd& y = surf.inner().mat();
  SurfaceJet jet;
  jet.pi0 = projector(surf.base());
  if (method == DiffMethod::ClosedForm) {
    if (!sigma.multilinear()) {
      throw std::invalid_argument("surface_jet: closed-form jets need a multilinear section");
    }
    const Eigen::MatrixXd dt = x * f0;
    const Eigen::MatrixXd ds = y * f0;
    const Eigen::MatrixXd dts = x * ds;
    jet.first = first_variation_multilinear(sigma, f0, ds);
    jet.mixed = mixed_variation_multilinear(sigma, f0, dt, ds, dts);
    const Eigen::MatrixXd pr = f0 * f0.transpose();
    jet.pi0_dot = -(x * pr + pr * x.transpose());
    return jet;
  }
  if (method != DiffMethod::Jet) throw std::invalid_argument("surface_jet: method must be closed-form or jet");
  jet.first = derivative([&](double s) { return sigma.value(surf.frame_at(0.0, s)); }, 0.0, fd);
  jet.mixed = derivative(
      [&](double t) {
        return derivative([&](double s) { return sigma.value(surf.frame_at(t, s)); }, 0.0, fd);
      },
      0.0, fd);
  jet.pi0_dot = derivative(
      [&](double t) {
        const Eigen::MatrixXd f = surf.frame_at(t, 0.0);
        return (Eigen::MatrixXd::Identity(f.rows(), f.rows()) - f * f.transpose()).eval();
      },
      0.0, fd);
  return jet;
}

Eigen::MatrixXd assemble_second_derivative(FiberKind kind, const SurfaceJet& jet) {
  if (kind == FiberKind::Normal) return jet.pi0 * (jet.pi0_dot * jet.first + jet.mixed);
  return jet.pi0 * (jet.pi0_dot * jet.first + jet.mixed + jet.first * jet.pi0_dot) * jet.pi0;
}

Eigen::MatrixXd nabla(const Section& sigma, const TangentVector& v, const DiffOptions& opt) {
  const OrientedSubspace& p = v.base();
  const Eigen::MatrixXd pi = projector(p);
  Eigen::MatrixXd d;
  if (opt.method == DiffMethod::ClosedForm && sigma.multilinear()) {
    d = first_variation_multilinear(sigma, p.frame(), v.frame_velocity());
  } else {
    d = derivative([&](double s) { return sigma.value(rotation(v.mat(), s) * p.frame()); }, 0.0,
                   opt.fd);
  }
  return fiber_project(sigma.kind(), pi, d);
}

Eigen::MatrixXd second_nabla(const Section& sigma, const GeodesicSurface& surf,
                             const DiffOptions& opt) {
  switch (opt.method) {
    case DiffMethod::ClosedForm:
      if (sigma.multilinear()) return jet_second(sigma, surf, DiffMethod::ClosedForm, opt.fd);
      return nested_second(sigma, surf, opt.fd);
    case DiffMethod::Jet:
      return jet_second(sigma, surf, DiffMethod::Jet, opt.fd);
    case DiffMethod::Nested:
      return nested_second(sigma, surf, opt.fd);
    case DiffMethod::CrossChecked: {
      const Eigen::MatrixXd a = jet_second(sigma, surf, DiffMethod::Jet, opt.fd);
      const Eigen::MatrixXd b = nested_second(sigma, surf, opt.fd);
      const double gap = (a - b).cwiseAbs().maxCoeff();
      if (!(gap <= opt.path_tol)) {
        throw DifferentiationError("second_nabla: jet and nested paths disagree by " +
                                   std::to_string(gap));
      }
      return a;
    }
  }
  throw std::invalid_argument("second_nabla: unknown method");
}

LaplacianResult rough_laplacian(const Section& sigma, const OrientedSubspace& p,
                                const DiffOptions& opt) {
  const TangentFrame frame(p);
  Eigen::MatrixXd sum;
  for (int a = 0; a < frame.dimension(); ++a) {
    const TangentVector e = frame.direction(a);
    Eigen::MatrixXd term = second_nabla(sigma, GeodesicSurface(e, e), opt);
    sum = (a == 0) ? term : (sum + term).eval();
  }
  const Eigen::MatrixXd value = sigma.value(p);
  const FiberKind kind = sigma.kind();
  const double f = fiber_inner(kind, sum, value) / fiber_inner(kind, value, value);
  const double residual = fiber_norm(kind, sum - f * value);
  return {sigma.name(), p, sum, f, residual};
}

Eigen::MatrixXd curvature(const Section& sigma, const TangentVector& x, const TangentVector& y,
                          const DiffOptions& opt) {
  return -second_nabla(sigma, GeodesicSurface(x, y), opt) +
         second_nabla(sigma, GeodesicSurface(y, x), opt);
}

Eigen::MatrixXd curvature(const Section& sigma, const TangentFrame& frame, int i, int k, int j,
                          int l, const DiffOptions& opt) {
  return curvature(sigma, frame.direction(k, i), frame.direction(l, j), opt);
}

double criticality_form(const Section& sigma, const TangentVector& x, const DiffOptions& opt) {
  const TangentFrame frame(x.base());
  double sum = 0.0;
  for (int a = 0; a < frame.dimension(); ++a) {
    const TangentVector e = frame.direction(a);
    sum += fiber_inner(sigma.kind(), curvature(sigma, x, e, opt), nabla(sigma, e, opt));
  }
  return sum;
}

Orientation3 complete_orientation(int k, int l) {
  k = ((k % 3) + 3) % 3;
  l = ((l % 3) + 3) % 3;
  if (k == l) throw std::invalid_argument("complete_orientation: k and l must differ");
  const int m = 3 - k - l;
  // (k, l, m) is a cyclic shift of (0, 1, 2) exactly when l = k + 1 mod 3.
  const int sign = (l == (k + 1) % 3) ? 1 : -1;
  return {m, sign};
}

}  // namespace octograss
