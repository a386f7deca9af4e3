#include "octograss/energy.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "octograss/bundles.hpp"

namespace octograss {

double bending_density(const Section& sigma, const OrientedSubspace& p, const DiffOptions& opt) {
  const TangentFrame frame(p);
  double sum = 0.0;
  for (int a = 0; a < frame.dimension(); ++a) {
    const double norm = fiber_norm(sigma.kind(), nabla(sigma, frame.direction(a), opt));
    sum += norm * norm;
  }
  return sum;
}

EnergyEstimate estimate_energy(const Section& sigma, int samples, std::uint64_t seed,
                               const DiffOptions& opt) {
  if (samples < 1) throw std::invalid_argument("estimate_energy: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    values.push_back(bending_density(sigma, random_point(sigma.n(), sigma.k(), rng), opt));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= samples;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double stddev = samples > 1 ? std::sqrt(var / (samples - 1)) : 0.0;
  const double dim = sigma.k() * (sigma.n() - sigma.k());
  return {sigma.name(), samples, mean, stddev, 0.5 * (dim + mean), seed};
}

namespace {

/// Coefficient shapes: fibre values are n x 1 (normal) or n x n (skew).
int fiber_cols(const Section& s) { return s.kind() == FiberKind::Normal ? 1 : s.n(); }

}  // namespace

Variation::Variation(Section base, std::vector<Eigen::MatrixXd> coefficients)
    : base_(std::move(base)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != 5) throw std::invalid_argument("Variation: expects five coefficients");
}

Eigen::MatrixXd Variation::direction(const Eigen::MatrixXd& frame) const {
  const Eigen::MatrixXd pr = frame * frame.transpose();
  const Eigen::MatrixXd pi = Eigen::MatrixXd::Identity(pr.rows(), pr.cols()) - pr;
  // c0 + c1 Pr c2 + Pr c3 Pr c4
  Eigen::MatrixXd raw = coeffs_[0] + coeffs_[1] * pr * coeffs_[2] + pr * coeffs_[3] * pr * coeffs_[4];
  const FiberKind kind = base_.kind();
  if (kind == FiberKind::Skew) raw = 0.5 * (raw - raw.transpose()).eval();
  Eigen::MatrixXd w = fiber_project(kind, pi, raw);
  const Eigen::MatrixXd s = base_.value(frame);
  w -= (fiber_inner(kind, w, s) / fiber_inner(kind, s, s)) * s;
  return w;
}

Section Variation::at(double t) const {
  auto self = *this;
  auto eval = [self, t](std::span<const Eigen::VectorXd> cols) -> Eigen::MatrixXd {
    Eigen::MatrixXd frame(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) frame.col(static_cast<Eigen::Index>(c)) = cols[c];
    const Eigen::MatrixXd s = self.base_.value(frame) + t * self.direction(frame);
    return s / fiber_norm(self.base_.kind(), s);
  };
  std::ostringstream name;
  name << base_.name() << "+variation(" << t << ")";
  return Section(name.str(), base_.k(), base_.n(), base_.kind(), eval, false);
}

Variation random_variation(const Section& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const int n = base.n();
  const int c = fiber_cols(base);
  auto draw = [&](int rows, int cols) {
    Eigen::MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = gauss(rng);
    return m;
  };
  std::vector<Eigen::MatrixXd> coeffs;
  coeffs.push_back(draw(n, c));
  coeffs.push_back(draw(n, n));
  coeffs.push_back(draw(n, c));
  coeffs.push_back(draw(n, n));
  coeffs.push_back(draw(n, c));
  return Variation(base, std::move(coeffs));
}

FirstVariation first_variation(const Variation& variation, double dt, int samples,
                               std::uint64_t seed, const DiffOptions& opt) {
  if (samples < 2) throw std::invalid_argument("first_variation: need at least two samples");
  if (!(dt > 0.0)) throw std::invalid_argument("first_variation: dt must be positive");
  const Section& base = variation.base();
  const Section plus = variation.at(dt);
  const Section minus = variation.at(-dt);
  // Perturbed sections are not multilinear; their derivatives are numerical.
  DiffOptions numeric = opt;
  numeric.method = DiffMethod::Nested;

  std::mt19937_64 rng(seed);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const OrientedSubspace p = random_point(base.n(), base.k(), rng);
    const double bp = bending_density(plus, p, numeric);
    const double bm = bending_density(minus, p, numeric);
    // E density = (dim + B) / 2
    values.push_back((bp - bm) / (4.0 * dt));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= samples;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (samples - 1);
  FirstVariation out;
  out.derivative = mean;
  out.standard_error = std::sqrt(var / samples);
  out.samples = samples;
  out.inconclusive = out.standard_error > std::abs(mean);
  return out;
}

ObstructionSample parallel_obstruction(double t, double a, double transport_tol) {
  const Eigen::VectorXd e0 = Eigen::VectorXd::Unit(8, 0);
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(8, 1);
  const Eigen::VectorXd e2 = Eigen::VectorXd::Unit(8, 2);
  const Eigen::VectorXd v = Eigen::VectorXd::Unit(8, 3);
  const Eigen::VectorXd w = Eigen::VectorXd::Unit(8, 4);
  auto u_of = [&](double b) -> Eigen::VectorXd { return std::cos(b) * e1 + std::sin(b) * e2; };
  auto v_of = [&](double b) -> Eigen::VectorXd { return -std::sin(b) * e1 + std::cos(b) * e2; };
  auto curve_for = [&](double b) {
    return [&, b](double s) {
      Eigen::MatrixXd f(8, 3);
      f.col(0) = e0;
      f.col(1) = std::cos(s) * u_of(b) + std::sin(s) * v;
      f.col(2) = std::cos(s) * v_of(b) + std::sin(s) * w;
      return OrientedSubspace(std::move(f));
    };
  };

  ObstructionSample out;
  out.t = t;
  out.a = a;
  if (t == 0.0) return out;

  TransportOptions adaptive;
  adaptive.tol = transport_tol;
  const TransportResult here = parallel_transport_normal(curve_for(a), v, t, adaptive);
  const Eigen::VectorXd closed = -std::sin(t) * u_of(a) + std::cos(t) * v;
  out.transport_error = (here.value.vec() - closed).norm();

  // Fixed step for the a-derivative keeps the integration error smooth in a.
  TransportOptions fixed;
  fixed.step = here.step;
  fixed.adaptive = false;
  auto transported = [&](double b) -> Eigen::VectorXd {
    return parallel_transport_normal(curve_for(b), v, t, fixed).value.vec();
  };
  const Eigen::VectorXd dv = derivative(transported, a, DerivativeOptions{1e-2, 1e-6});
  const Eigen::MatrixXd pi = projector(curve_for(a)(t));
  out.loop_derivative = (pi * dv).norm();
  out.expected = (pi * (-std::sin(t) * v_of(a))).norm();
  return out;
}

VerificationReport parallel_obstruction_report(std::span<const double> ts) {
  using std::numbers::pi;
  const std::vector<double> defaults{pi / 6.0, pi / 4.0, pi / 3.0};
  if (ts.empty()) ts = defaults;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = "parallel.obstruction";
  report.anchor = "|D/da V(gamma_a(t))| = |pi_a(-sin t v_a)| = sin^2 t != 0";
  report.provenance = "oracle";
  report.tolerance = 1e-5;
  std::ostringstream expected;
  std::ostringstream computed;
  double worst = 0.0;
  bool positive = true;
  for (double t : ts) {
    const ObstructionSample s = parallel_obstruction(t);
    const double target = std::sin(t) * std::sin(t);
    worst = std::max({worst, std::abs(s.loop_derivative - target), std::abs(s.expected - target)});
    positive = positive && s.loop_derivative > 0.0;
    expected << (expected.tellp() > 0 ? " " : "") << target;
    computed << (computed.tellp() > 0 ? " " : "") << s.loop_derivative;
  }
  report.expected = "sin^2 t = " + expected.str();
  report.computed = computed.str();
  report.residual = worst;
  report.passed = positive && worst < report.tolerance;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace octograss
