#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/QR>

#include "octograss/bundles.hpp"
#include "octograss/diffops.hpp"
#include "octograss/energy.hpp"
#include "octograss/grassmann.hpp"
#include "octograss/octonion.hpp"
#include "octograss/sections.hpp"

namespace octograss::cli {

using Eigen::MatrixXd;
using Eigen::VectorXd;

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const VerificationReport& r) { return r.passed; }));
}

int SuiteResult::failed() const { return static_cast<int>(checks.size()) - passed(); }

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

VectorXd unit(int n, int i) { return VectorXd::Unit(n, i); }

MatrixXd outer(int n, int i, int j) {
  MatrixXd m = MatrixXd::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

MatrixXd anticommutator(const MatrixXd& a, const MatrixXd& b) { return a * b + b * a; }

/// Sign of the permutation (a, b, c) of (0, 1, 2), and the missing index.
std::pair<int, int> completion(int a, int b) {
  const int c = 3 - a - b;
  Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
  p(0, a) = 1.0;
  p(1, b) = 1.0;
  p(2, c) = 1.0;
  return {c, p.determinant() > 0.0 ? 1 : -1};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct Context {
  const Config& config;
  SuiteResult& result;

  DiffOptions closed() const {
    DiffOptions o;
    o.fd = {config.fd_step, config.richardson_tol};
    o.method = DiffMethod::ClosedForm;
    return o;
  }

  DiffOptions numeric() const {
    DiffOptions o = closed();
    o.method = DiffMethod::CrossChecked;
    return o;
  }

  /// Runs `body`, which fills computed/residual; exceptions become failures.
  void check(std::string id, std::string anchor, std::string expected, std::string provenance,
             double tolerance, const std::function<void(VerificationReport&)>& body) {
    VerificationReport r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.expected = std::move(expected);
    r.provenance = std::move(provenance);
    r.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(r);
      if (r.computed.empty()) r.computed = num(r.residual);
      r.passed = std::isfinite(r.residual) && r.residual < r.tolerance;
    } catch (const std::exception& e) {
      r.computed = std::string("error: ") + e.what();
      r.residual = std::numeric_limits<double>::infinity();
      r.passed = false;
    }
    if (config.timing) {
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    result.checks.push_back(std::move(r));
  }
};

// ---------------------------------------------------------------------------
// octonion

void octonion_suite(Context& ctx) {
  ctx.check("octonion.epsilon.table", "e_i e_j = -delta_ij e_0 + eps_ijk e_k",
            "343 entries from the seven positive triples", "oracle", 1.0, [](auto& r) {
              static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                                {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
              static const int perms[6][4] = {{0, 1, 2, 1},  {1, 2, 0, 1},  {2, 0, 1, 1},
                                              {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
              int oracle[8][8][8] = {};
              for (const auto& t : triples) {
                for (const auto& p : perms) oracle[t[p[0]]][t[p[1]]][t[p[2]]] = p[3];
              }
              int mismatches = 0;
              for (int i = 1; i < 8; ++i)
                for (int j = 1; j < 8; ++j)
                  for (int k = 1; k < 8; ++k)
                    if (epsilon_table()(i, j, k) != oracle[i][j][k]) ++mismatches;
              r.residual = mismatches;
              r.computed = std::to_string(mismatches) + " mismatches of 343";
            });

  ctx.check("octonion.basis.products", "e_0 is the unit; e_i e_j = -delta_ij e_0 + eps_ijk e_k",
            "64 basis products", "closed-form", ctx.config.tol, [](auto& r) {
              double worst = 0.0;
              for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) {
                  VectorXd want = VectorXd::Zero(8);
                  if (i == 0) {
                    want(j) = 1.0;
                  } else if (j == 0) {
                    want(i) = 1.0;
                  } else if (i == j) {
                    want(0) = -1.0;
                  } else {
                    const int k = epsilon_table().third(i, j);
                    want(k) = epsilon_table()(i, j, k);
                  }
                  const VectorXd got = mul(Octonion::basis(i), Octonion::basis(j)).to_vector();
                  worst = std::max(worst, (got - want).cwiseAbs().maxCoeff());
                }
              }
              r.residual = worst;
            });

  std::mt19937_64 rng(derive_seed(ctx.config.seed, 1));
  std::normal_distribution<double> gauss;
  auto draw = [&](int rows, int cols) {
    MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = gauss(rng);
    return m;
  };

  ctx.check("octonion.norm.multiplicative", "|ab| = |a| |b|", "1000 random pairs, relative error",
            "identity", 1e-12, [&](auto& r) {
              double worst = 0.0;
              for (int s = 0; s < 1000; ++s) {
                const Octonion a = Octonion::from_vector(draw(8, 1).col(0));
                const Octonion b = Octonion::from_vector(draw(8, 1).col(0));
                const double scale = a.norm() * b.norm();
                worst = std::max(worst, std::abs(mul(a, b).norm() - scale) / scale);
              }
              r.residual = worst;
            });

  ctx.check("octonion.triple.swap", "<X(u,v,w), z> = -<X(z,v,w), u>",
            "1000 random orthonormal quadruples", "identity", 1e-12, [&](auto& r) {
              double worst = 0.0;
              for (int s = 0; s < 1000; ++s) {
                const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(draw(8, 4)).householderQ() *
                                   MatrixXd::Identity(8, 4);
                const VectorXd u = q.col(0), v = q.col(1), w = q.col(2), z = q.col(3);
                worst = std::max(worst, std::abs(cross3(u, v, w).dot(z) + cross3(z, v, w).dot(u)));
              }
              r.residual = worst;
            });

  ctx.check("octonion.triple.unit", "X(u,v,w) is a unit vector orthogonal to u, v, w",
            "1000 random orthonormal triples", "identity", 1e-12, [&](auto& r) {
              double worst = 0.0;
              for (int s = 0; s < 1000; ++s) {
                const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(draw(8, 3)).householderQ() *
                                   MatrixXd::Identity(8, 3);
                const VectorXd x = cross3(q.col(0), q.col(1), q.col(2));
                worst = std::max({worst, std::abs(x.norm() - 1.0), (q.transpose() * x).cwiseAbs().maxCoeff()});
              }
              r.residual = worst;
            });

  ctx.check("octonion.double.triple", "e_i x e_j = X(e_0, e_i, e_j)", "i, j = 1..7",
            "closed-form", ctx.config.tol, [](auto& r) {
              double worst = 0.0;
              for (int i = 1; i < 8; ++i) {
                for (int j = 1; j < 8; ++j) {
                  const Octonion a = cross2(Octonion::basis(i), Octonion::basis(j));
                  const Octonion b = cross3(Octonion::basis(0), Octonion::basis(i), Octonion::basis(j));
                  worst = std::max(worst, (a.to_vector() - b.to_vector()).cwiseAbs().maxCoeff());
                }
              }
              r.residual = worst;
            });
}

// ---------------------------------------------------------------------------
// closed-form value tables at the canonical base point

struct ValueRow {
  std::string table;
  int i, k, j, l;  ///< -1 when unused
  MatrixXd expected;
  MatrixXd computed;
};

struct ValueTable {
  std::string name;
  std::string anchor;
  std::function<std::vector<ValueRow>(const DiffOptions&)> entries;
};

MatrixXd col(const VectorXd& v) { return MatrixXd(v); }

std::vector<ValueTable> sigma3_tables() {
  const Section s = make_sigma3();
  const OrientedSubspace p0 = OrientedSubspace::canonical(3, 8);
  auto e = [](int i) { return unit(8, i); };
  std::vector<ValueTable> out;

  out.push_back({"sigma3.first", "nabla_{e_j^l} sigma3 = X(e_j, e_{l+1}, e_{l+2}) + delta_j3 e_l",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 3; ++l) {
                     for (int j = 3; j < 8; ++j) {
                       VectorXd want = cross3(e(j), e((l + 1) % 3), e((l + 2) % 3));
                       if (j == 3) want += e(l);
                       rows.push_back({"sigma3.first", -1, -1, j, l, col(want),
                                       nabla(s, basis_tangent(p0, l, j), opt)});
                     }
                   }
                   return rows;
                 }});

  out.push_back({"sigma3.second.same-direction",
                 "nabla_{e_j^l} nabla_{E_j^l} sigma3 = (delta_j3 - 1) e_3",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 3; ++l) {
                     for (int j = 3; j < 8; ++j) {
                       const VectorXd want = ((j == 3 ? 1.0 : 0.0) - 1.0) * e(3);
                       rows.push_back({"sigma3.second.same-direction", j, l, j, l, col(want),
                                       second_nabla(s, surface(3, 8, j, l, j, l), opt)});
                     }
                   }
                   return rows;
                 }});

  out.push_back({"sigma3.second.same-level", "nabla_{e_i^l} nabla_{E_j^l} sigma3 = delta_j3 e_i (i != j)",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 3; ++l) {
                     for (int i = 3; i < 8; ++i) {
                       for (int j = 3; j < 8; ++j) {
                         if (i == j) continue;
                         const VectorXd want = (j == 3 ? 1.0 : 0.0) * e(i);
                         rows.push_back({"sigma3.second.same-level", i, l, j, l, col(want),
                                         second_nabla(s, surface(3, 8, i, l, j, l), opt)});
                       }
                     }
                   }
                   return rows;
                 }});

  out.push_back({"sigma3.second.cross-level",
                 "nabla_{e_i^k} nabla_{E_j^l} sigma3 = r_kl (I - e_k e^k - e_l e^l) X(e_i, e_j, e_m)",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int k = 0; k < 3; ++k) {
                     for (int l = 0; l < 3; ++l) {
                       if (k == l) continue;
                       const auto [m, r] = completion(k, l);
                       MatrixXd proj = MatrixXd::Identity(8, 8) - outer(8, k, k) - outer(8, l, l);
                       for (int i = 3; i < 8; ++i) {
                         for (int j = 3; j < 8; ++j) {
                           const VectorXd want = r * proj * cross3(e(i), e(j), e(m));
                           rows.push_back({"sigma3.second.cross-level", i, k, j, l, col(want),
                                           second_nabla(s, surface(3, 8, i, k, j, l), opt)});
                         }
                       }
                     }
                   }
                   return rows;
                 }});
  return out;
}

ValueTable sigma3_curvature_table() {
  const Section s = make_sigma3();
  const TangentFrame frame(OrientedSubspace::canonical(3, 8));
  return {"sigma3.curvature", "R_{e_i^k e_j^l} sigma3 = delta_kl (delta_i3 e_j - delta_j3 e_i)",
          [=](const DiffOptions& opt) {
            std::vector<ValueRow> rows;
            for (int k = 0; k < 3; ++k) {
              for (int l = 0; l < 3; ++l) {
                for (int i = 3; i < 8; ++i) {
                  for (int j = 3; j < 8; ++j) {
                    VectorXd want = VectorXd::Zero(8);
                    if (k == l) {
                      if (i == 3) want += unit(8, j);
                      if (j == 3) want -= unit(8, i);
                    }
                    rows.push_back({"sigma3.curvature", i, k, j, l, col(want),
                                    curvature(s, frame, i, k, j, l, opt)});
                  }
                }
              }
            }
            return rows;
          }};
}

std::vector<ValueTable> J_tables() {
  const Section s = make_J();
  const OrientedSubspace p0 = OrientedSubspace::canonical(2, 8);
  const MatrixXd j01 = J_basis(0, 1);
  const MatrixXd pi0 = projector(p0);
  std::vector<ValueTable> out;

  out.push_back({"J.first",
                 "nabla_{e_j^l} J = (-1)^l (J_{e_j ^ e_{l+1}} - (e_l e^l) o J_{e_j ^ e_{l+1}})",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 2; ++l) {
                     for (int j = 2; j < 8; ++j) {
                       const MatrixXd jj = J_basis(j, (l + 1) % 2);
                       const double sign = l == 0 ? 1.0 : -1.0;
                       const MatrixXd want = sign * (jj - anticommutator(outer(8, l, l), jj));
                       rows.push_back({"J.first", -1, -1, j, l, want,
                                       nabla(s, basis_tangent(p0, l, j), opt)});
                     }
                   }
                   return rows;
                 }});

  out.push_back({"J.second.same-direction",
                 "nabla_{e_j^l} nabla_{E_j^l} J = -J_{e_0 ^ e_1} + (e_j e^j) o J_{e_0 ^ e_1}",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 2; ++l) {
                     for (int j = 2; j < 8; ++j) {
                       const MatrixXd want = -j01 + anticommutator(outer(8, j, j), j01);
                       rows.push_back({"J.second.same-direction", j, l, j, l, want,
                                       second_nabla(s, surface(2, 8, j, l, j, l), opt)});
                     }
                   }
                   return rows;
                 }});

  out.push_back({"J.second.same-level",
                 "nabla_{e_i^l} nabla_{E_j^l} J = (e_i e^j) J_{e_0 ^ e_1} + J_{e_0 ^ e_1} (e_j e^i) (i != j)",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 2; ++l) {
                     for (int i = 2; i < 8; ++i) {
                       for (int j = 2; j < 8; ++j) {
                         if (i == j) continue;
                         const MatrixXd want = outer(8, i, j) * j01 + j01 * outer(8, j, i);
                         rows.push_back({"J.second.same-level", i, l, j, l, want,
                                         second_nabla(s, surface(2, 8, i, l, j, l), opt)});
                       }
                     }
                   }
                   return rows;
                 }});

  out.push_back({"J.second.cross-level",
                 "nabla_{e_i^{l+1}} nabla_{E_j^l} J = (-1)^{l+1} pi_0 J_{e_i ^ e_j} pi_0",
                 [=](const DiffOptions& opt) {
                   std::vector<ValueRow> rows;
                   for (int l = 0; l < 2; ++l) {
                     const int k = (l + 1) % 2;
                     const double sign = l == 0 ? -1.0 : 1.0;
                     for (int i = 2; i < 8; ++i) {
                       for (int j = 2; j < 8; ++j) {
                         const MatrixXd want = sign * pi0 * J_basis(i, j) * pi0;
                         rows.push_back({"J.second.cross-level", i, k, j, l, want,
                                         second_nabla(s, surface(2, 8, i, k, j, l), opt)});
                       }
                     }
                   }
                   return rows;
                 }});
  return out;
}

ValueTable J_curvature_table() {
  const Section s = make_J();
  const TangentFrame frame(OrientedSubspace::canonical(2, 8));
  const MatrixXd j01 = J_basis(0, 1);
  return {"J.curvature",
          "R_{e_i^0 e_j^1} J = 0 and R_{e_i^l e_j^l} J = [J_{e_0 ^ e_1}, A^{i,j}]",
          [=](const DiffOptions& opt) {
            std::vector<ValueRow> rows;
            for (int k = 0; k < 2; ++k) {
              for (int l = 0; l < 2; ++l) {
                for (int i = 2; i < 8; ++i) {
                  for (int j = 2; j < 8; ++j) {
                    MatrixXd want = MatrixXd::Zero(8, 8);
                    if (k == l) {
                      const MatrixXd a = skew_basis(8, i, j);
                      want = j01 * a - a * j01;
                    }
                    rows.push_back({"J.curvature", i, k, j, l, want,
                                    curvature(s, frame, i, k, j, l, opt)});
                  }
                }
              }
            }
            return rows;
          }};
}

void table_checks(Context& ctx, const ValueTable& table) {
  auto run = [&](const std::string& suffix, const DiffOptions& opt, double tol, const char* prov) {
    ctx.check(table.name + suffix, table.anchor, "all index combinations at the base point", prov,
              tol, [&](auto& r) {
                const auto rows = table.entries(opt);
                double worst = 0.0;
                for (const auto& row : rows) {
                  worst = std::max(worst, (row.computed - row.expected).cwiseAbs().maxCoeff());
                }
                r.residual = worst;
                r.computed = std::to_string(rows.size()) + " entries, max |diff| " + num(worst);
              });
  };
  run("", ctx.closed(), ctx.config.tol, "closed-form");
  run(".fd", ctx.numeric(), ctx.config.fd_tol, "closed-form");
}

void lemmas_sigma3_suite(Context& ctx) {
  for (const auto& t : sigma3_tables()) table_checks(ctx, t);
}

void lemmas_J_suite(Context& ctx) {
  for (const auto& t : J_tables()) table_checks(ctx, t);
}

// ---------------------------------------------------------------------------
// Laplacians, curvature, criticality

struct Invariant {
  const char* name;
  double eigenvalue;
};

constexpr Invariant kInvariant[] = {{"sigma3", -12.0}, {"sigma2", -8.0}, {"J", -8.0}};

void laplacian_suite(Context& ctx) {
  for (const auto& inv : kInvariant) {
    const Section s = section_by_name(inv.name);
    const std::string base = std::string("laplacian.") + inv.name;
    const std::string anchor = "Delta " + std::string(inv.name) + " = " + num(inv.eigenvalue) + " " + inv.name;
    const OrientedSubspace p0 = OrientedSubspace::canonical(s.k(), s.n());

    auto at_base = [&](const std::string& id, const DiffOptions& opt, double tol) {
      ctx.check(id, anchor, "f = " + num(inv.eigenvalue) + ", residual 0", "closed-form", tol,
                [&](auto& r) {
                  const LaplacianResult lap = rough_laplacian(s, p0, opt);
                  r.residual = std::max(std::abs(lap.eigen_estimate - inv.eigenvalue), lap.residual);
                  r.computed = "f = " + num(lap.eigen_estimate) + ", residual " + num(lap.residual);
                });
    };
    at_base(base + ".base", ctx.closed(), ctx.config.tol);
    at_base(base + ".base.fd", ctx.numeric(), ctx.config.fd_tol);

    ctx.check(base + ".random", anchor,
              std::to_string(ctx.config.laplacian_points) + " random points, constant f",
              "closed-form", ctx.config.fd_tol, [&](auto& r) {
                std::mt19937_64 rng(derive_seed(ctx.config.seed, 100));
                double lo = INFINITY, hi = -INFINITY, worst_res = 0.0;
                for (int i = 0; i < ctx.config.laplacian_points; ++i) {
                  const LaplacianResult lap = rough_laplacian(s, random_point(s.n(), s.k(), rng), ctx.closed());
                  lo = std::min(lo, lap.eigen_estimate);
                  hi = std::max(hi, lap.eigen_estimate);
                  worst_res = std::max(worst_res, lap.residual);
                }
                const double off = std::max(std::abs(lo - inv.eigenvalue), std::abs(hi - inv.eigenvalue));
                r.residual = std::max({hi - lo, off, worst_res});
                r.computed = "f in [" + num(lo) + ", " + num(hi) + "], spread " + num(hi - lo) +
                             ", max residual " + num(worst_res);
              });
  }
}

void curvature_suite(Context& ctx) {
  table_checks(ctx, sigma3_curvature_table());
  table_checks(ctx, J_curvature_table());

  for (const auto& inv : kInvariant) {
    const Section s = section_by_name(inv.name);
    ctx.check(std::string("curvature.") + inv.name + ".skew",
              "R_{X,Y} = -R_{Y,X} and <R_{X,Y} sigma, sigma> = 0",
              std::to_string(ctx.config.random_points) + " random points and direction pairs",
              "identity", ctx.config.fd_tol, [&](auto& r) {
                std::mt19937_64 rng(derive_seed(ctx.config.seed, 200));
                double worst = 0.0;
                for (int p = 0; p < ctx.config.random_points; ++p) {
                  const TangentFrame frame(random_point(s.n(), s.k(), rng));
                  std::uniform_int_distribution<int> pick(0, frame.dimension() - 1);
                  const TangentVector x = frame.direction(pick(rng));
                  const TangentVector y = frame.direction(pick(rng));
                  const MatrixXd rxy = curvature(s, x, y, ctx.closed());
                  const MatrixXd ryx = curvature(s, y, x, ctx.closed());
                  const MatrixXd sig = s.value(frame.point());
                  worst = std::max({worst, (rxy + ryx).cwiseAbs().maxCoeff(),
                                    std::abs(fiber_inner(s.kind(), rxy, sig))});
                }
                r.residual = worst;
              });
  }
}

double max_criticality(const Section& s, const OrientedSubspace& p, const DiffOptions& opt) {
  const TangentFrame frame(p);
  double worst = 0.0;
  for (int a = 0; a < frame.dimension(); ++a) {
    worst = std::max(worst, std::abs(criticality_form(s, frame.direction(a), opt)));
  }
  return worst;
}

void criticality_suite(Context& ctx) {
  for (const auto& inv : kInvariant) {
    const Section s = section_by_name(inv.name);
    const std::string id = std::string("criticality.") + inv.name;
    const std::string anchor = std::string("R_") + inv.name + "(X) = sum_a <R_{X,e_a} sigma, nabla_{e_a} sigma> = 0";
    const OrientedSubspace p0 = OrientedSubspace::canonical(s.k(), s.n());
    ctx.check(id + ".base", anchor, "0 on every basis direction", "closed-form", ctx.config.tol,
              [&](auto& r) { r.residual = max_criticality(s, p0, ctx.closed()); });
    ctx.check(id + ".base.fd", anchor, "0 on every basis direction", "closed-form",
              ctx.config.fd_tol, [&](auto& r) { r.residual = max_criticality(s, p0, ctx.numeric()); });
    ctx.check(id + ".random", anchor,
              "0 on every basis direction at " + std::to_string(ctx.config.random_points) + " random points",
              "closed-form", ctx.config.fd_tol, [&](auto& r) {
                std::mt19937_64 rng(derive_seed(ctx.config.seed, 300));
                double worst = 0.0;
                for (int p = 0; p < ctx.config.random_points; ++p) {
                  worst = std::max(worst, max_criticality(s, random_point(s.n(), s.k(), rng), ctx.closed()));
                }
                r.residual = worst;
              });
  }
}

// ---------------------------------------------------------------------------
// parallel obstruction, energy, diagram, extensions

void parallel_obstruction_suite(Context& ctx) {
  using std::numbers::pi;
  const std::pair<const char*, double> ts[] = {{"pi/6", pi / 6.0}, {"pi/4", pi / 4.0}, {"pi/3", pi / 3.0}};
  for (const auto& [label, t] : ts) {
    ctx.check(std::string("parallel.transport.t=") + label,
              "parallel transport of v along gamma_a is -sin t u_a + cos t v", "closed form", "closed-form",
              1e-7, [&](auto& r) {
                const ObstructionSample s = parallel_obstruction(t);
                r.residual = s.transport_error;
              });
  }
  ctx.check("parallel.obstruction", "|D/da V(c(a))| = |pi_a(-sin t v_a)| = sin^2 t",
            "sin^2 t for t = pi/6, pi/4, pi/3", "oracle", 1e-5, [&](auto& r) {
              VerificationReport inner = parallel_obstruction_report();
              r.residual = inner.passed ? inner.residual : std::max(inner.residual, r.tolerance);
              r.computed = inner.computed;
            });
  ctx.check("parallel.obstruction.t=0", "degenerate loop", "0", "identity", 1e-12, [&](auto& r) {
    const ObstructionSample s = parallel_obstruction(0.0);
    r.residual = s.loop_derivative;
  });
}

void energy_suite(Context& ctx) {
  const Invariant bending[] = {{"sigma3", 12.0}, {"sigma2", 8.0}, {"J", 8.0}};
  for (const auto& inv : bending) {
    const Section s = section_by_name(inv.name);
    const double dim = s.k() * (s.n() - s.k());
    const double energy = 0.5 * (dim + inv.eigenvalue);
    const std::string id = std::string("energy.") + inv.name;

    ctx.check(id + ".unit", "sigma(P) is a unit vector of the fibre over P",
              "unit norm and fibre constraint at " + std::to_string(ctx.config.samples) + " samples",
              "identity", ctx.config.fiber_tol, [&](auto& r) {
                std::mt19937_64 rng(derive_seed(ctx.config.seed, 400));
                double worst = 0.0;
                for (int p = 0; p < ctx.config.samples; ++p) {
                  const OrientedSubspace pt = random_point(s.n(), s.k(), rng);
                  const MatrixXd v = s.value(pt);
                  worst = std::max({worst, std::abs(fiber_norm(s.kind(), v) - 1.0),
                                    fiber_constraint_residual(s.kind(), pt, v)});
                }
                r.residual = worst;
              });

    ctx.check(id + ".bending", "sum_a |nabla_{e_a} sigma|^2 is constant",
              "mean " + num(inv.eigenvalue) + ", spread 0 over " + std::to_string(ctx.config.samples) + " samples",
              "oracle", ctx.config.fd_tol, [&](auto& r) {
                const EnergyEstimate est =
                    estimate_energy(s, ctx.config.samples, derive_seed(ctx.config.seed, 400), ctx.closed());
                r.residual = std::max(std::abs(est.mean_density - inv.eigenvalue), est.stddev);
                r.computed = "mean " + num(est.mean_density) + ", stddev " + num(est.stddev) +
                             ", energy density " + num(est.energy_density);
              });

    ctx.check(id + ".density", "energy density = (dim + bending) / 2", num(energy), "oracle",
              ctx.config.fd_tol, [&](auto& r) {
                const EnergyEstimate est =
                    estimate_energy(s, ctx.config.samples, derive_seed(ctx.config.seed, 400), ctx.closed());
                r.residual = std::abs(est.energy_density - energy);
                r.computed = num(est.energy_density);
              });

    ctx.check(id + ".identity", "<Delta sigma, sigma> = -|nabla sigma|^2 pointwise",
              "finite-difference Laplacian against closed-form gradients", "identity",
              ctx.config.fd_tol, [&](auto& r) {
                std::mt19937_64 rng(derive_seed(ctx.config.seed, 410));
                double worst = 0.0;
                for (int p = 0; p < ctx.config.random_points; ++p) {
                  const OrientedSubspace pt = random_point(s.n(), s.k(), rng);
                  const double b = bending_density(s, pt, ctx.closed());
                  const LaplacianResult lap = rough_laplacian(s, pt, ctx.numeric());
                  worst = std::max(worst, std::abs(b + fiber_inner(s.kind(), lap.value, s.value(pt))));
                }
                r.residual = worst;
              });

    ctx.check(std::string("variation.") + inv.name, "dE/dt(0) = 0 for every variation through sections",
              std::to_string(ctx.config.variations) + " random variations, |z| < 3", "measured", 3.0,
              [&](auto& r) {
                double worst = 0.0;
                int inconclusive = 0;
                for (int v = 0; v < ctx.config.variations; ++v) {
                  const Variation var = random_variation(s, derive_seed(ctx.config.seed, 500 + v));
                  const FirstVariation fv = first_variation(var, 1e-3, ctx.config.samples,
                                                            derive_seed(ctx.config.seed, 600 + v), ctx.closed());
                  worst = std::max(worst, std::abs(fv.z_score()));
                  if (fv.inconclusive) ++inconclusive;
                }
                r.residual = worst;
                r.computed = "max |z| " + num(worst) + ", " + std::to_string(inconclusive) + " inconclusive";
              });
  }

  ctx.check("variation.control", "a perturbed sigma3 is not critical",
            "some variation with |z| > 5, residual 5 / max |z|", "measured", 1.0, [&](auto& r) {
              const Section control = random_variation(make_sigma3(), derive_seed(ctx.config.seed, 700)).at(0.5);
              double best = 0.0;
              for (int v = 0; v < ctx.config.variations; ++v) {
                const Variation var = random_variation(control, derive_seed(ctx.config.seed, 710 + v));
                const FirstVariation fv = first_variation(var, 1e-3, ctx.config.samples,
                                                          derive_seed(ctx.config.seed, 800 + v), ctx.closed());
                best = std::max(best, std::abs(fv.z_score()));
              }
              r.computed = "max |z| " + num(best);
              r.residual = best > 0.0 ? 5.0 / best : INFINITY;
            });
}

void diagram_suite(Context& ctx) {
  ctx.check("diagram.phi", "Phi(sigma2(P)) = sigma3(phi(P))", "200 random points of G(2,7)",
            "identity", 1e-10, [&](auto& r) {
              std::mt19937_64 rng(derive_seed(ctx.config.seed, 900));
              double worst = 0.0;
              for (int i = 0; i < 200; ++i) {
                const OrientedSubspace p = random_point(7, 2, rng);
                const NormalElement lhs = bundle_morphism_phi(sigma2(p));
                const NormalElement rhs = sigma3(embed_phi(p));
                worst = std::max({worst, (lhs.vec() - rhs.vec()).cwiseAbs().maxCoeff(),
                                  (lhs.base().frame() - rhs.base().frame()).cwiseAbs().maxCoeff()});
              }
              r.residual = worst;
            });
}

void extensions_suite(Context& ctx) {
  for (const char* name : {"hopf", "hopf:3", "acs6"}) {
    const Section s = section_by_name(name);
    const std::string id = std::string("extension.") + name;
    std::mt19937_64 rng(derive_seed(ctx.config.seed, 1000));
    std::vector<OrientedSubspace> points;
    for (int p = 0; p < ctx.config.random_points; ++p) points.push_back(random_point(s.n(), s.k(), rng));

    double lo = INFINITY, hi = -INFINITY;
    ctx.check(id + ".laplacian", "Delta sigma = f sigma",
              "residual 0 at " + std::to_string(points.size()) + " random points", "identity",
              ctx.config.fd_tol, [&](auto& r) {
                double worst = 0.0;
                for (const auto& p : points) {
                  const LaplacianResult lap = rough_laplacian(s, p, ctx.numeric());
                  worst = std::max(worst, lap.residual);
                  lo = std::min(lo, lap.eigen_estimate);
                  hi = std::max(hi, lap.eigen_estimate);
                }
                r.residual = worst;
              });
    ctx.check(id + ".criticality", "R_sigma vanishes on a basis",
              "0 at " + std::to_string(points.size()) + " random points", "identity", ctx.config.fd_tol,
              [&](auto& r) {
                double worst = 0.0;
                for (const auto& p : points) worst = std::max(worst, max_criticality(s, p, ctx.numeric()));
                r.residual = worst;
              });
    ctx.check(id + ".eigenvalue", "f in Delta sigma = f sigma", "reported, not asserted", "measured",
              INFINITY, [&](auto& r) {
                r.residual = 0.0;
                r.computed = "f in [" + num(lo) + ", " + num(hi) + "]";
              });
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"octonion", octonion_suite},
      {"lemmas-sigma3", lemmas_sigma3_suite},
      {"lemmas-J", lemmas_J_suite},
      {"laplacians", laplacian_suite},
      {"curvature", curvature_suite},
      {"criticality", criticality_suite},
      {"parallel-obstruction", parallel_obstruction_suite},
      {"energy", energy_suite},
      {"diagram-phi", diagram_suite},
      {"extensions", extensions_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& suite, const Config& config) {
  SuiteResult result;
  Context ctx{config, result};
  const auto start = std::chrono::steady_clock::now();
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      fn(ctx);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (config.timing) {
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return result;
}

SuiteResult run_suites(const Config& config) {
  SuiteResult all;
  for (const auto& suite : config.suites) {
    SuiteResult one = run_suite(suite, config);
    all.checks.insert(all.checks.end(), one.checks.begin(), one.checks.end());
    all.seconds += one.seconds;
  }
  return all;
}

nlohmann::ordered_json to_json(const Config& c) {
  return {{"fd_step", c.fd_step},       {"richardson_tol", c.richardson_tol},
          {"fiber_tol", c.fiber_tol},   {"samples", c.samples},
          {"seed", c.seed},             {"tol", c.tol},
          {"fd_tol", c.fd_tol},         {"laplacian_points", c.laplacian_points},
          {"random_points", c.random_points}, {"variations", c.variations},
          {"suites", c.suites}};
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  auto finite = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  };
  return {{"id", r.id},
          {"anchor", r.anchor},
          {"expected", r.expected},
          {"provenance", r.provenance},
          {"computed", r.computed},
          {"residual", finite(r.residual)},
          {"tolerance", finite(r.tolerance)},
          {"passed", r.passed},
          {"seconds", r.seconds}};
}

nlohmann::ordered_json to_json(const Config& config, const SuiteResult& result) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : result.checks) checks.push_back(to_json(r));
  return {{"config", to_json(config)},
          {"checks", std::move(checks)},
          {"summary", {{"passed", result.passed()}, {"failed", result.failed()}, {"seconds", result.seconds}}}};
}

void write_table(std::ostream& out, const SuiteResult& result) {
  std::size_t width = 5;
  for (const auto& r : result.checks) width = std::max(width, r.id.size());
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  status  "
      << std::setw(12) << "residual" << "  " << std::setw(10) << "tolerance" << "  computed\n";
  for (const auto& r : result.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << r.id << "  "
        << (r.passed ? "PASS  " : "FAIL  ") << "  " << std::setw(12) << num(r.residual) << "  "
        << std::setw(10) << num(r.tolerance) << "  " << r.computed << "\n";
  }
  out << result.passed() << " passed, " << result.failed() << " failed\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string flatten(const MatrixXd& m) {
  std::string out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!out.empty()) out += ' ';
      out += num(std::abs(m(i, j)) < 1e-14 ? 0.0 : m(i, j));
    }
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const SuiteResult& result) {
  out << "id,anchor,expected,provenance,computed,residual,tolerance,passed,seconds\n";
  for (const auto& r : result.checks) {
    out << csv_field(r.id) << ',' << csv_field(r.anchor) << ',' << csv_field(r.expected) << ','
        << csv_field(r.provenance) << ',' << csv_field(r.computed) << ',' << num(r.residual) << ','
        << num(r.tolerance) << ',' << (r.passed ? "true" : "false") << ',' << num(r.seconds) << "\n";
  }
}

const std::vector<std::string>& export_kinds() {
  static const std::vector<std::string> kinds{"epsilon-table", "tangent-basis", "lemma-values"};
  return kinds;
}

void export_table(const std::string& kind, std::ostream& out, const Config& config) {
  if (kind == "epsilon-table") {
    out << "i,j,k,epsilon\n";
    for (int i = 1; i < 8; ++i)
      for (int j = 1; j < 8; ++j)
        for (int k = 1; k < 8; ++k) {
          const int e = epsilon_table()(i, j, k);
          out << i << ',' << j << ',' << k << ',' << (e > 0 ? "+1" : e < 0 ? "-1" : "0") << "\n";
        }
    return;
  }
  if (kind == "tangent-basis") {
    const TangentFrame frame(OrientedSubspace::canonical(2, 8));
    out << "a,l,j,nonzero_entries\n";
    for (int a = 0; a < frame.dimension(); ++a) {
      const auto [l, j] = frame.indices(a);
      const MatrixXd& m = frame.direction(a).mat();
      std::string entries;
      for (int c = 0; c < m.cols(); ++c)
        for (int rr = 0; rr < m.rows(); ++rr)
          if (m(rr, c) != 0.0) entries += (entries.empty() ? "" : " ") + std::string("(") +
                                          std::to_string(rr) + ";" + std::to_string(c) + ")=" + num(m(rr, c));
      out << a << ',' << l << ',' << j << ',' << entries << "\n";
    }
    return;
  }
  if (kind == "lemma-values") {
    DiffOptions opt;
    opt.fd = {config.fd_step, config.richardson_tol};
    std::vector<ValueTable> tables = sigma3_tables();
    for (auto& t : J_tables()) tables.push_back(std::move(t));
    tables.push_back(sigma3_curvature_table());
    tables.push_back(J_curvature_table());
    out << "table,i,k,j,l,residual,expected,computed\n";
    auto idx = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
    for (const auto& t : tables) {
      for (const auto& row : t.entries(opt)) {
        out << row.table << ',' << idx(row.i) << ',' << idx(row.k) << ',' << idx(row.j) << ','
            << idx(row.l) << ',' << num((row.computed - row.expected).cwiseAbs().maxCoeff()) << ','
            << flatten(row.expected) << ',' << flatten(row.computed) << "\n";
      }
    }
    return;
  }
  throw std::invalid_argument("unknown export kind '" + kind + "'");
}

}  // namespace octograss::cli
