#include "cuntzpos/certificate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Dense>

namespace cuntzpos {

namespace {

std::size_t block_count(const HermMatrix& m, std::size_t p) {
  if (p == 0 || m.size() % p != 0 || m.size() / p < 2) {
    throw ShapeError("matrix of size " + std::to_string(m.size()) + " is not a block matrix over p=" +
                     std::to_string(p));
  }
  return m.size() / p;
}

/// diag(B, -B, ..., -B) with `blocks` diagonal blocks.
CMatrix kernel_embed(const CMatrix& b, std::size_t blocks) {
  const std::size_t p = b.rows();
  CMatrix out(blocks * p, blocks * p);
  out.set_block(0, 0, b);
  for (std::size_t k = 1; k < blocks; ++k) out.set_block(k * p, k * p, -b);
  return out;
}

/// Positive definite element diag(nI, I, ..., I) of {Y_00 = sum Y_kk}.
CMatrix kernel_interior(std::size_t blocks, std::size_t p) {
  CMatrix z = CMatrix::identity(blocks * p);
  for (std::size_t i = 0; i < p; ++i) z(i, i) = cplx(static_cast<double>(blocks - 1));
  return z;
}

/// Orthogonal projection onto {Y_00 = sum Y_kk}.
CMatrix project_kernel_orthogonal(const CMatrix& y, std::size_t blocks, std::size_t p) {
  CMatrix r = y.block(0, 0, p, p);
  for (std::size_t k = 1; k < blocks; ++k) r -= y.block(k * p, k * p, p, p);
  return y - kernel_embed(r * cplx(1.0 / static_cast<double>(blocks)), blocks);
}

HermMatrix random_hermitian(std::size_t p, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(p, p);
  for (auto& x : m.data()) x = cplx(g(rng), g(rng)) * scale;
  return hermitian_part(m);
}

}  // namespace

HermMatrix criterion_matrix(const HermSElement& e) {
  const std::size_t p = e.p;
  const std::size_t blocks = static_cast<std::size_t>(e.n) + 1;
  CMatrix m(blocks * p, blocks * p);
  for (std::size_t k = 0; k < blocks; ++k) m.set_block(k * p, k * p, e.a0.mat());
  for (std::size_t k = 1; k < blocks; ++k) {
    const CMatrix twice = e.a[k - 1] * cplx(2.0);
    m.set_block(k * p, 0, twice);
    m.set_block(0, k * p, twice.adjoint());
  }
  return HermMatrix(m);
}

HermMatrix kernel_shift(const HermMatrix& m, const HermMatrix& b) {
  const std::size_t blocks = block_count(m, b.size());
  return HermMatrix(m.mat() + kernel_embed(b.mat(), blocks));
}

CMatrix kernel_adjoint(const HermMatrix& y, std::size_t p) {
  const std::size_t blocks = block_count(y, p);
  CMatrix r = y.mat().block(0, 0, p, p);
  for (std::size_t k = 1; k < blocks; ++k) r -= y.mat().block(k * p, k * p, p, p);
  return r;
}

double cert_tolerance(const HermSElement& e, double rel) {
  return rel * std::max(1.0, frobenius_norm(criterion_matrix(e).mat()));
}

double dual_tolerance(const HermSElement& e) { return 1e-7 * frobenius_norm(criterion_matrix(e).mat()); }

bool verify_primal(const HermSElement& e, const HermMatrix& b, double tol) {
  if (b.size() != e.p) return false;
  return min_eig(kernel_shift(criterion_matrix(e), b)) >= -tol;
}

bool verify_dual(const HermSElement& e, const HermMatrix& y, double tol) {
  const auto m = criterion_matrix(e);
  if (y.size() != m.size()) return false;
  const double tr = y.mat().trace().real();
  if (!(tr > 0.0)) return false;
  const HermMatrix yn = (1.0 / tr) * y;
  if (min_eig(yn) < -tol) return false;
  const double blocks = static_cast<double>(e.n + 1);
  if (frobenius_norm(kernel_adjoint(yn, e.p)) > tol * blocks * static_cast<double>(e.p)) return false;
  return inner(yn.mat(), m.mat()) <= -dual_tolerance(e);
}

std::optional<HermMatrix> repair_dual(const HermMatrix& y, int n, std::size_t p) {
  const std::size_t blocks = static_cast<std::size_t>(n) + 1;
  if (y.size() != blocks * p) throw ShapeError("repair_dual: size mismatch");
  CMatrix yl = hermitian_part(project_kernel_orthogonal(y.mat(), blocks, p)).mat();
  const double lo = min_eig(HermMatrix(yl));
  if (lo < 0.0) yl += kernel_interior(blocks, p) * cplx(-lo);
  const double tr = yl.trace().real();
  if (!(tr > 0.0)) return std::nullopt;
  return hermitian_part(yl * cplx(1.0 / tr));
}

PrimalSearch search_primal(const HermSElement& e, const SolverOptions& opts) {
  const HermMatrix m = criterion_matrix(e);
  const std::size_t p = e.p;
  const std::size_t blocks = static_cast<std::size_t>(e.n) + 1;
  const double m_norm = frobenius_norm(m.mat());
  const double tol = cert_tolerance(e, opts.cert_rel);
  const double conv = opts.conv_rel * std::max(m_norm, 1e-300);

  std::mt19937_64 rng(opts.seed);
  std::vector<HermMatrix> starts{HermMatrix::zeros(p)};
  {
    CMatrix diag(p, p);
    for (std::size_t i = 0; i < p; ++i) diag(i, i) = -e.a0(i, i);
    starts.emplace_back(diag);
  }
  starts.push_back(random_hermitian(p, std::max(m_norm, 1.0) / static_cast<double>(blocks * p), rng));
  if (opts.restarts < static_cast<int>(starts.size())) starts.resize(static_cast<std::size_t>(std::max(opts.restarts, 1)));

  // Affine projection of Z onto {M + D(B)}: B = herm((Z - M)_00 - sum_k (Z - M)_kk) / (n + 1).
  auto affine = [&](const CMatrix& z) {
    const HermMatrix w = hermitian_part(z - m.mat());
    const HermMatrix b = (1.0 / static_cast<double>(blocks)) * hermitian_part(kernel_adjoint(w, p));
    return b;
  };

  PrimalSearch out;
  out.best_eigmin = -std::numeric_limits<double>::infinity();
  for (const auto& b0 : starts) {
    HermMatrix b = b0;
    HermMatrix x = kernel_shift(m, b);
    auto consider = [&](const HermMatrix& bb, const HermMatrix& xx) {
      const double lo = min_eig(xx);
      if (lo > out.best_eigmin) {
        out.best_eigmin = lo;
        out.best_b = bb;
      }
      if (lo >= -tol) {
        out.certificate = PrimalCertificate{bb, lo};
        return true;
      }
      return false;
    };
    if (consider(b, x)) return out;

    CMatrix pc(m.size(), m.size()), qc(m.size(), m.size());
    for (int it = 0; it < opts.max_iter; ++it) {
      ++out.iterations;
      const HermMatrix y = psd_project(hermitian_part(x.mat() + pc));
      pc = x.mat() + pc - y.mat();
      const HermMatrix bn = affine(y.mat() + qc);
      const HermMatrix xn = kernel_shift(m, bn);
      qc = y.mat() + qc - xn.mat();
      const double step = frobenius_norm(xn.mat() - x.mat());
      b = bn;
      x = xn;
      if (consider(b, x)) return out;
      if (step <= conv) break;
      // A verified dual certificate proves infeasibility; stop early.
      if (it % 25 == 24) {
        auto hint = psd_project(x) - x;
        if (auto y = repair_dual(hint, e.n, p); y && verify_dual(e, *y)) {
          out.dual_hint = std::move(hint);
          out.infeasible = true;
          return out;
        }
      }
    }
    out.dual_hint = psd_project(x) - x;
  }
  return out;
}

std::optional<PrimalCertificate> find_primal(const HermSElement& e, const SolverOptions& opts) {
  return search_primal(e, opts).certificate;
}

namespace {

// Soft-min of the spectrum of X(B) = M + D(B):
//   f_mu(B) = lambda_min - mu log sum_j exp(-(lambda_j - lambda_min) / mu),
// concave in B, with gradient D^*(Y_mu) for the Gibbs state
// Y_mu = exp(-X/mu) / tr exp(-X/mu). At a stationary point Y_mu is feasible
// for the dual and <Y_mu, M> <= max_B lambda_min(M + D(B)) + mu log N.
class SoftMinEig {
 public:
  SoftMinEig(const HermMatrix& m, std::size_t blocks, std::size_t p) : n_dim_(static_cast<Eigen::Index>(m.size())) {
    m_ = to_eigen(m.mat());
    // Orthonormal basis of the Hermitian p x p matrices.
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < p; ++k) {
      CMatrix e(p, p);
      e(k, k) = 1.0;
      basis_.push_back(e);
    }
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t l = k + 1; l < p; ++l) {
        CMatrix re(p, p), im(p, p);
        re(k, l) = re(l, k) = r;
        im(k, l) = cplx(0.0, -r);
        im(l, k) = cplx(0.0, r);
        basis_.push_back(re);
        basis_.push_back(im);
      }
    }
    for (const auto& b : basis_) dirs_.push_back(to_eigen(kernel_embed(b, blocks)));
  }

  Eigen::Index params() const { return static_cast<Eigen::Index>(basis_.size()); }

  struct Eval {
    double f = 0.0;
    double lambda_min = 0.0;
    Eigen::VectorXd grad;
    Eigen::MatrixXd hess;
    Eigen::MatrixXcd y;
  };

  Eigen::MatrixXcd point(const Eigen::VectorXd& b) const {
    Eigen::MatrixXcd x = m_;
    for (Eigen::Index k = 0; k < b.size(); ++k) x += b(k) * dirs_[static_cast<std::size_t>(k)];
    return x;
  }

  Eval evaluate(const Eigen::VectorXd& b, double mu, bool with_hessian) const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(point(b));
    if (es.info() != Eigen::Success) throw EigenError("soft-min: eigensolver failed");
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();
    const Eigen::Index nd = lam.size();
    Eigen::VectorXd g(nd);
    for (Eigen::Index j = 0; j < nd; ++j) g(j) = std::exp(-(lam(j) - lam(0)) / mu);
    const double z = g.sum();

    Eval ev;
    ev.lambda_min = lam(0);
    ev.f = lam(0) - mu * std::log(z);
    ev.y = v * (g / z).asDiagonal() * v.adjoint();
    ev.grad.resize(params());
    for (Eigen::Index k = 0; k < params(); ++k) {
      ev.grad(k) = (dirs_[static_cast<std::size_t>(k)].cwiseProduct(ev.y.transpose())).sum().real();
    }
    if (!with_hessian) return ev;

    // Divided differences of g(t) = exp(-t/mu), written with expm1 so that
    // clustered eigenvalues stay accurate.
    Eigen::MatrixXd phi(nd, nd);
    for (Eigen::Index i = 0; i < nd; ++i) {
      for (Eigen::Index j = 0; j < nd; ++j) {
        const Eigen::Index lo = lam(i) <= lam(j) ? i : j;
        const double delta = std::abs(lam(i) - lam(j));
        phi(i, j) = delta == 0.0 ? -g(lo) / mu : g(lo) * std::expm1(-delta / mu) / delta;
      }
    }
    std::vector<Eigen::MatrixXcd> rotated;
    rotated.reserve(dirs_.size());
    for (const auto& d : dirs_) rotated.push_back(v.adjoint() * d * v);
    const Eigen::Index np = params();
    Eigen::VectorXd tr_g(np), tr_phi(np);
    for (Eigen::Index k = 0; k < np; ++k) {
      const auto& dk = rotated[static_cast<std::size_t>(k)];
      tr_g(k) = (dk.diagonal().real().array() * g.array()).sum();
      tr_phi(k) = (dk.diagonal().real().array() * phi.diagonal().array()).sum();
    }
    ev.hess.resize(np, np);
    for (Eigen::Index k = 0; k < np; ++k) {
      for (Eigen::Index l = k; l < np; ++l) {
        const auto& dk = rotated[static_cast<std::size_t>(k)];
        const auto& dl = rotated[static_cast<std::size_t>(l)];
        // tr(D_k (Phi o D_l)) = sum_ij (D_k)_ji Phi_ij (D_l)_ij
        const double first = (dk.transpose().array() * phi.array().cast<cplx>() * dl.array()).sum().real();
        ev.hess(k, l) = ev.hess(l, k) = first / z - tr_g(k) * tr_phi(l) / (z * z);
      }
    }
    return ev;
  }

  HermMatrix to_matrix(const Eigen::VectorXd& b) const {
    CMatrix out(basis_.front().rows(), basis_.front().cols());
    for (Eigen::Index k = 0; k < b.size(); ++k) out += basis_[static_cast<std::size_t>(k)] * cplx(b(k));
    return hermitian_part(out);
  }

  Eigen::VectorXd coordinates(const HermMatrix& b) const {
    Eigen::VectorXd out(params());
    for (Eigen::Index k = 0; k < params(); ++k) out(k) = inner(basis_[static_cast<std::size_t>(k)], b.mat());
    return out;
  }

  static HermMatrix from_eigen_herm(const Eigen::MatrixXcd& y) {
    CMatrix out(static_cast<std::size_t>(y.rows()), static_cast<std::size_t>(y.cols()));
    for (Eigen::Index i = 0; i < y.rows(); ++i)
      for (Eigen::Index j = 0; j < y.cols(); ++j) out(i, j) = y(i, j);
    return hermitian_part(out);
  }

 private:
  static Eigen::MatrixXcd to_eigen(const CMatrix& m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
  }

  Eigen::Index n_dim_;
  Eigen::MatrixXcd m_;
  std::vector<CMatrix> basis_;
  std::vector<Eigen::MatrixXcd> dirs_;
};

}  // namespace

DualSearch search_dual(const HermSElement& e, const SolverOptions& opts, const std::optional<HermMatrix>& hint,
                       const std::optional<HermMatrix>& warm_b) {
  const HermMatrix m = criterion_matrix(e);
  const std::size_t p = e.p;
  const std::size_t blocks = static_cast<std::size_t>(e.n) + 1;
  const double scale = frobenius_norm(m.mat());
  const double primal_tol = cert_tolerance(e, opts.cert_rel);
  DualSearch out;
  out.best_eigmin = -std::numeric_limits<double>::infinity();
  if (scale == 0.0) return out;

  auto try_dual = [&](const HermMatrix& cand) {
    auto fixed = repair_dual(cand, e.n, p);
    if (!fixed) return false;
    const double pairing = inner(fixed->mat(), m.mat());
    out.best_pairing = std::min(out.best_pairing, pairing);
    if (!verify_dual(e, *fixed)) return false;
    out.certificate = DualCertificate{*fixed, pairing};
    return true;
  };
  if (hint && hint->mat().trace().real() > 0.0 && try_dual(*hint)) return out;

  const SoftMinEig soft(m, blocks, p);
  Eigen::VectorXd b = warm_b ? soft.coordinates(*warm_b) : Eigen::VectorXd::Zero(soft.params());
  const double mu_min = 1e-12 * scale;
  for (double mu = 0.1 * scale; mu >= mu_min && out.iterations < opts.dual_max_iter; mu *= 0.1) {
    for (int it = 0; it < 60 && out.iterations < opts.dual_max_iter; ++it) {
      ++out.iterations;
      const auto ev = soft.evaluate(b, mu, true);
      if (ev.grad.norm() <= 1e-14) break;
      const Eigen::MatrixXd neg_hess = -ev.hess + 1e-14 * Eigen::MatrixXd::Identity(ev.hess.rows(), ev.hess.cols());
      Eigen::VectorXd dir = neg_hess.ldlt().solve(ev.grad);
      if (!dir.allFinite() || dir.dot(ev.grad) <= 0.0) dir = ev.grad * (mu / static_cast<double>(blocks));
      double t = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 50; ++ls, t *= 0.5) {
        const Eigen::VectorXd cand = b + t * dir;
        if (soft.evaluate(cand, mu, false).f >= ev.f + 1e-4 * t * dir.dot(ev.grad)) {
          b = cand;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    const auto ev = soft.evaluate(b, mu, false);
    out.best_eigmin = std::max(out.best_eigmin, ev.lambda_min);
    if (ev.lambda_min >= -primal_tol) {
      const HermMatrix bm = soft.to_matrix(b);
      if (verify_primal(e, bm, primal_tol)) {
        out.primal = PrimalCertificate{bm, min_eig(kernel_shift(m, bm))};
        return out;
      }
    }
    if (try_dual(SoftMinEig::from_eigen_herm(ev.y))) return out;
  }
  return out;
}

std::optional<DualCertificate> find_dual(const HermSElement& e, const SolverOptions& opts) {
  return search_dual(e, opts).certificate;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Positive:
      return "positive";
    case VerdictKind::NotPositive:
      return "not_positive";
    case VerdictKind::Undecided:
      return "undecided";
  }
  return "undecided";
}

Verdict decide_positivity(const HermSElement& e, const SolverOptions& opts) {
  Verdict v;
  const auto primal = search_primal(e, opts);
  v.diagnostics.best_primal_eigmin = primal.best_eigmin;
  v.diagnostics.primal_iterations = primal.iterations;
  if (primal.certificate && verify_primal(e, primal.certificate->b, cert_tolerance(e, opts.cert_rel))) {
    v.kind = VerdictKind::Positive;
    v.primal = primal.certificate;
    return v;
  }

  if (opts.use_dual) {
    const auto dual = search_dual(e, opts, primal.dual_hint, primal.best_b);
    v.diagnostics.best_dual_pairing = dual.best_pairing;
    v.diagnostics.dual_iterations = dual.iterations;
    v.diagnostics.best_primal_eigmin = std::max(v.diagnostics.best_primal_eigmin, dual.best_eigmin);
    if (dual.primal && verify_primal(e, dual.primal->b, cert_tolerance(e, opts.cert_rel))) {
      v.kind = VerdictKind::Positive;
      v.primal = dual.primal;
      return v;
    }
    if (dual.certificate && verify_dual(e, dual.certificate->y)) v.dual = dual.certificate;
  }
  if (opts.use_fock) {
    const int depth = opts.fock_depth >= 0 ? opts.fock_depth : default_fock_depth(e.n, e.p);
    v.diagnostics.fock_depth_scanned = depth;
    auto w = negativity_witness(e, depth, opts.fock_tol);
    if (w && verify_fock_witness(e, *w, opts.fock_tol)) v.fock = std::move(w);
  }
  v.kind = (v.dual || v.fock) ? VerdictKind::NotPositive : VerdictKind::Undecided;
  return v;
}

bool scalar_law(double a0, const std::vector<cplx>& alpha) {
  double norm2 = 0.0;
  for (const auto& x : alpha) norm2 += std::norm(x);
  return a0 >= 0.0 && std::sqrt(norm2) <= a0 / 2.0;
}

}  // namespace cuntzpos
