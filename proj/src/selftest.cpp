#include "cuntzpos/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "cuntzpos/certificate.hpp"
#include "cuntzpos/dilation.hpp"
#include "cuntzpos/instances.hpp"

namespace cuntzpos {

namespace {

double alpha_norm(const HermSElement& e) {
  double s = 0.0;
  for (const auto& m : e.a) s += std::norm(m(0, 0));
  return std::sqrt(s);
}

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.note = what;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  std::vector<SuiteResult> out;
  const int count = std::max(opts.count, 0);

  out.push_back(timed("scalar_law", [&](SuiteResult& r) {
    Rng rng(derive_seed(opts.seed, 1));
    for (int k = 0; k < count; ++k) {
      const auto e = random_scalar_instance(rng, 2 + k % 2);
      const double a0 = e.a0(0, 0).real();
      ++r.cases;
      const auto v = decide_positivity(e);
      if (std::abs(alpha_norm(e) - a0 / 2.0) <= 1e-6) continue;
      std::vector<cplx> alpha;
      for (const auto& m : e.a) alpha.push_back(m(0, 0));
      const auto expected = scalar_law(a0, alpha) ? VerdictKind::Positive : VerdictKind::NotPositive;
      if (v.kind != expected) fail(r, "instance " + std::to_string(k) + ": got " + to_string(v.kind));
    }
  }));

  std::vector<HermSElement> positives;
  out.push_back(timed("soundness", [&](SuiteResult& r) {
    Rng rng(derive_seed(opts.seed, 2));
    bool corrupted = false;
    for (int k = 0; k < count; ++k) {
      const auto e = random_gaussian_instance(rng, 2 + k % 2, 1 + static_cast<std::size_t>(k % 3));
      ++r.cases;
      auto v = decide_positivity(e);
      if (opts.corrupt_certificate && !corrupted && v.primal) {
        // Pushing B far up breaks every block (k, k), k >= 1.
        const double shift = 10.0 * (1.0 + frobenius_norm(criterion_matrix(e).mat()));
        v.primal->b = v.primal->b + shift * HermMatrix::identity(e.p);
        corrupted = true;
      }
      const bool primal_ok = v.primal && verify_primal(e, v.primal->b);
      const bool fock_ok = v.fock && verify_fock_witness(e, *v.fock);
      if (v.primal && !primal_ok) fail(r, "instance " + std::to_string(k) + ": primal certificate fails its verifier");
      if (v.dual && !verify_dual(e, v.dual->y)) {
        fail(r, "instance " + std::to_string(k) + ": dual certificate fails its verifier");
      }
      if (v.fock && !fock_ok) fail(r, "instance " + std::to_string(k) + ": Fock witness fails its verifier");
      if (primal_ok) {
        const auto w = negativity_witness(e, default_fock_depth(e.n, e.p));
        if (w && verify_fock_witness(e, *w)) {
          fail(r, "instance " + std::to_string(k) + ": primal certificate and Fock witness coexist");
        }
        positives.push_back(e);
      }
    }
  }));

  out.push_back(timed("positivity_transfer", [&](SuiteResult& r) {
    Rng rng(derive_seed(opts.seed, 3));
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (const auto& e : positives) {
      for (int t = 0; t < 3; ++t) {
        ++r.cases;
        const auto a = random_row_contraction(rng, e.n, dim(rng));
        const double lo = min_eig(ucp_evaluate(e, a));
        if (lo < -1e-8) fail(r, "ucp image has eigenvalue " + std::to_string(lo));
      }
    }
  }));

  out.push_back(timed("dilation", [&](SuiteResult& r) {
    Rng rng(derive_seed(opts.seed, 4));
    std::uniform_int_distribution<int> gens(1, 3);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    for (int k = 0; k < std::min(count, 50); ++k) {
      ++r.cases;
      const int n = gens(rng);
      const auto d = dilate(random_row_contraction(rng, n, dim(rng)), 3);
      if (d.compression_residual > 1e-10 || d.isometry_residual > 1e-10) {
        fail(r, "residuals " + std::to_string(d.compression_residual) + ", " + std::to_string(d.isometry_residual));
      }
    }
  }));
  return out;
}

}  // namespace cuntzpos
