// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Seeds are fixed so runs are reproducible.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "cuntzpos/certificate.hpp"
#include "cuntzpos/dilation.hpp"
#include "cuntzpos/fock.hpp"
#include "cuntzpos/instances.hpp"
#include "cuntzpos/quotient.hpp"
#include "oracles.hpp"

using namespace cuntzpos;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  if (o.pass) o.detail = what;
  o.pass = false;
}

double alpha_norm(const HermSElement& e) {
  double s = 0.0;
  for (const auto& m : e.a) s += std::norm(m(0, 0));
  return std::sqrt(s);
}

std::vector<HermSElement> g_certified_positive;  // filled by criterion 4

Outcome scalar_law_completeness() {
  Outcome o;
  Rng rng(1001);
  int undecided = 0, checked = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < 100; ++k) {
    const auto e = random_scalar_instance(rng, 2 + k % 2, 0.1, 2.0);
    const double a0 = e.a0(0, 0).real();
    const auto v = decide_positivity(e);
    const bool band = std::abs(alpha_norm(e) - a0 / 2) <= 1e-6;
    std::vector<cplx> alpha;
    for (const auto& m : e.a) alpha.push_back(m(0, 0));
    const auto expected = scalar_law(a0, alpha) ? VerdictKind::Positive : VerdictKind::NotPositive;
    if (v.kind == VerdictKind::Undecided) {
      ++undecided;
      require(o, band, "undecided outside the boundary band at instance " + std::to_string(k));
      continue;
    }
    if (band) continue;
    ++checked;
    require(o, v.kind == expected, "disagreement at instance " + std::to_string(k));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(o, secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d agree, %d undecided, %.2f s", checked, undecided, secs);
    o.detail = buf;
  }
  return o;
}

Outcome boundary_instance() {
  Outcome o;
  const auto e = HermSElement::scalar(1.0, {0.5, 0.0});
  const auto v = decide_positivity(e);
  require(o, v.kind == VerdictKind::Positive && v.primal.has_value(), "not certified positive");
  if (v.primal) {
    const double nb = frobenius_norm(v.primal->b.mat());
    require(o, nb <= 1e-6, "||B|| = " + std::to_string(nb));
    if (o.pass) o.detail = "||B|| = " + std::to_string(nb);
  }
  return o;
}

Outcome refutation_instance() {
  Outcome o;
  const auto e = HermSElement::scalar(1.0, {0.6, 0.0});
  SolverOptions opts;
  opts.fock_depth = 6;
  const auto v = decide_positivity(e, opts);
  require(o, v.kind == VerdictKind::NotPositive, "verdict " + to_string(v.kind));
  const bool fock_ok = v.fock && v.fock->depth <= 6 && verify_fock_witness(e, *v.fock);
  const bool dual_ok = v.dual && verify_dual(e, v.dual->y) && v.dual->pairing <= -1e-3;
  require(o, fock_ok || dual_ok, "no qualifying witness");
  if (v.fock) {
    // The single-letter chain bound at the witnessing depth.
    const double chain = 1.0 - 1.2 * std::cos(std::numbers::pi / (v.fock->depth + 2));
    require(o, v.fock->eigmin <= chain + 1e-9, "Fock eigenvalue above the chain bound");
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "fock depth %d eig %.4g; dual pairing %.4g", v.fock ? v.fock->depth : -1,
                  v.fock ? v.fock->eigmin : 0.0, v.dual ? v.dual->pairing : 0.0);
    o.detail = buf;
  }
  return o;
}

Outcome cross_oracle_soundness() {
  Outcome o;
  Rng rng(1004);
  std::uniform_int_distribution<int> gens(2, 3);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  int pos = 0, neg = 0, und = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < 200; ++k) {
    const int n = gens(rng);
    const auto e = random_gaussian_instance(rng, n, size(rng));
    const auto v = decide_positivity(e);
    // Run both one-sided routes in full regardless of the verdict.
    const auto primal = find_primal(e);
    const bool primal_ok = (primal && verify_primal(e, primal->b)) || (v.primal && verify_primal(e, v.primal->b));
    const auto w = negativity_witness(e, default_fock_depth(e.n, e.p));
    const bool fock_ok = w && verify_fock_witness(e, *w);
    require(o, !(primal_ok && fock_ok), "primal certificate and Fock witness coexist at instance " + std::to_string(k));
    if (v.kind == VerdictKind::Positive) {
      ++pos;
      g_certified_positive.push_back(e);
    } else if (v.kind == VerdictKind::NotPositive) {
      ++neg;
    } else {
      ++und;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(o, secs < 300.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d positive, %d not positive, %d undecided, %.2f s", pos, neg, und, secs);
    o.detail = buf;
  }
  return o;
}

Outcome positivity_transfer() {
  Outcome o;
  Rng rng(1005);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  double worst = INFINITY;
  for (const auto& e : g_certified_positive) {
    for (int t = 0; t < 5; ++t) {
      const auto a = random_row_contraction(rng, e.n, size(rng));
      const double lo = min_eig(ucp_evaluate(e, a));
      worst = std::min(worst, lo);
      require(o, lo >= -1e-8, "ucp image eigenvalue " + std::to_string(lo));
    }
  }
  require(o, !g_certified_positive.empty(), "no positive instances to transfer");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu instances x 5 contractions, min eig %.3g", g_certified_positive.size(), worst);
    o.detail = buf;
  }
  return o;
}

Outcome dilation_identities() {
  Outcome o;
  Rng rng(1006);
  std::uniform_int_distribution<int> gens(1, 3);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  double worst_c = 0.0, worst_i = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto a = random_row_contraction(rng, gens(rng), size(rng));
    const auto d = dilate(a, 4);
    // Residuals recomputed here rather than read from the result.
    for (int i = 0; i < a.n(); ++i) {
      const auto& vi = d.v[static_cast<std::size_t>(i)];
      worst_c = std::max(worst_c, frobenius_norm(vi.block(0, 0, a.p(), a.p()) - a[static_cast<std::size_t>(i)]));
      for (int j = 0; j < a.n(); ++j) {
        CMatrix g = (vi.adjoint() * d.v[static_cast<std::size_t>(j)]).block(0, 0, d.interior_dim, d.interior_dim);
        if (i == j) g -= CMatrix::identity(d.interior_dim);
        worst_i = std::max(worst_i, frobenius_norm(g));
      }
    }
  }
  require(o, worst_c <= 1e-10, "compression residual " + std::to_string(worst_c));
  require(o, worst_i <= 1e-10, "interior isometry residual " + std::to_string(worst_i));
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "max residuals %.2g (compression), %.2g (interior)", worst_c, worst_i);
    o.detail = buf;
  }
  return o;
}

Outcome psi_positivity() {
  Outcome o;
  double worst = INFINITY;
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) worst = std::min(worst, psi_choi_check(TruncatedFock(n, d)));
  require(o, worst >= -1e-10, "min eig " + std::to_string(worst));
  for (int n = 2; n <= 3; ++n) {
    auto j = ENElement::zeros(n, 2);
    j.a00 = CMatrix::identity(2);
    j.bdiag = -CMatrix::identity(2);
    const auto img = psi_apply(j);
    require(o, img.is_zero(), "psi(E00 - sum Eii) != 0 for n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "min eig " + std::to_string(worst) + ", kernel image exactly 0";
  return o;
}

Outcome base_block_structure() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const auto r = row_contraction_base_check(n);
    require(o, r.sums_match, "summands do not add up, n = " + std::to_string(n));
    for (double v : r.summand_min_eigs) require(o, v >= -1e-12, "summand not PSD, n = " + std::to_string(n));
    require(o, r.total_min_eig >= -1e-12 && r.doubled_total_min_eig >= -1e-12, "total not PSD");
    // Independent assembly of the total, checked with the Jacobi oracle.
    const std::size_t k = static_cast<std::size_t>(n) + 1;
    CMatrix total(k * k, k * k);
    for (std::size_t i = 1; i < k; ++i) total(i, i) = 1.0;  // block (0,0) = sum_i E_ii
    for (std::size_t b = 1; b < k; ++b) {
      total(b, b * k) = 1.0;          // block (0,b) = E_b0
      total(b * k, b) = 1.0;          // block (b,0) = E_0b
      total(b * k, b * k) = 1.0;      // block (b,b) = E_00
    }
    require(o, oracle::jacobi_min_eig(total) >= -1e-12, "oracle finds the total indefinite");
    require(o, std::abs(oracle::jacobi_min_eig(total) - r.total_min_eig) < 1e-12, "oracle disagrees");
  }
  if (o.pass) o.detail = "n = 2, 3, 4; both normalizations";
  return o;
}

Outcome word_fock_homomorphism() {
  Outcome o;
  Rng rng(1009);
  std::uniform_int_distribution<int> gens(1, 3);
  const int depth = 5;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = gens(rng);
    const TruncatedFock f(n, depth);
    const auto xq = random_tc_element_exact(rng, n, 1, 2);
    const auto yq = random_tc_element_exact(rng, n, 1, 2);
    const auto guard = static_cast<int>(std::max(xq.max_word_length(), yq.max_word_length()));
    const std::size_t interior = f.count_shorter_than(depth - guard + 1);
    const auto lhs = evaluate(mul(xq, yq), f);
    const auto rhs = evaluate(xq, f) * evaluate(yq, f);
    for (std::size_t r = 0; r < interior; ++r)
      for (std::size_t c = 0; c < interior; ++c) require(o, lhs(r, c) == rhs(r, c), "exact mismatch");

    const auto xf = random_tc_element(rng, n, 1, 2);
    const auto yf = random_tc_element(rng, n, 1, 2);
    const auto gf = static_cast<int>(std::max(xf.max_word_length(), yf.max_word_length()));
    const std::size_t in_f = f.count_shorter_than(depth - gf + 1);
    const auto lf = evaluate(mul(xf, yf), f);
    const auto rf = evaluate(xf, f) * evaluate(yf, f);
    for (std::size_t r = 0; r < in_f; ++r)
      for (std::size_t c = 0; c < in_f; ++c) worst = std::max(worst, std::abs(lf(r, c) - rf(r, c)));
  }
  require(o, worst <= 1e-12, "float mismatch " + std::to_string(worst));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "exact agreement; float max deviation %.2g", worst);
    o.detail = buf;
  }
  return o;
}

Outcome oracle_monotonicity() {
  Outcome o;
  Rng rng(1010);
  std::uniform_int_distribution<int> gens(2, 3);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int k = 0; k < 50; ++k) {
    const int n = gens(rng);
    const auto e = random_gaussian_instance(rng, n, size(rng));
    double prev = INFINITY;
    for (int d = 0; d <= 5; ++d) {
      const double lo = min_eig(compress_element(e, TruncatedFock(n, d)));
      require(o, lo <= prev + 1e-10, "increase at instance " + std::to_string(k) + ", depth " + std::to_string(d));
      prev = lo;
    }
  }
  if (o.pass) o.detail = "50 instances, depths 0..5";
  return o;
}

Outcome embedding_and_compression() {
  Outcome o;
  Rng rng(1011);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  int compared = 0, positives = 0;
  for (int k = 0; k < 50; ++k) {
    const auto e = random_gaussian_instance(rng, 2, size(rng));
    const auto v = decide_positivity(e);
    const int m = 3 + k % 2;
    const auto vp = decide_positivity(e.padded(m));
    if (v.kind != VerdictKind::Undecided && vp.kind != VerdictKind::Undecided) {
      ++compared;
      require(o, v.kind == vp.kind, "padding changed the verdict at instance " + std::to_string(k));
    }
    if (v.kind == VerdictKind::Positive) {
      ++positives;
      for (int i = 1; i <= e.n; ++i) {
        require(o, decide_positivity(e.rho(i)).kind == VerdictKind::Positive,
                "compression lost positivity at instance " + std::to_string(k));
      }
    }
  }
  require(o, compared == 50, std::to_string(50 - compared) + " padded comparisons undecided");
  if (o.pass) o.detail = std::to_string(compared) + " padded, " + std::to_string(positives) + " compressed";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 scalar-law completeness", scalar_law_completeness},
      {"2 boundary instance", boundary_instance},
      {"3 refutation instance", refutation_instance},
      {"4 cross-oracle soundness", cross_oracle_soundness},
      {"5 positivity transfer", positivity_transfer},
      {"6 dilation identities", dilation_identities},
      {"7 psi positivity and kernel", psi_positivity},
      {"8 row-contraction base block", base_block_structure},
      {"9 word/Fock homomorphism", word_fock_homomorphism},
      {"10 oracle monotonicity", oracle_monotonicity},
      {"11 embedding and compression", embedding_and_compression},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-32s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
