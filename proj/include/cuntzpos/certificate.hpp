#pragma once

// Positivity of Hermitian elements of M_p(S_n).
//
// e = A0 (x) I + sum A_i (x) S_i + h.c. is positive iff some B in M_p makes
//
//     [ A0    2A_1^*  ...  2A_n^* ]   [ B            ]
//     [ 2A_1  A0                  ] + [    -B        ]
//     [ ...         ...           ]   [       ...    ]
//     [ 2A_n              A0      ]   [           -B ]
//
// positive semidefinite. A primal certificate is such a B (taken Hermitian);
// a dual certificate is Y >= 0 with Y_00 = sum_k Y_kk and <Y, M(e)> < 0,
// which by weak duality rules every B out.

#include <cstdint>
#include <optional>
#include <string>

#include "cuntzpos/element.hpp"
#include "cuntzpos/fock.hpp"
#include "cuntzpos/hermitian.hpp"

namespace cuntzpos {

struct PrimalCertificate {
  HermMatrix b;
  double achieved_eigmin = 0.0;
};

struct DualCertificate {
  HermMatrix y;
  double pairing = 0.0;
};

struct SolverOptions {
  int max_iter = 20000;          // Dykstra iterations per restart
  int restarts = 3;              // B = 0, -diag(A0), random Hermitian
  double conv_rel = 1e-11;       // stop when successive iterates differ by conv_rel * ||M||_F
  int dual_max_iter = 600;       // Newton steps for the dual search
  std::uint64_t seed = 0;
  int fock_depth = -1;           // < 0 selects default_fock_depth(n, p)
  double cert_rel = 1e-9;        // primal acceptance: min eig >= -cert_rel * max(1, ||M||_F)
  double fock_tol = kFockTolerance;
  bool use_fock = true;
  bool use_dual = true;
};

/// Block matrix M(e) of size (n+1)p.
HermMatrix criterion_matrix(const HermSElement& e);

/// M + B at block (0,0) - B at each block (k,k), k >= 1.
HermMatrix kernel_shift(const HermMatrix& m, const HermMatrix& b);

/// Adjoint of B -> diag(B, -B, ..., -B): Y_00 - sum_{k>=1} Y_kk.
CMatrix kernel_adjoint(const HermMatrix& y, std::size_t p);

/// rel * max(1, ||M(e)||_F).
double cert_tolerance(const HermSElement& e, double rel = 1e-9);
/// 1e-7 * ||M(e)||_F.
double dual_tolerance(const HermSElement& e);

constexpr double kDualFeasibilityTolerance = 1e-9;

bool verify_primal(const HermSElement& e, const HermMatrix& b, double tol);
inline bool verify_primal(const HermSElement& e, const HermMatrix& b) {
  return verify_primal(e, b, cert_tolerance(e));
}

/// Y is normalized by its trace before the checks; tr Y <= 0 fails.
bool verify_dual(const HermSElement& e, const HermMatrix& y, double tol = kDualFeasibilityTolerance);

struct PrimalSearch {
  std::optional<PrimalCertificate> certificate;
  double best_eigmin = 0.0;  // best min eigenvalue of M + D(B) seen
  int iterations = 0;
  /// Negative part of the last affine iterate; points at a dual certificate
  /// when the search stalls on an infeasible instance.
  std::optional<HermMatrix> dual_hint;
  /// Set when the hint already repairs to a verified dual certificate.
  bool infeasible = false;
  std::optional<HermMatrix> best_b;  // B with the best min eigenvalue seen
};

/// Dykstra alternating projections between the PSD cone and {M + D(B)}.
PrimalSearch search_primal(const HermSElement& e, const SolverOptions& opts = {});
std::optional<PrimalCertificate> find_primal(const HermSElement& e, const SolverOptions& opts = {});

struct DualSearch {
  std::optional<DualCertificate> certificate;
  double best_pairing = 0.0;   // best <Y, M> over repaired candidates (an upper bound on the optimum)
  double best_eigmin = 0.0;    // best lambda_min(M + D(B)) along the way (a lower bound)
  int iterations = 0;
  /// The same optimization certifies positivity when the optimum is >= 0.
  std::optional<PrimalCertificate> primal;
};

/// Minimizes <Y, M> over {Y >= 0, tr Y = 1, Y_00 = sum Y_kk} through its
/// equivalent form max_B lambda_min(M + D(B)), smoothed by a soft-min of the
/// spectrum and solved by damped Newton steps under a decreasing temperature.
/// The Gibbs state at each temperature is the dual candidate. A hint (any
/// matrix near the dual feasible set) is tried first; `warm_b` seeds B.
DualSearch search_dual(const HermSElement& e, const SolverOptions& opts = {},
                       const std::optional<HermMatrix>& hint = std::nullopt,
                       const std::optional<HermMatrix>& warm_b = std::nullopt);
std::optional<DualCertificate> find_dual(const HermSElement& e, const SolverOptions& opts = {});

/// Moves Y onto {Y_00 = sum Y_kk}, restores PSD with a multiple of the
/// positive definite element diag(nI, I, ..., I), normalizes the trace.
std::optional<HermMatrix> repair_dual(const HermMatrix& y, int n, std::size_t p);

enum class VerdictKind { Positive, NotPositive, Undecided };

std::string to_string(VerdictKind k);

struct Diagnostics {
  double best_primal_eigmin = 0.0;
  int primal_iterations = 0;
  double best_dual_pairing = 0.0;
  int dual_iterations = 0;
  int fock_depth_scanned = -1;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  std::optional<PrimalCertificate> primal;
  std::optional<DualCertificate> dual;
  std::optional<FockWitness> fock;
  Diagnostics diagnostics;
};

Verdict decide_positivity(const HermSElement& e, const SolverOptions& opts = {});

/// Closed form for p = 1: a0 >= 0 and ||alpha||_2 <= a0 / 2.
bool scalar_law(double a0, const std::vector<cplx>& alpha);

}  // namespace cuntzpos
