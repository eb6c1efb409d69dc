#pragma once

// Seeded random instance generators shared by the self-test harness, the
// test suites and the Python bindings.

#include <cstdint>
#include <random>

#include "cuntzpos/dilation.hpp"
#include "cuntzpos/element.hpp"
#include "cuntzpos/gauss_rational.hpp"
#include "cuntzpos/words.hpp"

namespace cuntzpos {

using Rng = std::mt19937_64;

/// Per-item seed derived from a global seed and an index (splitmix64).
std::uint64_t derive_seed(std::uint64_t global, std::uint64_t index);

/// Scalar instance: a0 ~ U[a0_lo, a0_hi], alpha uniform direction in C^n
/// with ||alpha|| ~ U[0, a0].
HermSElement random_scalar_instance(Rng& rng, int n, double a0_lo = 0.1, double a0_hi = 2.0);

/// p x p instance with Gaussian entries: A0 = G G^* / p, A_i = s G_i with
/// s ~ U[0, 0.5] / sqrt(n), so both verdicts occur with comparable frequency.
HermSElement random_gaussian_instance(Rng& rng, int n, std::size_t p);

/// Gaussian row operator rescaled to norm c ~ U(0, 1]; c = 1 with
/// probability 1/5 so coisometric rows are exercised too.
RowContraction random_row_contraction(Rng& rng, int n, std::size_t p);

CMatrix random_gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols);

Word random_word(Rng& rng, int n, std::size_t max_len);

/// Up to `max_terms` random words with Gaussian complex coefficients.
TCElement<cplx> random_tc_element(Rng& rng, int n, std::size_t p, std::size_t max_len, std::size_t max_terms = 4);

/// Same shape with small Gaussian-rational coefficients (numerators in
/// [-3, 3], denominators in {1, 2, 3}).
TCElement<GaussRational> random_tc_element_exact(Rng& rng, int n, std::size_t p, std::size_t max_len,
                                                 std::size_t max_terms = 4);

}  // namespace cuntzpos
