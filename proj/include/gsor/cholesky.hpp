#pragma once

#include "gsor/csr.hpp"

namespace gsor {

/// Sparse Cholesky factor of a symmetric positive definite matrix:
/// L * L^T = P * W * P^T, with P the permutation given by `perm`
/// (perm[k] = original index of permuted row k; identity when no reordering
/// was applied). `lower` stores L row by row, diagonal entry last.
struct SpdFactor {
    CsrMatrix lower;
    std::vector<int> perm;

    int n() const { return lower.n_rows; }
};

/// Reverse Cuthill-McKee ordering of the pattern of a square symmetric
/// matrix. Reduces the profile the factorization fills in.
std::vector<int> rcm_ordering(const CsrMatrix& A);

/// Factor a symmetric positive definite matrix. Uses reverse Cuthill-McKee
/// reordering above a small-size cutoff, identity below it. The computation
/// is an envelope (profile) factorization: fill stays inside each row's
/// profile, so no symbolic analysis beyond the row envelope is needed.
/// Throws NotPositiveDefinite on a non-positive pivot; this is the runtime
/// positive-definiteness check for W.
SpdFactor cholesky(const CsrMatrix& W);

/// Solve W*x = rhs through the factor (forward + backward substitution,
/// applying the permutation on the way in and out).
DenseVector solve_spd(const SpdFactor& F, const DenseVector& rhs);

/// W*v reconstructed from the factor as P^T L (L^T (P v)). Lets callers that
/// only hold the factor apply the original matrix.
DenseVector spd_apply(const SpdFactor& F, const DenseVector& v);

}  // namespace gsor
