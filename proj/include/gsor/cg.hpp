#pragma once

#include "gsor/csr.hpp"

namespace gsor {

/// Conjugate gradients for a symmetric positive definite system A x = b.
/// Stops when the relative residual drops below tol or maxit is reached
/// (reported, not thrown). Throws NotPositiveDefinite when a search
/// direction has non-positive curvature.
std::pair<DenseVector, SolveReport> cg_solve(const CsrMatrix& A, const DenseVector& b, double tol,
                                             int maxit);

}  // namespace gsor
