#pragma once

#include "gsor/block_system.hpp"
#include "gsor/cholesky.hpp"

namespace gsor {

struct GsorResult {
    DenseVector x;
    DenseVector y;
    SolveReport report;
};

/// Generalized SOR sweep applied to the block system: per iteration
///
///     W x_{k+1} = (1-a) W x_k + a T y_k + a p
///     W y_{k+1} = -a T x_{k+1} + (1-a) W y_k + a q
///
/// W is factored exactly once; each iteration costs two triangular-solve
/// pairs. The true relative residual is recomputed from the iterate every
/// iteration and drives the stopping test. Any nonzero alpha is accepted:
/// divergence shows up as converged = false in the report (the iteration
/// aborts early once the residual exceeds 1e100).
GsorResult gsor_solve(const BlockSystem& sys, const IterParams& params, const DenseVector& x0,
                      const DenseVector& y0);

/// Convenience overload: zero initial guess.
GsorResult gsor_solve(const BlockSystem& sys, const IterParams& params);

struct MhssResult {
    ComplexVector u;
    SolveReport report;
};

/// Modified HSS iteration for (W + iT)u = b, alpha > 0:
///
///     (aI + W) u_{k+1/2} = (aI - iT) u_k + b
///     (aI + T) u_{k+1}   = (aI + iW) u_{k+1/2} - i b
///
/// Both shifted matrices are assembled and factored once per solve. Each
/// half-step is carried out in split real/imaginary arithmetic: one real SPD
/// factorization applied to two real right-hand sides. Stopping criterion and
/// reporting are identical to gsor_solve. Throws NotPositiveDefinite when
/// aI + T fails to factor (possible for indefinite T and small alpha).
MhssResult mhss_solve(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                      const IterParams& params, const ComplexVector& u0);

MhssResult mhss_solve(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                      const IterParams& params);

}  // namespace gsor
