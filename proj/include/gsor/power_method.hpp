#pragma once

#include "gsor/cholesky.hpp"

namespace gsor {

struct RhoEstimate {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Estimate the spectral radius of S = W^{-1} T by power iteration
/// v <- W^{-1} T v, with W given through its Cholesky factor. The estimate is
/// the generalized Rayleigh quotient (v'Tv)/(v'Wv); iteration stops when two
/// successive estimates agree to `tol` relatively. S has a real spectrum for
/// symmetric T, so the quotient converges to the dominant eigenvalue and its
/// magnitude to rho(S).
///
/// The start vector is all-ones (deterministic). If the estimate sits at zero
/// for 10 iterations while T has nonzero entries, the iteration restarts once
/// from a fixed pseudorandom vector (seed 42). Hitting maxit returns the best
/// estimate with converged = false.
RhoEstimate power_method_rho_S(const SpdFactor& Wf, const CsrMatrix& T, double tol = 1e-8,
                               int maxit = 1000);

}  // namespace gsor
