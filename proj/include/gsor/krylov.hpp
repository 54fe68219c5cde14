#pragma once

#include <functional>

#include "gsor/block_system.hpp"
#include "gsor/cholesky.hpp"

namespace gsor {

/// A linear map on real vectors of fixed dimension, given by its action.
struct LinearOperator {
    int dim = 0;
    std::function<DenseVector(const DenseVector&)> apply;
};

/// Operator of dimension 2n applying the block matrix [[W,-T],[T,W]] to the
/// stacked vector (x; y). Holds a reference: `sys` must outlive the operator.
LinearOperator block_operator(const BlockSystem& sys);

/// One application of the preconditioned block matrix, (e; f) = P^{-1} A (r; s)
/// with P = [[W, 0],[alpha T, W]], done in four steps:
///   t = W r - T s;  u = T r + W s;  solve W e = t;  solve W f = u - alpha T e.
/// W enters through its factor only (steps 1-2 reconstruct W r, W s from it).
/// alpha = 0 degrades to the block-diagonal preconditioner.
std::pair<DenseVector, DenseVector> gsor_precond_apply(const SpdFactor& Wf, const CsrMatrix& T,
                                                       double alpha, const DenseVector& r,
                                                       const DenseVector& s);

/// P^{-1}(r; s) alone: solve W e = r, then W f = s - alpha T e. Used to
/// precondition the right-hand side for left-preconditioned GMRES.
std::pair<DenseVector, DenseVector> gsor_precond_solve(const SpdFactor& Wf, const CsrMatrix& T,
                                                       double alpha, const DenseVector& r,
                                                       const DenseVector& s);

/// The operator v -> P^{-1} A v on stacked vectors. References Wf and T;
/// both must outlive the operator.
LinearOperator gsor_preconditioned_operator(const SpdFactor& Wf, const CsrMatrix& T, double alpha);

struct GmresConfig {
    int restart = 10;
    double tol = 1e-6;
    int maxit = 2000;  // cap on total inner Krylov steps
};

struct GmresResult {
    DenseVector x;
    SolveReport report;
    /// Least-squares residual estimate after every inner step (across all
    /// cycles); nonincreasing within a cycle.
    std::vector<double> lsq_history;
};

/// Restarted GMRES with modified Gram-Schmidt orthogonalization and Givens
/// rotations for the Hessenberg least-squares problem.
///
/// `residual` maps an iterate to the relative residual that drives the
/// stopping test; when empty, |rhs - op(x)| / |rhs| is used. For a
/// left-preconditioned system pass the residual of the unpreconditioned one,
/// so convergence is declared on the true residual rather than the
/// preconditioned one. The test runs after every inner step (the iterate is
/// formed each step); report.residual_history records the value at restart
/// boundaries and termination, report.iterations counts restart cycles, and
/// report.inner_iterations the total inner steps. A happy breakdown is
/// treated as convergence.
GmresResult gmres_restart(const LinearOperator& op, const DenseVector& rhs, const GmresConfig& cfg,
                          const DenseVector& x0,
                          const std::function<double(const DenseVector&)>& residual = {});

}  // namespace gsor
