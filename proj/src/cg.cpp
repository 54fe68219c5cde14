#include "gsor/cg.hpp"

#include <cmath>

namespace gsor {

std::pair<DenseVector, SolveReport> cg_solve(const CsrMatrix& A, const DenseVector& b, double tol,
                                             int maxit) {
    if (!A.is_square() || static_cast<int>(b.size()) != A.n_rows)
        throw std::invalid_argument("cg_solve: dimension mismatch");
    if (maxit < 1) throw std::invalid_argument("cg_solve: maxit must be >= 1");

    const double bnorm = vec::norm(b);
    SolveReport report;
    DenseVector x(b.size(), 0.0);
    if (bnorm == 0.0) {
        report.converged = true;
        return {std::move(x), std::move(report)};
    }

    DenseVector r = b;
    DenseVector d = r;
    double rr = vec::dot(r, r);

    for (int k = 1; k <= maxit; ++k) {
        DenseVector ad = spmv(A, d);
        const double dad = vec::dot(d, ad);
        if (dad <= 0.0)
            throw NotPositiveDefinite("cg_solve: non-positive curvature encountered");
        const double step = rr / dad;
        vec::axpy(step, d, x);
        vec::axpy(-step, ad, r);
        const double rr_new = vec::dot(r, r);
        const double rel = std::sqrt(rr_new) / bnorm;
        report.iterations = k;
        report.residual_history.push_back(rel);
        report.final_residual = rel;
        if (rel <= tol) {
            report.converged = true;
            break;
        }
        vec::scale(d, rr_new / rr);  // d = r + beta*d
        vec::axpy(1.0, r, d);
        rr = rr_new;
    }
    return {std::move(x), std::move(report)};
}

}  // namespace gsor
