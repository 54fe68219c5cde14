#include "gsor/stationary.hpp"

#include <cmath>

namespace gsor {

namespace {

// Residual levels past this are treated as divergence and stop the sweep
// before the iterate overflows.
constexpr double kBlowupLimit = 1e100;

void check_params(const IterParams& p) {
    if (p.tol <= 0.0) throw std::invalid_argument("IterParams: tol must be positive");
    if (p.maxit < 1) throw std::invalid_argument("IterParams: maxit must be >= 1");
}

}  // namespace

GsorResult gsor_solve(const BlockSystem& sys, const IterParams& params, const DenseVector& x0,
                      const DenseVector& y0) {
    check_params(params);
    if (params.alpha == 0.0) throw std::invalid_argument("gsor_solve: alpha must be nonzero");
    const int n = sys.n();
    if (static_cast<int>(x0.size()) != n || static_cast<int>(y0.size()) != n)
        throw std::invalid_argument("gsor_solve: initial guess dimension mismatch");

    const double a = params.alpha;
    const SpdFactor Wf = cholesky(sys.W);

    GsorResult out;
    out.x = x0;
    out.y = y0;

    for (int k = 1; k <= params.maxit; ++k) {
        DenseVector rhs = vec::combine(1.0 - a, spmv(sys.W, out.x), a, spmv(sys.T, out.y));
        vec::axpy(a, sys.p, rhs);
        out.x = solve_spd(Wf, rhs);

        rhs = vec::combine(-a, spmv(sys.T, out.x), 1.0 - a, spmv(sys.W, out.y));
        vec::axpy(a, sys.q, rhs);
        out.y = solve_spd(Wf, rhs);

        const double res = block_residual(sys, out.x, out.y);
        out.report.iterations = k;
        out.report.residual_history.push_back(res);
        out.report.final_residual = res;
        if (res < params.tol) {
            out.report.converged = true;
            break;
        }
        if (!std::isfinite(res) || res > kBlowupLimit) break;
    }
    return out;
}

GsorResult gsor_solve(const BlockSystem& sys, const IterParams& params) {
    return gsor_solve(sys, params, vec::zeros(sys.n()), vec::zeros(sys.n()));
}

MhssResult mhss_solve(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                      const IterParams& params, const ComplexVector& u0) {
    check_params(params);
    if (params.alpha <= 0.0) throw std::invalid_argument("mhss_solve: alpha must be positive");
    if (!W.is_square() || !T.is_square() || W.n_rows != T.n_rows)
        throw std::invalid_argument("mhss_solve: W and T must be square of equal order");
    const int n = W.n_rows;
    if (static_cast<int>(b.size()) != n || static_cast<int>(u0.size()) != n)
        throw std::invalid_argument("mhss_solve: dimension mismatch");

    const double a = params.alpha;
    const SpdFactor Fw = cholesky(csr_shift(W, a));
    const SpdFactor Ft = cholesky(csr_shift(T, a));

    const DenseVector& p = b.re;
    const DenseVector& q = b.im;
    const double bnorm = std::hypot(vec::norm(p), vec::norm(q));
    if (bnorm == 0.0) throw std::invalid_argument("mhss_solve: zero right-hand side");

    MhssResult out;
    out.u = u0;
    DenseVector& x = out.u.re;
    DenseVector& y = out.u.im;

    for (int k = 1; k <= params.maxit; ++k) {
        // (aI - iT)u + b split: real part a x + T y + p, imag part a y - T x + q
        DenseVector tx = spmv(T, x);
        DenseVector ty = spmv(T, y);
        DenseVector rhs = vec::combine(a, x, 1.0, ty);
        vec::axpy(1.0, p, rhs);
        DenseVector xh = solve_spd(Fw, rhs);
        rhs = vec::combine(a, y, -1.0, tx);
        vec::axpy(1.0, q, rhs);
        DenseVector yh = solve_spd(Fw, rhs);

        // (aI + T)(x'' + iy''): x'' from a x' - W y' + q, y'' from a y' + W x' - p
        DenseVector wx = spmv(W, xh);
        DenseVector wy = spmv(W, yh);
        rhs = vec::combine(a, xh, -1.0, wy);
        vec::axpy(1.0, q, rhs);
        x = solve_spd(Ft, rhs);
        rhs = vec::combine(a, yh, 1.0, wx);
        vec::axpy(-1.0, p, rhs);
        y = solve_spd(Ft, rhs);

        // same criterion as the block form: |b - (W+iT)u| / |b|
        DenseVector rp = vec::combine(1.0, p, -1.0, spmv(W, x));
        vec::axpy(1.0, spmv(T, y), rp);
        DenseVector rq = vec::combine(1.0, q, -1.0, spmv(T, x));
        vec::axpy(-1.0, spmv(W, y), rq);
        const double res = std::hypot(vec::norm(rp), vec::norm(rq)) / bnorm;

        out.report.iterations = k;
        out.report.residual_history.push_back(res);
        out.report.final_residual = res;
        if (res < params.tol) {
            out.report.converged = true;
            break;
        }
        if (!std::isfinite(res) || res > kBlowupLimit) break;
    }
    return out;
}

MhssResult mhss_solve(const CsrMatrix& W, const CsrMatrix& T, const ComplexVector& b,
                      const IterParams& params) {
    const std::size_t n = b.size();
    return mhss_solve(W, T, b, params, ComplexVector(vec::zeros(n), vec::zeros(n)));
}

}  // namespace gsor
