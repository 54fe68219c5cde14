#include "gsor/krylov.hpp"

#include <cmath>

namespace gsor {

LinearOperator block_operator(const BlockSystem& sys) {
    const int n = sys.n();
    return {2 * n, [&sys, n](const DenseVector& v) {
                if (static_cast<int>(v.size()) != 2 * n)
                    throw std::invalid_argument("block_operator: dimension mismatch");
                DenseVector x(v.begin(), v.begin() + n);
                DenseVector y(v.begin() + n, v.end());
                auto [top, bottom] = apply_block_A(sys, x, y);
                DenseVector out(2 * n);
                std::copy(top.begin(), top.end(), out.begin());
                std::copy(bottom.begin(), bottom.end(), out.begin() + n);
                return out;
            }};
}

std::pair<DenseVector, DenseVector> gsor_precond_apply(const SpdFactor& Wf, const CsrMatrix& T,
                                                       double alpha, const DenseVector& r,
                                                       const DenseVector& s) {
    const int n = Wf.n();
    if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n || T.n_rows != n)
        throw std::invalid_argument("gsor_precond_apply: dimension mismatch");

    DenseVector t = vec::combine(1.0, spd_apply(Wf, r), -1.0, spmv(T, s));
    DenseVector u = vec::combine(1.0, spmv(T, r), 1.0, spd_apply(Wf, s));
    DenseVector e = solve_spd(Wf, t);
    vec::axpy(-alpha, spmv(T, e), u);
    DenseVector f = solve_spd(Wf, u);
    return {std::move(e), std::move(f)};
}

std::pair<DenseVector, DenseVector> gsor_precond_solve(const SpdFactor& Wf, const CsrMatrix& T,
                                                       double alpha, const DenseVector& r,
                                                       const DenseVector& s) {
    const int n = Wf.n();
    if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n || T.n_rows != n)
        throw std::invalid_argument("gsor_precond_solve: dimension mismatch");

    DenseVector e = solve_spd(Wf, r);
    DenseVector rhs = vec::combine(1.0, s, -alpha, spmv(T, e));
    DenseVector f = solve_spd(Wf, rhs);
    return {std::move(e), std::move(f)};
}

LinearOperator gsor_preconditioned_operator(const SpdFactor& Wf, const CsrMatrix& T, double alpha) {
    const int n = Wf.n();
    return {2 * n, [&Wf, &T, alpha, n](const DenseVector& v) {
                DenseVector r(v.begin(), v.begin() + n);
                DenseVector s(v.begin() + n, v.end());
                auto [e, f] = gsor_precond_apply(Wf, T, alpha, r, s);
                DenseVector out(2 * n);
                std::copy(e.begin(), e.end(), out.begin());
                std::copy(f.begin(), f.end(), out.begin() + n);
                return out;
            }};
}

GmresResult gmres_restart(const LinearOperator& op, const DenseVector& rhs, const GmresConfig& cfg,
                          const DenseVector& x0,
                          const std::function<double(const DenseVector&)>& residual) {
    const int n = op.dim;
    if (static_cast<int>(rhs.size()) != n || static_cast<int>(x0.size()) != n)
        throw std::invalid_argument("gmres_restart: dimension mismatch");
    if (cfg.restart < 1 || cfg.tol <= 0.0 || cfg.maxit < 1)
        throw std::invalid_argument("gmres_restart: bad configuration");

    GmresResult out;
    out.x = x0;
    const double rhs_norm = vec::norm(rhs);
    if (rhs_norm == 0.0) {
        out.x = vec::zeros(n);
        out.report.converged = true;
        return out;
    }
    auto true_res = [&](const DenseVector& xk) {
        if (residual) return residual(xk);
        return vec::norm(vec::combine(1.0, rhs, -1.0, op.apply(xk))) / rhs_norm;
    };

    {
        const double r0 = true_res(out.x);
        out.report.final_residual = r0;
        if (r0 < cfg.tol) {
            out.report.converged = true;
            out.report.residual_history.push_back(r0);
            return out;
        }
    }

    const int m = cfg.restart;
    std::vector<DenseVector> V(m + 1);
    std::vector<std::vector<double>> H(m + 1, std::vector<double>(m, 0.0));
    std::vector<double> cs(m), sn(m), g(m + 1);

    auto form_iterate = [&](int j) {
        // solve the j x j upper-triangular system from the rotated Hessenberg
        std::vector<double> yv(g.begin(), g.begin() + j);
        for (int i = j - 1; i >= 0; --i) {
            for (int k = i + 1; k < j; ++k) yv[i] -= H[i][k] * yv[k];
            yv[i] /= H[i][i];
        }
        DenseVector xk = out.x;
        for (int i = 0; i < j; ++i) vec::axpy(yv[i], V[i], xk);
        return xk;
    };

    int inner = 0;
    while (inner < cfg.maxit) {
        DenseVector r = vec::combine(1.0, rhs, -1.0, op.apply(out.x));
        const double beta = vec::norm(r);
        if (beta == 0.0) {
            out.report.converged = true;
            out.report.final_residual = true_res(out.x);
            out.report.residual_history.push_back(out.report.final_residual);
            return out;
        }
        ++out.report.iterations;
        for (auto& row : H) std::fill(row.begin(), row.end(), 0.0);
        std::fill(g.begin(), g.end(), 0.0);
        vec::scale(r, 1.0 / beta);
        V[0] = std::move(r);
        g[0] = beta;

        int j = 0;
        bool happy = false;
        while (j < m && inner < cfg.maxit) {
            DenseVector w = op.apply(V[j]);
            for (int i = 0; i <= j; ++i) {
                H[i][j] = vec::dot(V[i], w);
                vec::axpy(-H[i][j], V[i], w);
            }
            H[j + 1][j] = vec::norm(w);
            happy = H[j + 1][j] <= 1e-14 * beta;
            if (!happy) {
                vec::scale(w, 1.0 / H[j + 1][j]);
                V[j + 1] = std::move(w);
            }
            for (int i = 0; i < j; ++i) {
                const double t = cs[i] * H[i][j] + sn[i] * H[i + 1][j];
                H[i + 1][j] = -sn[i] * H[i][j] + cs[i] * H[i + 1][j];
                H[i][j] = t;
            }
            const double d = std::hypot(H[j][j], H[j + 1][j]);
            cs[j] = H[j][j] / d;
            sn[j] = H[j + 1][j] / d;
            H[j][j] = d;
            H[j + 1][j] = 0.0;
            g[j + 1] = -sn[j] * g[j];
            g[j] = cs[j] * g[j];

            ++j;
            ++inner;
            out.report.inner_iterations = inner;
            out.lsq_history.push_back(std::abs(g[j]));

            DenseVector xk = form_iterate(j);
            const double res = true_res(xk);
            out.report.final_residual = res;
            if (res < cfg.tol || happy) {
                out.x = std::move(xk);
                out.report.converged = true;
                out.report.residual_history.push_back(res);
                return out;
            }
        }

        out.x = form_iterate(j);
        const double res = true_res(out.x);
        out.report.final_residual = res;
        out.report.residual_history.push_back(res);
        if (res < cfg.tol) {
            out.report.converged = true;
            return out;
        }
    }
    return out;
}

}  // namespace gsor
