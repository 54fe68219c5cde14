#include "gsor/power_method.hpp"

#include <cmath>
#include <random>

namespace gsor {

namespace {

bool all_zero(const CsrMatrix& T) {
    for (double v : T.values)
        if (v != 0.0) return false;
    return true;
}

DenseVector seeded_start(int n) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseVector v(n);
    for (double& e : v) e = dist(rng);
    return v;
}

}  // namespace

RhoEstimate power_method_rho_S(const SpdFactor& Wf, const CsrMatrix& T, double tol, int maxit) {
    const int n = Wf.n();
    if (!T.is_square() || T.n_rows != n)
        throw std::invalid_argument("power_method_rho_S: dimension mismatch");
    if (tol <= 0.0 || maxit < 1)
        throw std::invalid_argument("power_method_rho_S: bad tolerance or iteration cap");

    RhoEstimate result;
    if (all_zero(T)) {
        result.converged = true;
        return result;
    }

    DenseVector v = vec::ones(n);
    vec::scale(v, 1.0 / vec::norm(v));
    DenseVector w = spmv(T, v);

    double prev = 0.0;
    bool have_prev = false;
    int zero_streak = 0;
    bool restarted = false;

    for (int k = 1; k <= maxit; ++k) {
        result.iterations = k;
        const double wnorm = vec::norm(w);
        if (wnorm == 0.0) {
            // T v vanished; the start vector sits in T's null space
            result.value = 0.0;
            if (++zero_streak >= 10 && !restarted) {
                v = seeded_start(n);
                vec::scale(v, 1.0 / vec::norm(v));
                w = spmv(T, v);
                restarted = true;
                zero_streak = 0;
                have_prev = false;
                continue;
            }
            if (restarted) return result;  // null space hit twice: treat as rho = 0
            continue;
        }

        DenseVector y = solve_spd(Wf, w);
        const double den = vec::dot(y, w);  // y'W y, positive for nonzero y
        DenseVector w_next = spmv(T, y);
        const double num = vec::dot(y, w_next);  // y'T y
        const double est = num / den;
        result.value = std::abs(est);

        if (est == 0.0) {
            if (++zero_streak >= 10 && !restarted) {
                v = seeded_start(n);
                vec::scale(v, 1.0 / vec::norm(v));
                w = spmv(T, v);
                restarted = true;
                zero_streak = 0;
                have_prev = false;
                continue;
            }
        } else {
            zero_streak = 0;
        }

        if (have_prev && std::abs(est - prev) < tol * std::abs(est)) {
            result.converged = true;
            return result;
        }
        prev = est;
        have_prev = true;

        const double ynorm = vec::norm(y);
        v = std::move(y);
        vec::scale(v, 1.0 / ynorm);
        w = std::move(w_next);
        vec::scale(w, 1.0 / ynorm);
    }
    return result;
}

}  // namespace gsor
