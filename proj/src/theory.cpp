#include "gsor/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsor/cholesky.hpp"

namespace gsor {

DenseMatrix to_dense(const CsrMatrix& A) {
    DenseMatrix D(A.n_rows, A.n_cols);
    for (int i = 0; i < A.n_rows; ++i) {
        for (int k = A.row_ptr[i]; k < A.row_ptr[i + 1]; ++k) D.at(i, A.col_idx[k]) = A.values[k];
    }
    return D;
}

double optimal_alpha(double rho) {
    if (rho < 0.0) throw std::invalid_argument("optimal_alpha: rho must be nonnegative");
    return 2.0 / (1.0 + std::sqrt(1.0 + rho * rho));
}

double optimal_factor(double rho) { return 1.0 - optimal_alpha(rho); }

double convergence_bound(double rho) {
    if (rho < 0.0) throw std::invalid_argument("convergence_bound: rho must be nonnegative");
    return 2.0 / (1.0 + rho);
}

std::vector<double> jacobi_eigs_sym(const DenseMatrix& A, DenseMatrix* eigenvectors) {
    if (A.n_rows != A.n_cols) throw std::invalid_argument("jacobi_eigs_sym: matrix not square");
    const int n = A.n_rows;

    double max_abs = 0.0;
    for (double v : A.data) max_abs = std::max(max_abs, std::abs(v));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(A.at(i, j) - A.at(j, i)) > 1e-10 * std::max(max_abs, 1e-300))
                throw std::invalid_argument("jacobi_eigs_sym: matrix not symmetric");
        }
    }

    DenseMatrix M = A;
    DenseMatrix Q;
    if (eigenvectors) {
        Q = DenseMatrix(n, n);
        for (int i = 0; i < n; ++i) Q.at(i, i) = 1.0;
    }

    double fro = 0.0;
    for (double v : M.data) fro += v * v;
    fro = std::sqrt(fro);
    const double target = 1e-12 * fro;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * M.at(i, j) * M.at(i, j);
        return std::sqrt(s);
    };

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = M.at(p, q);
                if (apq == 0.0) continue;
                const double app = M.at(p, p);
                const double aqq = M.at(q, q);
                // rotation angle by the stable tangent formula
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double mkp = M.at(k, p);
                    const double mkq = M.at(k, q);
                    M.at(k, p) = c * mkp - s * mkq;
                    M.at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = M.at(p, k);
                    const double mqk = M.at(q, k);
                    M.at(p, k) = c * mpk - s * mqk;
                    M.at(q, k) = s * mpk + c * mqk;
                }
                if (eigenvectors) {
                    for (int k = 0; k < n; ++k) {
                        const double qkp = Q.at(k, p);
                        const double qkq = Q.at(k, q);
                        Q.at(k, p) = c * qkp - s * qkq;
                        Q.at(k, q) = s * qkp + c * qkq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&M](int a, int b) { return M.at(a, a) < M.at(b, b); });

    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = M.at(order[i], order[i]);
    if (eigenvectors) {
        *eigenvectors = DenseMatrix(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) eigenvectors->at(i, j) = Q.at(i, order[j]);
    }
    return eigs;
}

namespace {

// Z = L^{-1} (P T P^T) L^{-T}, symmetric and similar to S = W^{-1} T.
DenseMatrix similar_symmetric(const SpdFactor& F, const CsrMatrix& T) {
    const int n = F.n();
    const CsrMatrix& L = F.lower;
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[F.perm[k]] = k;

    DenseMatrix M(n, n);  // P T P^T
    for (int r = 0; r < n; ++r) {
        for (int k = T.row_ptr[r]; k < T.row_ptr[r + 1]; ++k)
            M.at(inv[r], inv[T.col_idx[k]]) = T.values[k];
    }

    auto forward_solve = [&L, n](DenseVector& v) {
        for (int i = 0; i < n; ++i) {
            double s = v[i];
            const int end = L.row_ptr[i + 1] - 1;
            for (int k = L.row_ptr[i]; k < end; ++k) s -= L.values[k] * v[L.col_idx[k]];
            v[i] = s / L.values[end];
        }
    };

    DenseVector work(n);
    DenseMatrix C(n, n);  // L^{-1} M
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) work[i] = M.at(i, j);
        forward_solve(work);
        for (int i = 0; i < n; ++i) C.at(i, j) = work[i];
    }
    DenseMatrix Z(n, n);  // (L^{-1} C^T)^T = C L^{-T}
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work[j] = C.at(i, j);
        forward_solve(work);
        for (int j = 0; j < n; ++j) Z.at(i, j) = work[j];
    }
    // symmetrize away the solve round-off before the rotation sweep
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (Z.at(i, j) + Z.at(j, i));
            Z.at(i, j) = Z.at(j, i) = v;
        }
    }
    return Z;
}

}  // namespace

std::vector<double> s_eigenvalues(const CsrMatrix& W, const CsrMatrix& T) {
    if (!W.is_square() || !T.is_square() || W.n_rows != T.n_rows)
        throw std::invalid_argument("s_eigenvalues: W and T must be square of equal order");
    const SpdFactor F = cholesky(W);
    return jacobi_eigs_sym(similar_symmetric(F, T));
}

SEigenData s_eigen_decomposition(const CsrMatrix& W, const CsrMatrix& T) {
    if (!W.is_square() || !T.is_square() || W.n_rows != T.n_rows)
        throw std::invalid_argument("s_eigen_decomposition: W and T must be square of equal order");
    const int n = W.n_rows;
    const SpdFactor F = cholesky(W);
    const CsrMatrix& L = F.lower;

    SEigenData out;
    DenseMatrix Q;
    out.mu = jacobi_eigs_sym(similar_symmetric(F, T), &Q);

    // map Z-eigenvectors back to S-eigenvectors: v = P^T L^{-T} q
    out.vectors = DenseMatrix(n, n);
    DenseVector y(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) y[i] = Q.at(i, j);
        for (int i = n - 1; i >= 0; --i) {
            const int end = L.row_ptr[i + 1] - 1;
            y[i] /= L.values[end];
            const double yi = y[i];
            for (int k = L.row_ptr[i]; k < end; ++k) y[L.col_idx[k]] -= L.values[k] * yi;
        }
        for (int i = 0; i < n; ++i) out.vectors.at(F.perm[i], j) = y[i];
    }
    return out;
}

SpectrumResult gsor_spectrum(const std::vector<double>& mu, double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("gsor_spectrum: alpha must be nonzero");
    SpectrumResult result;
    result.mu = mu;
    result.lambda.reserve(2 * mu.size());
    result.precond_eigs.reserve(2 * mu.size());

    const double c = (alpha - 1.0) * (alpha - 1.0);
    for (double m : mu) {
        const double am2 = alpha * alpha * m * m;
        const double b = am2 + 2.0 * alpha - 2.0;
        double disc = am2 * (am2 + 4.0 * alpha - 4.0);  // = b^2 - 4c
        // a discriminant within rounding distance of zero is a double root;
        // without the clamp the tangency case splits by sqrt(eps)
        const double noise = 8.0 * std::numeric_limits<double>::epsilon() * am2 *
                             (am2 + 4.0 * std::abs(alpha) + 4.0);
        if (std::abs(disc) <= noise) disc = 0.0;
        std::complex<double> l1, l2;
        if (disc < 0.0) {
            const double im = 0.5 * std::sqrt(-disc);
            l1 = {-0.5 * b, im};
            l2 = {-0.5 * b, -im};
        } else {
            // larger-magnitude root first, companion from the product of roots
            const double sq = std::sqrt(disc);
            const double qroot = -0.5 * (b + (b >= 0.0 ? sq : -sq));
            l1 = qroot;
            l2 = (qroot != 0.0) ? c / qroot : 0.0;
        }
        result.lambda.push_back(l1);
        result.lambda.push_back(l2);
        result.precond_eigs.push_back((1.0 - l1) / alpha);
        result.precond_eigs.push_back((1.0 - l2) / alpha);
    }
    return result;
}

double max_abs_lambda(const std::vector<double>& mu, double alpha) {
    const SpectrumResult sr = gsor_spectrum(mu, alpha);
    double m = 0.0;
    for (const auto& l : sr.lambda) m = std::max(m, std::abs(l));
    return m;
}

}  // namespace gsor
