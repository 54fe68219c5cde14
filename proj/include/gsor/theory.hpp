#pragma once

#include <complex>

#include "gsor/csr.hpp"

namespace gsor {

/// Small dense row-major matrix, used by the eigenvalue oracle and the
/// spectrum export. Not meant for large problems.
struct DenseMatrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : n_rows(rows), n_cols(cols), data(std::size_t(rows) * cols, 0.0) {}

    double& at(int i, int j) { return data[std::size_t(i) * n_cols + j]; }
    double at(int i, int j) const { return data[std::size_t(i) * n_cols + j]; }
};

DenseMatrix to_dense(const CsrMatrix& A);

/// Optimal relaxation parameter 2 / (1 + sqrt(1 + rho^2)) as a function of
/// the spectral radius of S = W^{-1} T.
double optimal_alpha(double rho);

/// The spectral radius of the iteration matrix at the optimal parameter:
/// 1 - optimal_alpha(rho).
double optimal_factor(double rho);

/// Upper end of the convergence interval: the iteration converges for
/// 0 < alpha < 2 / (1 + rho).
double convergence_bound(double rho);

/// All eigenvalues of a symmetric dense matrix by cyclic Jacobi rotations,
/// sweeping until the off-diagonal Frobenius norm falls below 1e-12 times the
/// matrix Frobenius norm. Returns eigenvalues in ascending order. When
/// `eigenvectors` is non-null it receives the accumulated rotations, one
/// eigenvector per column, matching the eigenvalue order. Throws
/// std::invalid_argument for an asymmetric input.
std::vector<double> jacobi_eigs_sym(const DenseMatrix& A, DenseMatrix* eigenvectors = nullptr);

/// Eigenvalues of S = W^{-1} T for symmetric positive definite W and
/// symmetric T, ascending. Computed from the symmetric matrix
/// Z = L^{-1} (P T P^T) L^{-T}, which is similar to S (L the Cholesky factor
/// of P W P^T), so the result is real by construction. Dense-oracle regime:
/// intended for small n.
std::vector<double> s_eigenvalues(const CsrMatrix& W, const CsrMatrix& T);

/// s_eigenvalues plus the eigenvectors of S, mapped back from the symmetric
/// similarity (column j of `vectors` satisfies T v = mu[j] W v).
struct SEigenData {
    std::vector<double> mu;
    DenseMatrix vectors;
};

SEigenData s_eigen_decomposition(const CsrMatrix& W, const CsrMatrix& T);

/// Spectrum data keyed by the eigenvalues mu of S. For each mu, `lambda`
/// holds the two roots of
///
///     lambda^2 + (alpha^2 mu^2 + 2 alpha - 2) lambda + (alpha - 1)^2 = 0,
///
/// the eigenvalues of the iteration matrix G_alpha, and `precond_eigs` the
/// corresponding (1 - lambda) / alpha, the eigenvalues of the preconditioned
/// matrix P_alpha^{-1} A.
struct SpectrumResult {
    std::vector<double> mu;
    std::vector<std::complex<double>> lambda;        // 2 entries per mu
    std::vector<std::complex<double>> precond_eigs;  // (1 - lambda) / alpha
};

SpectrumResult gsor_spectrum(const std::vector<double>& mu, double alpha);

/// max |lambda| over the spectrum of G_alpha for the given mu list.
double max_abs_lambda(const std::vector<double>& mu, double alpha);

}  // namespace gsor
